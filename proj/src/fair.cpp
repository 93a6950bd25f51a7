#include "wordlab/fair.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <string>
#include <unordered_map>

#include "wordlab/error.hpp"
#include "wordlab/kernels.hpp"

namespace wordlab {

std::map<std::pair<char, char>, std::int64_t> deltas(Word const& w) {
  std::map<std::pair<char, char>, std::int64_t> out;
  auto const& letters = w.alphabet().letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    for (std::size_t j = i + 1; j < letters.size(); ++j) {
      char const a = letters[i];
      char const b = letters[j];
      auto const ab = subword_count(w.view(), std::string{a, b});
      auto const ba = subword_count(w.view(), std::string{b, a});
      out[{a, b}] = static_cast<std::int64_t>(ab) - static_cast<std::int64_t>(ba);
    }
  }
  return out;
}

bool is_fair(Word const& w) {
  auto const d = deltas(w);
  return std::all_of(d.begin(), d.end(), [](auto const& kv) { return kv.second == 0; });
}

FairAnalysis analyze(Word const& w) {
  FairAnalysis a{w, deltas(w), false, std::nullopt, std::nullopt};
  a.fair = std::all_of(a.deltas.begin(), a.deltas.end(),
                       [](auto const& kv) { return kv.second == 0; });
  if (w.alphabet().is_canonical_binary() && w.size() >= 2) {
    a.fit = least_squares_fit(w);
  }
  if (!w.empty()) {
    a.fair_length = fair_length(w);
  }
  return a;
}

namespace {

// Sign assignments of the weights n+1-2k, k = 1..n, summing to zero.
// Meet in the middle: tabulate the sums of the first half, then look up
// the negated sums of the second.
std::uint64_t signed_sum_count(std::size_t n) {
  std::vector<std::int64_t> weights(n);
  for (std::size_t k = 1; k <= n; ++k) {
    weights[k - 1] = static_cast<std::int64_t>(n + 1) - 2 * static_cast<std::int64_t>(k);
  }
  std::size_t const half = n / 2;
  auto sums = [&](std::size_t from, std::size_t to) {
    std::vector<std::int64_t> out{0};
    for (std::size_t k = from; k < to; ++k) {
      std::vector<std::int64_t> next;
      next.reserve(out.size() * 2);
      for (auto s : out) {
        next.push_back(s + weights[k]);
        next.push_back(s - weights[k]);
      }
      out = std::move(next);
    }
    return out;
  };
  std::unordered_map<std::int64_t, std::uint64_t> left;
  for (auto s : sums(0, half)) {
    ++left[s];
  }
  std::uint64_t count = 0;
  for (auto s : sums(half, n)) {
    auto const it = left.find(-s);
    if (it != left.end()) {
      count += it->second;
    }
  }
  return count;
}

}  // namespace

std::uint64_t fair_count(std::size_t n, CountMethod method,
                         std::optional<std::size_t> bound, int jobs) {
  std::size_t const limit =
      bound.value_or(method == CountMethod::brute ? brute_count_bound : signed_count_bound);
  if (n > limit) {
    throw ResourceError("fair_count: n = " + std::to_string(n) + " exceeds the bound "
                        + std::to_string(limit) + " for this method");
  }
  if (n >= 63) {
    throw ResourceError("fair_count: n too large for 64-bit enumeration");
  }
  if (method == CountMethod::signed_sum) {
    return signed_sum_count(n);
  }
  return jobs == 1 ? kernels::fair_count_brute_serial(n)
                   : kernels::fair_count_brute_parallel(n, jobs);
}

double fair_asymptotic_ratio(std::size_t n) {
  if (n < 2) {
    throw DomainError("fair_asymptotic_ratio needs n >= 2");
  }
  auto const f = static_cast<double>(fair_count(n, CountMethod::signed_sum));
  double const half = static_cast<double>(n / 2);
  double const scale = std::ldexp(1.0, static_cast<int>(2 * ((n - 1) / 2) + 1))
                       * std::sqrt(3.0 / std::numbers::pi) * std::pow(half, -1.5);
  return f / scale;
}

LeastSquares least_squares_fit(Word const& w) {
  require_binary(w, "least_squares_fit");
  if (w.size() < 2) {
    throw DomainError("least_squares_fit needs at least two letters");
  }
  auto const n = static_cast<std::int64_t>(w.size());
  std::int64_t const sum_i = n * (n + 1) / 2;
  std::int64_t const sum_i2 = n * (n + 1) * (2 * n + 1) / 6;
  std::int64_t c1 = 0;  // number of ones
  std::int64_t s1 = 0;  // sum of their positions
  for (std::int64_t i = 1; i <= n; ++i) {
    if (w[static_cast<std::size_t>(i - 1)] == 'b') {
      ++c1;
      s1 += i;
    }
  }
  // Normal equations by Cramer's rule
  std::int64_t const det = n * sum_i2 - sum_i * sum_i;
  return {Rational(sum_i2 * c1 - sum_i * s1, det), Rational(n * s1 - sum_i * c1, det)};
}

std::pair<bool, bool> fair_iff_reverse_sum(Word const& w) {
  require_binary(w, "fair_iff_reverse_sum");
  return {is_fair(w), sum_positions(w, 'b') == sum_positions(mirror(w), 'b')};
}

namespace {

std::size_t shortest_factorization(std::size_t n,
                                   std::vector<std::vector<bool>> const& good) {
  constexpr auto inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> best(n + 1, inf);
  best[0] = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      if (best[k] != inf && good[k][j]) {
        best[j] = std::min(best[j], best[k] + 1);
      }
    }
  }
  return best[n];
}

void require_nonempty(Word const& w, char const* op) {
  if (w.empty()) {
    throw DomainError(std::string(op) + " is undefined for the empty word");
  }
}

}  // namespace

std::size_t fair_length(Word const& w) {
  require_nonempty(w, "fair_length");
  if (w.alphabet().is_canonical_binary()) {
    return kernels::fair_lengths_from(w.view(), 0, kernels::fair_factor_table(w.view()))
        .back();
  }
  std::size_t const n = w.size();
  std::vector<std::vector<bool>> fair(n + 1, std::vector<bool>(n + 1, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      fair[i][j] = is_fair(w.factor(i, j - i));
    }
  }
  return shortest_factorization(n, fair);
}

std::size_t palindromic_length(Word const& w) {
  require_nonempty(w, "palindromic_length");
  std::size_t const n = w.size();
  std::vector<std::vector<bool>> pal(n + 1, std::vector<bool>(n + 1, false));
  // grow palindromes from their centers
  for (std::size_t len = 1; len <= n; ++len) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      std::size_t const j = i + len;
      pal[i][j] = w[i] == w[j - 1] && (len <= 2 || pal[i + 1][j - 1]);
    }
  }
  return shortest_factorization(n, pal);
}

std::vector<Word> fair_factor_census(Word const& w) {
  std::set<std::string> factors;
  for (std::size_t i = 0; i <= w.size(); ++i) {
    for (std::size_t len = 0; i + len <= w.size(); ++len) {
      factors.insert(w.str().substr(i, len));
    }
  }
  std::vector<Word> out;
  for (auto const& f : factors) {
    Word word(w.alphabet(), f);
    if (is_fair(word)) {
      out.push_back(std::move(word));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](Word const& x, Word const& y) { return x.size() < y.size(); });
  return out;
}

Word construct_balanced_fair(std::size_t k, std::size_t l) {
  if (k % 2 == 1 && l % 2 == 1) {
    throw DomainError("no fair word has an odd number of both letters");
  }
  if (k == 0) {
    return Word::binary(std::string(l, 'b'));
  }
  if (l == 0) {
    return Word::binary(std::string(k, 'a'));
  }
  if (k == l) {
    std::string s;
    for (std::size_t i = 0; i < k / 2; ++i) {
      s += "ab";
    }
    for (std::size_t i = 0; i < k / 2; ++i) {
      s += "ba";
    }
    return Word::binary(s);
  }
  if (k > l) {
    auto const inner = apply_morphism(Morphism::L_a, construct_balanced_fair(k - l - 1, l));
    return Word::binary(inner.str() + "a");
  }
  auto const inner = apply_morphism(Morphism::L_b, construct_balanced_fair(k, l - k - 1));
  return Word::binary(inner.str() + "b");
}

bool syntactic_fair_equivalent(Word const& u, Word const& v) {
  auto const alphabet = merge_alphabets(u.alphabet(), v.alphabet());
  Word const x(alphabet, u.str());
  Word const y(alphabet, v.str());
  for (char c : alphabet.letters()) {
    if (count_letter(x, c) != count_letter(y, c)) {
      return false;
    }
  }
  return deltas(x) == deltas(y);
}

std::size_t thue_morse_fair_length_audit(std::size_t max_len, std::size_t bound, int jobs) {
  if (max_len > bound) {
    throw ResourceError("thue_morse_fair_length_audit: length " + std::to_string(max_len)
                        + " exceeds the bound " + std::to_string(bound));
  }
  auto const prefix = thue_morse_prefix(max_len);
  return jobs == 1 ? kernels::max_factor_fair_length_serial(prefix.view())
                   : kernels::max_factor_fair_length_parallel(prefix.view(), jobs);
}

}  // namespace wordlab
