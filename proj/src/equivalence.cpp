#include "wordlab/equivalence.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <optional>
#include <string>

#include "wordlab/error.hpp"

namespace wordlab {

void validate(ClassSignature const& sig) {
  if (sig.m > static_cast<std::uint64_t>(sig.na) * sig.nb) {
    throw DomainError("class signature: m = " + std::to_string(sig.m)
                      + " exceeds na * nb = "
                      + std::to_string(static_cast<std::uint64_t>(sig.na) * sig.nb));
  }
}

ClassSignature signature_of(Word const& w) {
  require_binary(w, "signature_of");
  auto const na = static_cast<std::size_t>(std::count(w.begin(), w.end(), 'a'));
  return {na, w.size() - na, subword_count(w.view(), "ab")};
}

std::vector<Rewrite> rewrites(Word const& u) {
  require_binary(u, "rewrites");
  std::vector<Rewrite> out;
  auto const& s = u.str();
  std::size_t const n = s.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (s[i] != 'a' || s[i + 1] != 'b') {
      continue;
    }
    for (std::size_t j = i + 2; j + 1 < n; ++j) {
      if (s[j] == 'b' && s[j + 1] == 'a') {
        std::string v = s;
        v[i] = 'b';
        v[i + 1] = 'a';
        v[j] = 'a';
        v[j + 1] = 'b';
        out.push_back({i, j, Word(u.alphabet(), std::move(v))});
      }
    }
  }
  return out;
}

namespace {

std::vector<Word> sorted_unique(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

// Proper prefix lengths where u and v have equal Parikh vectors, plus n.
std::vector<std::size_t> psi_cuts(std::string_view u, std::string_view v) {
  std::vector<std::size_t> cuts;
  long balance = 0;  // (#a in u-prefix) - (#a in v-prefix)
  for (std::size_t i = 0; i < u.size(); ++i) {
    balance += (u[i] == 'a') - (v[i] == 'a');
    if (balance == 0) {
      cuts.push_back(i + 1);
    }
  }
  return cuts;
}

void require_same_psi(Word const& u, Word const& v, char const* operation) {
  require_binary(u, operation);
  require_binary(v, operation);
  if (u.size() != v.size()
      || std::count(u.begin(), u.end(), 'a') != std::count(v.begin(), v.end(), 'a')) {
    throw DomainError(std::string(operation)
                      + ": words have different Parikh vectors");
  }
}

}  // namespace

std::vector<Word> rewrite_successors(Word const& u) {
  std::vector<Word> out;
  for (auto& r : rewrites(u)) {
    out.push_back(std::move(r.result));
  }
  return sorted_unique(std::move(out));
}

std::vector<Word> rewrite_predecessors(Word const& u) {
  require_binary(u, "rewrite_predecessors");
  std::vector<Word> out;
  auto const& s = u.str();
  std::size_t const n = s.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (s[i] != 'b' || s[i + 1] != 'a') {
      continue;
    }
    for (std::size_t j = i + 2; j + 1 < n; ++j) {
      if (s[j] == 'a' && s[j + 1] == 'b') {
        std::string v = s;
        v[i] = 'a';
        v[i + 1] = 'b';
        v[j] = 'b';
        v[j + 1] = 'a';
        out.emplace_back(u.alphabet(), std::move(v));
      }
    }
  }
  return sorted_unique(std::move(out));
}

std::vector<SpaRewrite> spa_rewrites(Word const& u) {
  require_binary(u, "spa_rewrites");
  std::vector<SpaRewrite> out;
  auto const& s = u.str();
  std::size_t const n = s.size();
  for (std::size_t i = 0; i + 3 < n; ++i) {
    if (s[i] != 'a' || s[i + 1] != 'b') {
      continue;
    }
    // The middle x must be a single-letter run starting at i + 2, so the
    // partner ba is pinned down by where that run ends.
    char const run = s[i + 2];
    std::size_t end = i + 2;
    while (end < n && s[end] == run) {
      ++end;
    }
    std::size_t j = 0;
    if (run == 'a') {
      // ab a^m ba: the run of a's is followed by b then a
      if (end + 1 >= n || s[end + 1] != 'a') {
        continue;
      }
      j = end;
    } else {
      // ab b^m ba: the last b of the run opens the ba
      if (end >= n) {
        continue;
      }
      j = end - 1;
    }
    std::size_t const middle = j - (i + 2);
    std::string v = s;
    v[i] = 'b';
    v[i + 1] = 'a';
    v[j] = 'a';
    v[j + 1] = 'b';
    out.push_back({i, j, run == 'a' || middle == 0, run == 'b' || middle == 0,
                   Word(u.alphabet(), std::move(v))});
  }
  return out;
}

std::vector<Word> spa_successors(Word const& u) {
  std::vector<Word> out;
  for (auto& r : spa_rewrites(u)) {
    out.push_back(std::move(r.result));
  }
  return sorted_unique(std::move(out));
}

PsiDecomposition psi_decomposition(Word const& u, Word const& v) {
  require_same_psi(u, v, "psi_decomposition");
  PsiDecomposition result;
  std::size_t start = 0;
  for (std::size_t cut : psi_cuts(u.view(), v.view())) {
    result.pairs.emplace_back(u.factor(start, cut - start),
                              v.factor(start, cut - start));
    start = cut;
  }
  return result;
}

std::uint64_t distance(Word const& u, Word const& v) {
  require_binary(u, "distance");
  require_binary(v, "distance");
  auto const pu = a_counts_before_b(u.view());
  auto const pv = a_counts_before_b(v.view());
  std::uint64_t d = 0;
  for (std::size_t j = 0; j < std::max(pu.size(), pv.size()); ++j) {
    std::size_t const x = j < pu.size() ? pu[j] : 0;
    std::size_t const y = j < pv.size() ? pv[j] : 0;
    d += x > y ? x - y : y - x;
  }
  return d;
}

Derivation minimal_derivation(Word const& u, Word const& v) {
  require_same_psi(u, v, "minimal_derivation");
  if (subword_count(u.view(), "ab") != subword_count(v.view(), "ab")) {
    throw DomainError("minimal_derivation: words are not 2-binomially equivalent");
  }
  Derivation derivation;
  derivation.steps.push_back({u, {}});
  std::string current = u.str();
  std::string const& target = v.str();
  [[maybe_unused]] std::uint64_t const expected = distance(u, v) / 2;

  struct Block {
    std::size_t begin;
    std::size_t end;
  };
  while (current != target) {
    std::optional<Block> surplus;  // block where current has more ab
    std::optional<Block> deficit;
    std::size_t start = 0;
    for (std::size_t cut : psi_cuts(current, target)) {
      auto const x = subword_count(std::string_view(current).substr(start, cut - start), "ab");
      auto const y = subword_count(std::string_view(target).substr(start, cut - start), "ab");
      if (x > y && !surplus) {
        surplus = Block{start, cut};
      } else if (x < y && !deficit) {
        deficit = Block{start, cut};
      }
      start = cut;
    }
    assert(surplus && deficit);
    // The surplus block starts with a and the deficit block with b, and both
    // contain each letter, so these factors exist inside their blocks.
    auto const ab_pos = current.find("ab", surplus->begin);
    auto const ba_pos = current.find("ba", deficit->begin);
    assert(ab_pos + 1 < surplus->end && ba_pos + 1 < deficit->end);
    current[ab_pos] = 'b';
    current[ab_pos + 1] = 'a';
    current[ba_pos] = 'a';
    current[ba_pos + 1] = 'b';
    derivation.steps.push_back({Word(u.alphabet(), current), {ab_pos, ba_pos}});
  }
  assert(derivation.length() == expected);
  return derivation;
}

namespace {

std::string repeat(char c, std::size_t count) { return std::string(count, c); }

}  // namespace

Word init_word(ClassSignature const& sig) {
  validate(sig);
  auto const [na, nb, m] = sig;
  if (nb == 0) {
    return Word::binary(repeat('a', na));
  }
  if (m == static_cast<std::uint64_t>(na) * nb) {
    return Word::binary(repeat('a', na) + repeat('b', nb));
  }
  // m = i * nb + j with 0 <= j < nb: a^i b^(nb-j) a b^j a^(na-i-1)
  auto const i = static_cast<std::size_t>(m / nb);
  auto const j = static_cast<std::size_t>(m % nb);
  return Word::binary(repeat('a', i) + repeat('b', nb - j) + "a" + repeat('b', j)
                      + repeat('a', na - i - 1));
}

Word final_word(ClassSignature const& sig) {
  validate(sig);
  auto const [na, nb, m] = sig;
  if (na == 0) {
    return Word::binary(repeat('b', nb));
  }
  if (m == static_cast<std::uint64_t>(na) * nb) {
    return Word::binary(repeat('a', na) + repeat('b', nb));
  }
  // m = i * na + j with 0 <= j < na: b^(nb-i-1) a^j b a^(na-j) b^i
  auto const i = static_cast<std::size_t>(m / na);
  auto const j = static_cast<std::size_t>(m % na);
  return Word::binary(repeat('b', nb - i - 1) + repeat('a', j) + "b"
                      + repeat('a', na - j) + repeat('b', i));
}

bool is_singleton_class(Word const& w) {
  auto const sig = signature_of(w);
  return init_word(sig) == final_word(sig);
}

std::uint64_t class_count(std::uint64_t n) {
  return (n * n * n + 5 * n + 6) / 6;
}

}  // namespace wordlab
