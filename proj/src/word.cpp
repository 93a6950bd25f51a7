#include "wordlab/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "wordlab/error.hpp"

namespace wordlab {

Alphabet Alphabet::binary() { return Alphabet("ab"); }

Alphabet Alphabet::from_letters(std::string_view letters) {
  if (letters.empty()) {
    throw DomainError("alphabet must contain at least one letter");
  }
  std::array<bool, 256> seen{};
  for (char c : letters) {
    auto const code = static_cast<unsigned char>(c);
    if (!std::isprint(code) || std::isspace(code)) {
      throw DomainError("alphabet letters must be printable characters");
    }
    if (seen[code]) {
      throw DomainError(std::string("duplicate letter '") + c + "' in alphabet");
    }
    seen[code] = true;
  }
  return Alphabet(std::string(letters));
}

Alphabet Alphabet::infer(std::string_view text) {
  std::string letters(text);
  std::sort(letters.begin(), letters.end());
  letters.erase(std::unique(letters.begin(), letters.end()), letters.end());
  if (letters.empty() || letters == "a" || letters == "b" || letters == "ab") {
    return binary();
  }
  return from_letters(letters);
}

bool Alphabet::contains(char c) const noexcept {
  return letters_.find(c) != std::string::npos;
}

std::size_t Alphabet::index_of(char c) const {
  auto const pos = letters_.find(c);
  if (pos == std::string::npos) {
    throw DomainError(std::string("letter '") + c + "' is not in alphabet {"
                      + letters_ + "}");
  }
  return pos;
}

Word::Word(Alphabet alphabet, std::string letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (char c : letters_) {
    alphabet_.index_of(c);
  }
}

Word Word::parse(std::string_view text) {
  bool const zero_one
      = !text.empty()
        && std::all_of(text.begin(), text.end(),
                       [](char c) { return c == '0' || c == '1'; });
  if (zero_one) {
    std::string mapped(text);
    for (char& c : mapped) {
      c = (c == '0') ? 'a' : 'b';
    }
    return Word(Alphabet::binary(), std::move(mapped));
  }
  return Word(Alphabet::infer(text), std::string(text));
}

Word Word::parse(std::string_view text, Alphabet const& alphabet) {
  return Word(alphabet, std::string(text));
}

Word Word::binary(std::string_view letters) {
  return Word(Alphabet::binary(), std::string(letters));
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  return Word(alphabet_, letters_.substr(pos, len));
}

std::strong_ordering operator<=>(Word const& u, Word const& v) {
  auto const& alphabet = u.alphabet();
  std::size_t const n = std::min(u.size(), v.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] != v[i]) {
      return alphabet.index_of(u[i]) <=> alphabet.index_of(v[i]);
    }
  }
  return u.size() <=> v.size();
}

void require_binary(Word const& w, char const* operation) {
  if (!w.alphabet().is_canonical_binary()) {
    throw DomainError(std::string(operation)
                      + " requires a word over the binary alphabet {a, b}");
  }
}

Alphabet merge_alphabets(Alphabet const& x, Alphabet const& y) {
  if (x == y) {
    return x;
  }
  return Alphabet::infer(x.letters() + y.letters());
}

std::size_t count_letter(Word const& w, char letter) {
  w.alphabet().index_of(letter);
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), letter));
}

std::uint64_t subword_count(std::string_view w, std::string_view u) {
  // occurrences[k] = occurrences of u[0, k) in the prefix of w read so far
  std::vector<std::uint64_t> occurrences(u.size() + 1, 0);
  occurrences[0] = 1;
  for (char c : w) {
    for (std::size_t k = u.size(); k > 0; --k) {
      if (u[k - 1] == c) {
        occurrences[k] += occurrences[k - 1];
      }
    }
  }
  return occurrences[u.size()];
}

std::uint64_t binom(Word const& w, Word const& u) {
  for (char c : u) {
    w.alphabet().index_of(c);
  }
  return subword_count(w.view(), u.view());
}

std::vector<std::size_t> a_counts_before_b(std::string_view w, char a, char b) {
  std::vector<std::size_t> counts;
  std::size_t seen_a = 0;
  for (char c : w) {
    if (c == a) {
      ++seen_a;
    } else if (c == b) {
      counts.push_back(seen_a);
    }
  }
  return counts;
}

namespace {

void require_distinct(char a, char b) {
  if (a == b) {
    throw DomainError("Left/Right sets need two distinct letters");
  }
}

}  // namespace

std::vector<GridPoint> left_set(Word const& w, char a, char b) {
  require_distinct(a, b);
  std::vector<GridPoint> cells;
  auto const profile = a_counts_before_b(w.view(), a, b);
  for (std::size_t j = 0; j < profile.size(); ++j) {
    for (std::size_t i = 1; i <= profile[j]; ++i) {
      cells.push_back({i, j + 1});
    }
  }
  return cells;
}

std::vector<GridPoint> right_set(Word const& w, char a, char b) {
  require_distinct(a, b);
  std::vector<GridPoint> cells;
  auto const profile = a_counts_before_b(w.view(), a, b);
  std::size_t const na = static_cast<std::size_t>(std::count(w.begin(), w.end(), a));
  for (std::size_t j = 0; j < profile.size(); ++j) {
    for (std::size_t i = profile[j] + 1; i <= na; ++i) {
      cells.push_back({i, j + 1});
    }
  }
  return cells;
}

std::uint64_t sum_positions(Word const& w, char b) {
  w.alphabet().index_of(b);
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == b) {
      total += i + 1;
    }
  }
  return total;
}

Word project(Word const& w, char a, char b) {
  if (a == b) {
    throw DomainError("projection needs two distinct letters");
  }
  std::string kept;
  for (char c : w) {
    if (c == a || c == b) {
      kept.push_back(c);
    }
  }
  auto const& alphabet = w.alphabet();
  bool const a_first = !alphabet.contains(a) || !alphabet.contains(b)
                       || alphabet.index_of(a) < alphabet.index_of(b);
  std::string letters = a_first ? std::string{a, b} : std::string{b, a};
  if (letters == "ab") {
    return Word(Alphabet::binary(), std::move(kept));
  }
  return Word(Alphabet::from_letters(letters), std::move(kept));
}

Word mirror(Word const& w) {
  return Word(w.alphabet(), std::string(w.str().rbegin(), w.str().rend()));
}

Word exchange_letters(Word const& w) {
  require_binary(w, "exchange_letters");
  std::string swapped = w.str();
  for (char& c : swapped) {
    c = (c == 'a') ? 'b' : 'a';
  }
  return Word(w.alphabet(), std::move(swapped));
}

bool is_palindrome(Word const& w) {
  return std::equal(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(w.size() / 2),
                    w.str().rbegin());
}

bool is_balanced(Word const& w) {
  require_binary(w, "is_balanced");
  std::size_t const n = w.size();
  std::vector<std::size_t> prefix_a(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    prefix_a[i + 1] = prefix_a[i] + (w[i] == 'a' ? 1 : 0);
  }
  for (std::size_t len = 1; len < n; ++len) {
    std::size_t lo = prefix_a[len];
    std::size_t hi = lo;
    for (std::size_t start = 1; start + len <= n; ++start) {
      std::size_t const count = prefix_a[start + len] - prefix_a[start];
      lo = std::min(lo, count);
      hi = std::max(hi, count);
    }
    if (hi - lo > 1) {
      return false;
    }
  }
  return true;
}

Morphism parse_morphism(std::string_view name) {
  if (name == "L_a" || name == "La") {
    return Morphism::L_a;
  }
  if (name == "L_b" || name == "Lb") {
    return Morphism::L_b;
  }
  if (name == "mu") {
    return Morphism::mu;
  }
  if (name == "mu2" || name == "mu^2") {
    return Morphism::mu_squared;
  }
  throw DomainError("unknown morphism '" + std::string(name) + "'");
}

Word apply_morphism(Morphism m, Word const& w) {
  require_binary(w, "apply_morphism");
  std::string image;
  image.reserve(2 * w.size());
  for (char c : w) {
    switch (m) {
      case Morphism::L_a:
        image += (c == 'a') ? "a" : "ab";
        break;
      case Morphism::L_b:
        image += (c == 'b') ? "b" : "ba";
        break;
      case Morphism::mu:
        image += (c == 'a') ? "ab" : "ba";
        break;
      case Morphism::mu_squared:
        image += (c == 'a') ? "abba" : "baab";
        break;
    }
  }
  return Word(w.alphabet(), std::move(image));
}

Word thue_morse_prefix(std::size_t n) {
  std::string letters = "a";
  while (letters.size() < n) {
    std::string next;
    next.reserve(2 * letters.size());
    for (char c : letters) {
      next += (c == 'a') ? "ab" : "ba";
    }
    letters = std::move(next);
  }
  letters.resize(n);
  return Word::binary(letters);
}

}  // namespace wordlab
