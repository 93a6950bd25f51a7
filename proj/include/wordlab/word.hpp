#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wordlab {

/// Ordered set of single-character letters. Letter order is the order of
/// `letters()`; inferred alphabets are sorted by character code.
class Alphabet {
 public:
  /// The canonical binary alphabet {a < b}.
  static Alphabet binary();

  /// Letters in the given order. Throws DomainError on duplicates,
  /// non-printable characters or an empty list.
  static Alphabet from_letters(std::string_view letters);

  /// Alphabet of a text: {a, b} when the text only uses a and b (or is
  /// empty), otherwise its distinct characters in ascending code order.
  static Alphabet infer(std::string_view text);

  std::string const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  char letter(std::size_t index) const { return letters_.at(index); }
  bool contains(char c) const noexcept;
  bool is_canonical_binary() const noexcept { return letters_ == "ab"; }

  /// Position of `c` in the letter order; DomainError when absent.
  std::size_t index_of(char c) const;

  friend bool operator==(Alphabet const&, Alphabet const&) = default;

 private:
  explicit Alphabet(std::string letters) : letters_(std::move(letters)) {}
  std::string letters_;
};

/// Immutable finite word over an alphabet.
class Word {
 public:
  /// The empty word over {a, b}.
  Word() : alphabet_(Alphabet::binary()) {}

  /// Throws DomainError when a letter is not in `alphabet`.
  Word(Alphabet alphabet, std::string letters);

  /// Parses plain ASCII with an inferred alphabet. Texts over {0, 1} are
  /// read as words over {a, b} with 0 -> a and 1 -> b.
  static Word parse(std::string_view text);
  static Word parse(std::string_view text, Alphabet const& alphabet);

  /// Shorthand for a word over the canonical binary alphabet.
  static Word binary(std::string_view letters);

  Alphabet const& alphabet() const noexcept { return alphabet_; }
  std::string const& str() const noexcept { return letters_; }
  std::string_view view() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Factor w[pos, pos + len) over the same alphabet.
  Word factor(std::size_t pos, std::size_t len) const;

  friend bool operator==(Word const& u, Word const& v) {
    return u.letters_ == v.letters_ && u.alphabet_ == v.alphabet_;
  }
  /// Lexicographic order by letter rank (alphabets assumed equal).
  friend std::strong_ordering operator<=>(Word const& u, Word const& v);

 private:
  Alphabet alphabet_;
  std::string letters_;
};

/// Cell of Rect(w): column i counts letters a, row j counts letters b.
struct GridPoint {
  std::size_t i = 0;
  std::size_t j = 0;
  friend auto operator<=>(GridPoint const&, GridPoint const&) = default;
};

// Throws DomainError unless w is over the canonical alphabet {a, b}.
void require_binary(Word const& w, char const* operation);

/// Smallest alphabet containing the letters of both alphabets, keeping the
/// canonical binary alphabet when both are binary.
Alphabet merge_alphabets(Alphabet const& x, Alphabet const& y);

std::size_t count_letter(Word const& w, char letter);

/// Number of occurrences of u as a scattered subword of w.
std::uint64_t binom(Word const& w, Word const& u);

/// Subword-count kernel on raw letter strings, O(|w| |u|).
std::uint64_t subword_count(std::string_view w, std::string_view u);

/// For each occurrence of b (left to right), the number of a's before it.
std::vector<std::size_t> a_counts_before_b(std::string_view w, char a = 'a',
                                           char b = 'b');

/// Left(w) and Right(w) for the projection of w on {a, b}, listed by row
/// then column.
std::vector<GridPoint> left_set(Word const& w, char a = 'a', char b = 'b');
std::vector<GridPoint> right_set(Word const& w, char a = 'a', char b = 'b');

/// S_b(w): sum of the 1-based positions of b in w.
std::uint64_t sum_positions(Word const& w, char b);

/// Erases every letter other than a and b.
Word project(Word const& w, char a, char b);

Word mirror(Word const& w);

/// Letter exchange a <-> b on a binary word.
Word exchange_letters(Word const& w);

bool is_palindrome(Word const& w);

/// Binary words only: equal-length factors differ by at most one a.
bool is_balanced(Word const& w);

enum class Morphism { L_a, L_b, mu, mu_squared };

/// Accepts "L_a", "La", "L_b", "Lb", "mu", "mu2" and "mu^2".
Morphism parse_morphism(std::string_view name);

Word apply_morphism(Morphism m, Word const& w);

/// First n letters of the Thue-Morse word (fixed point of mu from a).
Word thue_morse_prefix(std::size_t n);

}  // namespace wordlab
