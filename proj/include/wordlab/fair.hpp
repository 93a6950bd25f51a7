#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "wordlab/word.hpp"

namespace wordlab {

using Rational = boost::rational<std::int64_t>;

inline constexpr std::size_t brute_count_bound = 20;
inline constexpr std::size_t signed_count_bound = 24;
inline constexpr std::size_t tm_audit_bound = 256;

/// Delta_ab(w) = binom(w, ab) - binom(w, ba) for every letter pair a < b of
/// the alphabet.
std::map<std::pair<char, char>, std::int64_t> deltas(Word const& w);

bool is_fair(Word const& w);

struct LeastSquares {
  Rational alpha;
  Rational beta;
};

struct FairAnalysis {
  Word word;
  std::map<std::pair<char, char>, std::int64_t> deltas;
  bool fair = false;
  std::optional<LeastSquares> fit;         // binary words of length >= 2
  std::optional<std::size_t> fair_length;  // undefined for the empty word
};

FairAnalysis analyze(Word const& w);

enum class CountMethod { brute, signed_sum };

/// Number of binary fair words of length n. ResourceError above `bound`
/// (defaults: 20 for brute, 24 for signed_sum). `jobs` only affects brute.
std::uint64_t fair_count(std::size_t n, CountMethod method,
                         std::optional<std::size_t> bound = std::nullopt,
                         int jobs = 0);

/// f(n) / (2^(2 floor((n-1)/2) + 1) sqrt(3/pi) floor(n/2)^(-3/2)).
double fair_asymptotic_ratio(std::size_t n);

/// Exact minimizer of sum_i (alpha + i beta - w_i)^2 over i = 1..|w|, with
/// a -> 0 and b -> 1. DomainError for |w| < 2.
LeastSquares least_squares_fit(Word const& w);

/// (is_fair(w), S_b(w) == S_b(mirror(w))).
std::pair<bool, bool> fair_iff_reverse_sum(Word const& w);

/// Fewest nonempty fair (palindromic) factors whose product is w.
/// DomainError on the empty word.
std::size_t fair_length(Word const& w);
std::size_t palindromic_length(Word const& w);

/// Distinct fair factors of w, the empty word included, ordered by length
/// then lexicographically.
std::vector<Word> fair_factor_census(Word const& w);

/// Palindromic balanced fair word with k a's and l b's. DomainError when
/// both are odd.
Word construct_balanced_fair(std::size_t k, std::size_t l);

/// Same letter counts and the same Delta for every letter pair.
bool syntactic_fair_equivalent(Word const& u, Word const& v);

/// Largest fair length over the factors of the Thue-Morse prefix of length
/// max_len. ResourceError above `bound`.
std::size_t thue_morse_fair_length_audit(std::size_t max_len,
                                         std::size_t bound = tm_audit_bound,
                                         int jobs = 0);

}  // namespace wordlab
