#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

/// Non-increasing sequence of naturals. Trailing zeros are kept so that
/// partitions attached to words have a fixed number of parts; equality
/// ignores them (see `normalized`).
class Partition {
 public:
  Partition() = default;
  /// DomainError if `parts` increases somewhere or the first part exceeds
  /// `bound`.
  explicit Partition(std::vector<std::size_t> parts,
                     std::optional<std::size_t> bound = std::nullopt);

  std::vector<std::size_t> const& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::size_t operator[](std::size_t i) const { return parts_[i]; }
  std::optional<std::size_t> bound() const noexcept { return bound_; }
  std::uint64_t sum() const noexcept;
  std::size_t largest() const noexcept { return parts_.empty() ? 0 : parts_[0]; }

  /// Trailing zeros removed.
  Partition normalized() const;
  /// Zero-padded (or zero-trimmed) to exactly `length` parts; DomainError
  /// when a nonzero part would be dropped.
  Partition padded(std::size_t length) const;

  friend bool operator==(Partition const& x, Partition const& y) {
    return x.normalized().parts_ == y.normalized().parts_;
  }

 private:
  std::vector<std::size_t> parts_;
  std::optional<std::size_t> bound_;
};

/// a-counts of the b-ended prefixes, longest prefix first: |w|_b parts,
/// bounded by |w|_a, summing to binom(w, ab).
Partition part_p(Word const& w);

/// b-counts of the a-started suffixes, longest suffix first: |w|_a parts,
/// bounded by |w|_b, summing to binom(w, ab).
Partition part_s(Word const& w);

/// Transposed Ferrers diagram, with `length` parts (zero padded).
Partition conjugate(Partition const& lambda, std::size_t length);
Partition conjugate(Partition const& lambda);

/// Inverse of part_p: the word over {a, b} with |w|_a = bound, |w|_b =
/// nb_parts and part_p(w) = lambda.
Word word_from_partition(Partition const& lambda, std::size_t nb_parts,
                         std::size_t bound);

/// Inverse of part_s: the word with |w|_a = na_parts, |w|_b = bound and
/// part_s(w) = lambda.
Word word_from_suffix_partition(Partition const& lambda, std::size_t na_parts,
                                std::size_t bound);

/// mu <= lambda in dominance order (prefix sums of lambda dominate).
/// DomainError when the sums differ.
bool dominance_leq(Partition const& mu, Partition const& lambda);

/// Greatest lower bound in dominance order: the partition whose prefix
/// sums are the componentwise minimum. Inputs must have equal sums.
Partition dominance_meet(Partition const& x, Partition const& y);

enum class CoverRule {
  adjacent,    // unit moved from part j to part j + 1
  equal_parts  // unit moved from j to k where the result has mu_j = mu_k
};

/// Every mu covered by lambda in dominance order, as a one-unit move inside
/// the current number of parts. A move satisfying both rules appears once
/// per rule.
std::vector<std::pair<Partition, CoverRule>> brylawski_covers(
    Partition const& lambda);

/// lambda covers mu through a single move of the given rule.
bool covers_by_rule(Partition const& lambda, Partition const& mu, CoverRule rule);

/// Partitions of n into at most k parts, each part <= l (equivalently k
/// parts with zeros allowed). Symmetric in (k, l).
std::uint64_t count_partitions(std::uint64_t n, std::size_t k, std::size_t l);

/// Every partition of n with exactly k parts (zeros allowed) bounded by l,
/// listed in reverse lexicographic order.
std::vector<Partition> bounded_partitions(std::uint64_t n, std::size_t k,
                                          std::size_t l);

/// Outcome of checking the rewriting / cover correspondence on a pair.
struct CoverCorrespondence {
  bool a_step = false;      // u ->_a v
  bool prefix_rule1 = false;  // Part_p(v) covers Part_p(u), adjacent rule
  bool suffix_rule2 = false;  // Part_s(u) covers Part_s(v), equal-parts rule
  bool b_step = false;      // u ->_b v
  bool prefix_rule2 = false;
  bool suffix_rule1 = false;

  bool consistent() const noexcept {
    return a_step == prefix_rule1 && a_step == suffix_rule2
           && b_step == prefix_rule2 && b_step == suffix_rule1;
  }
};

CoverCorrespondence check_cover_correspondence(Word const& u, Word const& v);

}  // namespace wordlab
