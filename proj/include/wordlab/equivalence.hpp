#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

/// (|w|_a, |w|_b, binom(w, ab)): the key of a ~2 class of binary words.
struct ClassSignature {
  std::size_t na = 0;
  std::size_t nb = 0;
  std::uint64_t m = 0;

  friend auto operator<=>(ClassSignature const&, ClassSignature const&) = default;
};

/// DomainError when m > na * nb.
void validate(ClassSignature const& sig);

ClassSignature signature_of(Word const& w);

/// One rewrite u -> v: the factor ab at `ab_pos` becomes ba and the later
/// factor ba at `ba_pos` becomes ab.
struct Rewrite {
  std::size_t ab_pos = 0;
  std::size_t ba_pos = 0;
  Word result;
};

/// Every v with u -> v, sorted and deduplicated.
std::vector<Word> rewrite_successors(Word const& u);

/// Every v with v -> u, sorted and deduplicated.
std::vector<Word> rewrite_predecessors(Word const& u);

/// All individual rewrites applicable to u (one per position pair).
std::vector<Rewrite> rewrites(Word const& u);

/// A ->_spa step: the factor ab x ba with x in a* (->_a) or b* (->_b)
/// becomes ba x ab. With x empty the step is both.
struct SpaRewrite {
  std::size_t ab_pos = 0;
  std::size_t ba_pos = 0;
  bool via_a = false;
  bool via_b = false;
  Word result;
};

/// All ->_spa steps from u. Each ab factor has at most one partner ba.
std::vector<SpaRewrite> spa_rewrites(Word const& u);

/// Every v with u ->_spa v, sorted and deduplicated.
std::vector<Word> spa_successors(Word const& u);

struct PsiDecomposition {
  std::vector<std::pair<Word, Word>> pairs;
};

/// The unique maximal Psi-decomposition: cuts at every common proper
/// nonempty prefix length where both prefixes have the same Parikh vector.
/// DomainError when Psi(u) != Psi(v).
PsiDecomposition psi_decomposition(Word const& u, Word const& v);

/// d(u, v) = #(Left(u) symmetric-difference Left(v)), computed row by row.
std::uint64_t distance(Word const& u, Word const& v);

struct DerivationStep {
  Word word;
  // Start of the switched ab and ba factors in the previous word; empty for
  // the first step.
  std::vector<std::size_t> swap_positions;
};

struct Derivation {
  std::vector<DerivationStep> steps;
  std::size_t length() const noexcept {
    return steps.empty() ? 0 : steps.size() - 1;
  }
};

/// A shortest sequence of single rewrites (in either direction) from u to
/// v, of length d(u, v) / 2. Each step pairs a Psi-decomposition block with
/// positive binom surplus against one with negative surplus, switches an ab
/// in the first and a ba in the second. DomainError unless u ~2 v.
Derivation minimal_derivation(Word const& u, Word const& v);

/// Least element of the class: the unique member avoiding the pattern
/// ba...ab.
Word init_word(ClassSignature const& sig);

/// Greatest element of the class: the unique member avoiding ab...ba.
Word final_word(ClassSignature const& sig);

bool is_singleton_class(Word const& w);

/// Number of ~2 classes of binary words of length n: (n^3 + 5n + 6) / 6.
std::uint64_t class_count(std::uint64_t n);

}  // namespace wordlab
