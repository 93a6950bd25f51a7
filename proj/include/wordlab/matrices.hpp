#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wordlab/word.hpp"

namespace wordlab {

/// Psi(w): letter counts in alphabet order.
struct ParikhVector {
  std::vector<std::uint64_t> counts;
  friend bool operator==(ParikhVector const&, ParikhVector const&) = default;
};

ParikhVector parikh_vector(Word const& w);

enum class PrecedenceVariant {
  full,       // pMat: entry (i, j) = binom(w, a_i a_j) on both triangles
  upper_only  // pMat': lower triangle zeroed
};

/// k x k precedence matrix: diagonal holds letter counts, off-diagonal
/// (i, j) holds binom(w, a_i a_j).
class PrecedenceMatrix {
 public:
  PrecedenceMatrix(std::size_t k, PrecedenceVariant variant);

  std::size_t dimension() const noexcept { return k_; }
  PrecedenceVariant variant() const noexcept { return variant_; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return entries_[i * k_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const {
    return entries_[i * k_ + j];
  }
  std::vector<std::vector<std::uint64_t>> rows() const;

  friend bool operator==(PrecedenceMatrix const&,
                         PrecedenceMatrix const&) = default;

 private:
  std::size_t k_;
  PrecedenceVariant variant_;
  std::vector<std::uint64_t> entries_;
};

/// (k+1) x (k+1) upper unitriangular matrix with entry (i, j), i < j, equal
/// to binom(w, a_i a_{i+1} ... a_{j-1}) (0-based letter indices).
class ParikhMatrix {
 public:
  explicit ParikhMatrix(std::size_t k);  // identity of size k + 1

  std::size_t dimension() const noexcept { return n_; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }
  std::vector<std::vector<std::uint64_t>> rows() const;

  friend ParikhMatrix operator*(ParikhMatrix const& x, ParikhMatrix const& y);
  friend bool operator==(ParikhMatrix const&, ParikhMatrix const&) = default;

 private:
  std::size_t n_;
  std::vector<std::uint64_t> entries_;
};

/// Direct computation by one left-to-right scan, O(|w| k).
PrecedenceMatrix precedence_matrix(
    Word const& w, PrecedenceVariant variant = PrecedenceVariant::full);

/// Matrix of a single letter of `alphabet`.
PrecedenceMatrix letter_precedence_matrix(
    Alphabet const& alphabet, char letter,
    PrecedenceVariant variant = PrecedenceVariant::full);

/// The circ product: diagonal entries add, off-diagonal (i, j) is
/// A_ij + B_ij + A_ii B_jj. Lower triangle stays zero for pMat'.
PrecedenceMatrix circ(PrecedenceMatrix const& x, PrecedenceMatrix const& y);

/// Left fold of circ over the letter matrices of w.
PrecedenceMatrix fold_precedence(
    Word const& w, PrecedenceVariant variant = PrecedenceVariant::full);

/// Direct computation of the band subword counts, O(|w| k^2).
ParikhMatrix parikh_matrix(Word const& w);

ParikhMatrix letter_parikh_matrix(Alphabet const& alphabet, char letter);

/// Ordered product of the letter matrices of w.
ParikhMatrix fold_parikh(Word const& w);

/// u ~2 v, decided by comparing precedence matrices. Over {a, b} the
/// Psi + S_b characterization is checked as well and must agree.
bool equivalent_2binomial(Word const& u, Word const& v);

}  // namespace wordlab
