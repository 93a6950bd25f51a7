#include "wordlab/matrices.hpp"

#include <cassert>

#include "wordlab/error.hpp"

namespace wordlab {

ParikhVector parikh_vector(Word const& w) {
  auto const& alphabet = w.alphabet();
  ParikhVector psi{std::vector<std::uint64_t>(alphabet.size(), 0)};
  for (char c : w) {
    ++psi.counts[alphabet.index_of(c)];
  }
  return psi;
}

PrecedenceMatrix::PrecedenceMatrix(std::size_t k, PrecedenceVariant variant)
    : k_(k), variant_(variant), entries_(k * k, 0) {}

std::vector<std::vector<std::uint64_t>> PrecedenceMatrix::rows() const {
  std::vector<std::vector<std::uint64_t>> out(k_);
  for (std::size_t i = 0; i < k_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * k_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * k_));
  }
  return out;
}

ParikhMatrix::ParikhMatrix(std::size_t k) : n_(k + 1), entries_(n_ * n_, 0) {
  for (std::size_t i = 0; i < n_; ++i) {
    at(i, i) = 1;
  }
}

std::vector<std::vector<std::uint64_t>> ParikhMatrix::rows() const {
  std::vector<std::vector<std::uint64_t>> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i].assign(entries_.begin() + static_cast<std::ptrdiff_t>(i * n_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * n_));
  }
  return out;
}

ParikhMatrix operator*(ParikhMatrix const& x, ParikhMatrix const& y) {
  if (x.n_ != y.n_) {
    throw DomainError("Parikh matrix dimension mismatch");
  }
  ParikhMatrix product(x.n_ - 1);
  for (std::size_t i = 0; i < x.n_; ++i) {
    for (std::size_t j = 0; j < x.n_; ++j) {
      std::uint64_t sum = 0;
      for (std::size_t t = 0; t < x.n_; ++t) {
        sum += x.at(i, t) * y.at(t, j);
      }
      product.at(i, j) = sum;
    }
  }
  return product;
}

PrecedenceMatrix precedence_matrix(Word const& w, PrecedenceVariant variant) {
  auto const& alphabet = w.alphabet();
  std::size_t const k = alphabet.size();
  PrecedenceMatrix m(k, variant);
  // seen[i] = occurrences of a_i so far; an occurrence of a_j closes one
  // a_i a_j pair per earlier a_i.
  std::vector<std::uint64_t> seen(k, 0);
  for (char c : w) {
    std::size_t const j = alphabet.index_of(c);
    for (std::size_t i = 0; i < k; ++i) {
      if (i != j && (variant == PrecedenceVariant::full || i < j)) {
        m.at(i, j) += seen[i];
      }
    }
    ++seen[j];
  }
  for (std::size_t i = 0; i < k; ++i) {
    m.at(i, i) = seen[i];
  }
  return m;
}

PrecedenceMatrix letter_precedence_matrix(Alphabet const& alphabet, char letter,
                                          PrecedenceVariant variant) {
  PrecedenceMatrix m(alphabet.size(), variant);
  std::size_t const i = alphabet.index_of(letter);
  m.at(i, i) = 1;
  return m;
}

PrecedenceMatrix circ(PrecedenceMatrix const& x, PrecedenceMatrix const& y) {
  if (x.dimension() != y.dimension() || x.variant() != y.variant()) {
    throw DomainError("circ: precedence matrices of different shapes");
  }
  std::size_t const k = x.dimension();
  PrecedenceMatrix out(k, x.variant());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) {
        out.at(i, i) = x.at(i, i) + y.at(i, i);
      } else if (x.variant() == PrecedenceVariant::full || i < j) {
        out.at(i, j) = x.at(i, j) + y.at(i, j) + x.at(i, i) * y.at(j, j);
      }
    }
  }
  return out;
}

PrecedenceMatrix fold_precedence(Word const& w, PrecedenceVariant variant) {
  PrecedenceMatrix acc(w.alphabet().size(), variant);
  for (char c : w) {
    acc = circ(acc, letter_precedence_matrix(w.alphabet(), c, variant));
  }
  return acc;
}

ParikhMatrix parikh_matrix(Word const& w) {
  auto const& alphabet = w.alphabet();
  std::size_t const k = alphabet.size();
  ParikhMatrix m(k);
  // Reading letter a_q extends every occurrence of a_i ... a_{q-1} into one
  // of a_i ... a_q, i.e. entry (i, q + 1) gains entry (i, q).
  for (char c : w) {
    std::size_t const q = alphabet.index_of(c);
    for (std::size_t i = 0; i <= q; ++i) {
      m.at(i, q + 1) += m.at(i, q);
    }
  }
  return m;
}

ParikhMatrix letter_parikh_matrix(Alphabet const& alphabet, char letter) {
  ParikhMatrix m(alphabet.size());
  std::size_t const q = alphabet.index_of(letter);
  m.at(q, q + 1) = 1;
  return m;
}

ParikhMatrix fold_parikh(Word const& w) {
  ParikhMatrix acc(w.alphabet().size());
  for (char c : w) {
    acc = acc * letter_parikh_matrix(w.alphabet(), c);
  }
  return acc;
}

bool equivalent_2binomial(Word const& u, Word const& v) {
  if (!(u.alphabet() == v.alphabet())) {
    throw DomainError("equivalent_2binomial: words over different alphabets");
  }
  bool const same_matrix = precedence_matrix(u) == precedence_matrix(v);
  if (u.alphabet().is_canonical_binary()) {
    bool const same_sums = parikh_vector(u) == parikh_vector(v)
                           && sum_positions(u, 'b') == sum_positions(v, 'b');
    assert(same_matrix == same_sums);
    (void)same_sums;
  }
  return same_matrix;
}

}  // namespace wordlab
