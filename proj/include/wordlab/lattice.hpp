#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "wordlab/equivalence.hpp"
#include "wordlab/word.hpp"

namespace wordlab {

inline constexpr std::size_t default_node_budget = 1'000'000;

enum class Relation {
  full,  // every -> step
  spa    // ->_a and ->_b steps only (the cover relation)
};

struct ClassGraph {
  ClassSignature signature;
  Relation relation = Relation::spa;
  std::vector<Word> nodes;  // lexicographic order
  // (from, to) indices into nodes, sorted
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::optional<std::size_t> index_of(Word const& w) const;
};

/// The whole ~2 class, by breadth-first closure of ->_spa from init.
/// ResourceError when the class has more than `budget` words.
std::vector<Word> enumerate_class(ClassSignature const& sig,
                                  std::size_t budget = default_node_budget);

ClassGraph cover_graph(ClassSignature const& sig, Relation relation,
                       std::size_t budget = default_node_budget);

/// Greatest lower bound in the order u <= v iff u ->* v. DomainError unless
/// u ~2 v.
Word meet(Word const& u, Word const& v);
/// Least upper bound, through the order-reversing w -> exchange(mirror(w)).
Word join(Word const& u, Word const& v);

struct LatticeReport {
  std::size_t class_size = 0;
  std::uint64_t partition_count = 0;
  bool extremes_ok = false;    // single source init, single sink final
  bool covers_match = false;   // Part_p maps spa edges onto Brylawski covers
  bool bounds_unique = false;  // every pair has a unique meet and join
  bool bounds_agree = false;   // and they equal meet() / join()

  bool ok() const noexcept {
    return class_size == partition_count && extremes_ok && covers_match
           && bounds_unique && bounds_agree;
  }
};

LatticeReport lattice_report(ClassSignature const& sig,
                             std::size_t budget = default_node_budget);

bool verify_lattice(ClassSignature const& sig,
                    std::size_t budget = default_node_budget);

/// Words reachable from w by one fair step: a fair factor replaced by a
/// different fair word with the same Parikh vector. Sorted.
std::vector<Word> fair_neighbors(Word const& w);

}  // namespace wordlab
