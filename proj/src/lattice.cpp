#include "wordlab/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_set>

#include "wordlab/error.hpp"
#include "wordlab/partitions.hpp"

namespace wordlab {

std::optional<std::size_t> ClassGraph::index_of(Word const& w) const {
  auto const it = std::lower_bound(nodes.begin(), nodes.end(), w);
  if (it == nodes.end() || !(*it == w)) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - nodes.begin());
}

std::vector<Word> enumerate_class(ClassSignature const& sig, std::size_t budget) {
  validate(sig);
  auto const expected = count_partitions(sig.m, sig.nb, sig.na);
  if (expected > budget) {
    throw ResourceError("class " + std::to_string(sig.na) + "," + std::to_string(sig.nb)
                        + "," + std::to_string(sig.m) + " has " + std::to_string(expected)
                        + " words, over the budget of " + std::to_string(budget));
  }
  auto const start = init_word(sig);
  std::unordered_set<std::string> seen{start.str()};
  std::vector<Word> out{start};
  std::deque<Word> frontier{start};
  while (!frontier.empty()) {
    auto const u = std::move(frontier.front());
    frontier.pop_front();
    for (auto& v : spa_successors(u)) {
      if (seen.insert(v.str()).second) {
        if (seen.size() > budget) {
          throw ResourceError("class enumeration exceeded the node budget");
        }
        out.push_back(v);
        frontier.push_back(std::move(v));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClassGraph cover_graph(ClassSignature const& sig, Relation relation, std::size_t budget) {
  ClassGraph g{sig, relation, enumerate_class(sig, budget), {}};
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    auto const next = relation == Relation::spa ? spa_successors(g.nodes[i])
                                                : rewrite_successors(g.nodes[i]);
    for (auto const& v : next) {
      g.edges.emplace_back(i, *g.index_of(v));
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

void require_equivalent(Word const& u, Word const& v, char const* op) {
  require_binary(u, op);
  require_binary(v, op);
  if (!(signature_of(u) == signature_of(v))) {
    throw DomainError(std::string(op) + ": words are not 2-binomially equivalent");
  }
}

Word dual(Word const& w) { return exchange_letters(mirror(w)); }

}  // namespace

Word meet(Word const& u, Word const& v) {
  require_equivalent(u, v, "meet");
  auto const sig = signature_of(u);
  return word_from_partition(dominance_meet(part_p(u), part_p(v)), sig.nb, sig.na);
}

Word join(Word const& u, Word const& v) {
  require_equivalent(u, v, "join");
  return dual(meet(dual(u), dual(v)));
}

namespace {

// Row i holds every node reachable from i (including i itself).
using Bits = std::vector<std::uint64_t>;

std::vector<Bits> reachability(ClassGraph const& g) {
  std::size_t const n = g.nodes.size();
  std::size_t const words = (n + 63) / 64;
  std::vector<Bits> reach(n, Bits(words, 0));
  std::vector<std::vector<std::size_t>> out(n);
  for (auto [a, b] : g.edges) {
    out[a].push_back(b);
  }
  // Edges go up in lexicographic order, so reverse node order is a valid
  // processing order.
  for (std::size_t i = n; i-- > 0;) {
    reach[i][i / 64] |= std::uint64_t{1} << (i % 64);
    for (auto j : out[i]) {
      for (std::size_t t = 0; t < words; ++t) {
        reach[i][t] |= reach[j][t];
      }
    }
  }
  return reach;
}

bool test(Bits const& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

}  // namespace

LatticeReport lattice_report(ClassSignature const& sig, std::size_t budget) {
  LatticeReport r;
  auto const g = cover_graph(sig, Relation::spa, budget);
  std::size_t const n = g.nodes.size();
  r.class_size = n;
  r.partition_count = count_partitions(sig.m, sig.nb, sig.na);

  std::vector<bool> has_in(n, false);
  std::vector<bool> has_out(n, false);
  for (auto [a, b] : g.edges) {
    has_out[a] = true;
    has_in[b] = true;
  }
  r.extremes_ok = std::count(has_in.begin(), has_in.end(), false) == 1
                  && std::count(has_out.begin(), has_out.end(), false) == 1
                  && !has_in[*g.index_of(init_word(sig))]
                  && !has_out[*g.index_of(final_word(sig))];

  // Spa edges, seen through Part_p, against the Brylawski covers of the
  // bounded partitions of m.
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> from_edges;
  for (auto [a, b] : g.edges) {
    from_edges.emplace(part_p(g.nodes[b]).parts(), part_p(g.nodes[a]).parts());
  }
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> from_covers;
  std::set<std::vector<std::size_t>> images;
  for (auto const& w : g.nodes) {
    images.insert(part_p(w).parts());
  }
  bool bijective = images.size() == n;
  for (auto const& lambda : bounded_partitions(sig.m, sig.nb, sig.na)) {
    bijective = bijective && images.count(lambda.parts()) == 1;
    for (auto const& [mu, rule] : brylawski_covers(lambda)) {
      from_covers.emplace(lambda.parts(), mu.parts());
    }
  }
  r.covers_match = bijective && from_edges == from_covers;

  auto const up = reachability(g);
  // down[i]: nodes that reach i
  std::size_t const words = (n + 63) / 64;
  std::vector<Bits> down(n, Bits(words, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (test(up[i], j)) {
        down[j][i / 64] |= std::uint64_t{1} << (i % 64);
      }
    }
  }

  // In a finite poset the greatest common lower bound, if it exists, is the
  // unique lower bound that every other lower bound reaches.
  auto bound_of = [&](std::vector<Bits> const& below, std::size_t x,
                      std::size_t y) -> std::optional<std::size_t> {
    std::optional<std::size_t> found;
    for (std::size_t z = 0; z < n; ++z) {
      if (!test(below[x], z) || !test(below[y], z)) {
        continue;
      }
      bool dominates = true;
      for (std::size_t t = 0; t < words && dominates; ++t) {
        auto const common = below[x][t] & below[y][t];
        dominates = (common & ~below[z][t]) == 0;
      }
      if (dominates) {
        if (found) {
          return std::nullopt;
        }
        found = z;
      }
    }
    return found;
  };

  r.bounds_unique = true;
  r.bounds_agree = true;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x; y < n; ++y) {
      auto const lo = bound_of(down, x, y);
      auto const hi = bound_of(up, x, y);
      if (!lo || !hi) {
        r.bounds_unique = false;
        continue;
      }
      if (!(g.nodes[*lo] == meet(g.nodes[x], g.nodes[y]))
          || !(g.nodes[*hi] == join(g.nodes[x], g.nodes[y]))) {
        r.bounds_agree = false;
      }
    }
  }
  return r;
}

bool verify_lattice(ClassSignature const& sig, std::size_t budget) {
  return lattice_report(sig, budget).ok();
}

std::vector<Word> fair_neighbors(Word const& w) {
  require_binary(w, "fair_neighbors");
  auto const& s = w.str();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Word>> fair_by_psi;
  std::vector<Word> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    std::size_t na = 0;
    std::uint64_t ab = 0;
    for (std::size_t j = i; j < s.size(); ++j) {
      if (s[j] == 'a') {
        ++na;
      } else {
        ab += na;
      }
      std::size_t const nb = j + 1 - i - na;
      if (2 * ab != static_cast<std::uint64_t>(na) * nb) {
        continue;
      }
      auto& fair = fair_by_psi[{na, nb}];
      if (fair.empty()) {
        fair = enumerate_class({na, nb, ab});
      }
      for (auto const& f : fair) {
        if (f.view() != std::string_view(s).substr(i, j + 1 - i)) {
          out.push_back(Word::binary(s.substr(0, i) + f.str() + s.substr(j + 1)));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace wordlab
