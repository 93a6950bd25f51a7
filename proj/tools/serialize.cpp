#include "serialize.hpp"

#include <string>

namespace wordlab::serialize {

json rational(Rational const& r) {
  return {{"num", r.numerator()}, {"den", r.denominator()}};
}

json matrix(PrecedenceMatrix const& m) { return m.rows(); }

json matrix(ParikhMatrix const& m) { return m.rows(); }

json derivation(Derivation const& d) {
  json steps = json::array();
  for (auto const& s : d.steps) {
    steps.push_back({{"word", s.word.str()}, {"swap_positions", s.swap_positions}});
  }
  return steps;
}

json partition(Partition const& p) { return p.parts(); }

json signature(ClassSignature const& sig) {
  return {{"na", sig.na}, {"nb", sig.nb}, {"m", sig.m}};
}

json fair_analysis(FairAnalysis const& a) {
  json d = json::object();
  for (auto const& [pair, value] : a.deltas) {
    d[std::string{pair.first, pair.second}] = value;
  }
  json out = {{"word", a.word.str()}, {"deltas", d}, {"is_fair", a.fair}};
  if (a.fit) {
    out["fit"] = {{"alpha", rational(a.fit->alpha)}, {"beta", rational(a.fit->beta)}};
  } else {
    out["fit"] = nullptr;
  }
  if (a.fair_length) {
    out["fair_length"] = *a.fair_length;
  } else {
    out["fair_length"] = nullptr;
  }
  return out;
}

json class_graph(ClassGraph const& g) {
  json nodes = json::array();
  for (auto const& w : g.nodes) {
    nodes.push_back(w.str());
  }
  json edges = json::array();
  for (auto [a, b] : g.edges) {
    edges.push_back({g.nodes[a].str(), g.nodes[b].str()});
  }
  return {{"signature", signature(g.signature)},
          {"relation", g.relation == Relation::spa ? "spa" : "full"},
          {"nodes", nodes},
          {"edges", edges}};
}

json lattice_report(LatticeReport const& r) {
  return {{"class_size", r.class_size},       {"partition_count", r.partition_count},
          {"extremes_ok", r.extremes_ok},     {"covers_match", r.covers_match},
          {"bounds_unique", r.bounds_unique}, {"bounds_agree", r.bounds_agree},
          {"verified", r.ok()}};
}

}  // namespace wordlab::serialize
