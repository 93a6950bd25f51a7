#pragma once

#include <json.hpp>

#include "wordlab/equivalence.hpp"
#include "wordlab/fair.hpp"
#include "wordlab/lattice.hpp"
#include "wordlab/matrices.hpp"
#include "wordlab/partitions.hpp"

namespace wordlab::serialize {

using nlohmann::json;

json rational(Rational const& r);
json matrix(PrecedenceMatrix const& m);
json matrix(ParikhMatrix const& m);
json derivation(Derivation const& d);
json partition(Partition const& p);
json signature(ClassSignature const& sig);
json fair_analysis(FairAnalysis const& a);
json class_graph(ClassGraph const& g);
json lattice_report(LatticeReport const& r);

}  // namespace wordlab::serialize
