#pragma once

#include <json.hpp>

#include "inventory/adjectives.hpp"
#include "inventory/backtrack.hpp"
#include "inventory/dynamics.hpp"
#include "inventory/multiset.hpp"
#include "inventory/variations.hpp"
#include "inventory/verify.hpp"

namespace inventory {

using nlohmann::json;

// [[element, multiplicity], ...] in ascending element order
json to_json(const Multiset& s);
json to_json(const AdjectiveState& a);
json to_json(const OrbitReport& r);
json to_json(const AncestryTree& t);
json to_json(const BacktrackTree& t);
json to_json(const BoundReport& r);
json to_json(const PeriodPrediction& p);
json to_json(const LoopClassification& c);
json to_json(const Counterexample& c);
json to_json(const SweepSummary& s);
json to_json(const HeightExceptionReport& r);
json to_json(const VariationOrbit& o);
json to_json(const DivergenceResult& d);
json cycles_json(const std::vector<Cycle>& cycles);

}  // namespace inventory
