#pragma once

#include <stdexcept>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "inventory/adjectives.hpp"
#include "inventory/dynamics.hpp"
#include "inventory/multiset.hpp"

namespace inventory {

// 2(max S1 - |[S1]|) + log_{sqrt2} log_{5/4}(max(c0,10)/8) + 62
double theorem_bound(Element max_s1, std::size_t distinct_s1, std::size_t c0);
// 2 max S1 + 60
std::uint64_t corollary_bound(Element max_s1);
// log_{sqrt2} log_{5/4}(max(c0,10)/8)
double loglog_term(std::size_t c0);

struct BoundReport {
    Multiset start;
    Element max_s1 = 0;
    std::size_t distinct_s1 = 0;
    std::size_t c0 = 0;
    std::size_t preperiod = 0;
    std::size_t period = 0;
    double theorem_bound = 0;
    std::uint64_t corollary_bound = 0;
    bool pass = false;
};

BoundReport check_pre_period(const Multiset& start);

enum class PredictionRule {
    fixed_point,
    small_loop,
    mature_alternation,
    mature_core,
    fallback,
};

std::string to_string(PredictionRule rule);

struct PeriodPrediction {
    std::size_t period = 0;
    PredictionRule rule = PredictionRule::fallback;
    std::size_t horizon = 0;      // iterations granted up front
    std::size_t generation = 0;   // generation at which the rule fired
    bool failed = false;          // the rules did not decide
};

std::size_t prediction_horizon(std::size_t c0);
PeriodPrediction predict_period(const Multiset& start);

enum class LoopFamily { small_table, fixed_family, two_cycle_family };

std::string to_string(LoopFamily f);

struct LoopClassification {
    std::size_t period = 0;
    LoopFamily family = LoopFamily::small_table;
    std::size_t row = 0;  // table row, only for small_table
    std::size_t n = 0;    // number of distinct elements in each member
    std::vector<Element> params;
};

struct SmallLoopRow {
    std::vector<std::string> members;  // letters a, b, c stand for free parameters
    std::size_t params;
    std::size_t period() const { return members.size(); }
};

const std::vector<SmallLoopRow>& small_loop_rows();
// Distinct values that may stand in for a row's letters.
bool admissible_params(const SmallLoopRow& row, const std::vector<Element>& params);
Cycle instantiate_row(const SmallLoopRow& row, const std::vector<Element>& params);
Cycle instantiate_family(LoopFamily family, std::size_t n, const std::vector<Element>& params);

LoopClassification classify_loop(const Cycle& loop);
Cycle instantiate(const LoopClassification& c);

class UnclassifiableLoop : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class SharpFamily { four_fold, three_two, pair_spread, repeated };

std::string to_string(SharpFamily f);
std::int64_t family_floor(SharpFamily f);

struct SharpInstance {
    Multiset start;
    std::size_t expected_preperiod = 0;
};

SharpInstance sharp_family(SharpFamily family, std::int64_t k);

std::vector<__int128> theorem65_sequence(std::size_t length);
std::string to_string_i128(__int128 v);

struct SweepOptions {
    std::size_t max_order = 6;
    Element max_element = 7;
    std::size_t threads = 1;
    std::uint64_t budget = 5'000'000;  // largest search space accepted
    std::function<void(std::size_t done, std::size_t total)> progress;
};

struct Counterexample {
    Multiset start;
    std::string check;
    std::string detail;
};

// Statistics gathered by checking one orbit.
struct OrbitChecks {
    std::size_t preperiod = 0;
    std::size_t period = 0;
    bool prediction_agreed = false;
    bool classified = false;
    std::size_t mature_generations = 0;
    std::size_t deterioration_checks = 0;
    std::size_t top_checks = 0;
    std::size_t transition_checks = 0;
    std::size_t edge_observations = 0;
    std::vector<Counterexample> failures;
};

// Every invariant asserted by the sweep, applied to a single starting value.
OrbitChecks check_orbit(const Multiset& start);

struct SweepSummary {
    std::size_t count = 0;
    std::map<std::size_t, std::size_t> period_histogram;
    std::size_t max_preperiod = 0;
    Multiset max_preperiod_start;
    std::size_t predictions_agreed = 0;
    std::size_t loops_classified = 0;
    std::size_t mature_generations = 0;
    std::size_t deterioration_checks = 0;
    std::size_t top_checks = 0;
    std::size_t transition_checks = 0;
    std::size_t edge_observations = 0;
    std::vector<Counterexample> counterexamples;

    bool passed() const { return counterexamples.empty(); }
};

std::uint64_t sweep_size(std::size_t max_order, Element max_element);
std::vector<Multiset> sweep_inputs(std::size_t max_order, Element max_element);
SweepSummary exhaustive_sweep(const SweepOptions& options);
// The same checks over an explicit list of starting values.
SweepSummary sweep_corpus(const std::vector<Multiset>& starts, std::size_t threads = 1);

struct HeightTableEntry {
    std::string label;  // e.g. "1112223*" for a family
    std::size_t expected_generation;
    std::vector<Multiset> members;
    std::string note;
};

struct HeightEntryResult {
    std::string label;
    std::string note;
    std::size_t expected_generation = 0;
    std::vector<std::pair<Multiset, std::size_t>> measured;  // (member, first max generation)
    bool pass = false;
};

struct HeightExceptionReport {
    std::vector<HeightEntryResult> entries;
    std::size_t family15_size = 0;
    std::size_t family18_size = 0;
    std::size_t swept = 0;
    std::size_t sweep_exceptions = 0;  // every swept input peaking after S_3, listed or not
    std::vector<Counterexample> counterexamples;
    bool passed() const;
};

std::vector<HeightTableEntry> height_table();
std::vector<Multiset> family_of_15();
std::vector<Multiset> family_of_18();
HeightExceptionReport check_height_exceptions();

}  // namespace inventory
