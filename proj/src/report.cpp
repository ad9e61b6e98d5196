#include "inventory/report.hpp"

namespace inventory {

json to_json(const Multiset& s) {
    json out = json::array();
    for (auto [x, m] : s.entries()) out.push_back({x, m});
    return out;
}

json to_json(const AdjectiveState& a) {
    return {{"ones", a.ones}, {"core", to_json(a.core)}, {"top", a.top}};
}

json to_json(const OrbitReport& r) {
    json trace = json::array();
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const auto& g = r.trace[i];
        json row{{"generation", i},
                 {"state", to_json(g.state)},
                 {"notation", format_notation(g.state)},
                 {"order", g.order},
                 {"height", g.height},
                 {"distinct_adjectives", g.distinct_adjectives}};
        if (g.adjectives) row["adjectives"] = to_json(*g.adjectives);
        trace.push_back(std::move(row));
    }
    json loop = json::array();
    for (const Multiset& s : r.loop) loop.push_back(format_notation(s));
    return {{"start", to_json(r.start)}, {"preperiod", r.preperiod}, {"period", r.period},
            {"loop", loop},              {"trace", trace}};
}

json to_json(const AncestryTree& t) {
    json nodes = json::array();
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& n = t.nodes[i];
        nodes.push_back({{"id", i},
                         {"value", to_json(n.value)},
                         {"notation", format_notation(n.value)},
                         {"depth", n.depth},
                         {"parents", n.parents},
                         {"terminal", to_string(n.terminal)}});
    }
    return {{"root", to_json(t.root())}, {"max_depth", t.max_depth}, {"complete", t.complete}, {"nodes", nodes}};
}

namespace {

json to_json(const SymElem& e) { return to_string(e); }

}  // namespace

json to_json(const BacktrackTree& t) {
    json nodes = json::array();
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& n = t.nodes[i];
        json appeared = json::array();
        for (const SymElem& e : n.state.appeared) appeared.push_back(to_json(e));
        json row{{"id", i},
                 {"depth", n.depth},
                 {"ones", to_json(n.state.ones)},
                 {"core", format_notation(n.state.core)},
                 {"new", to_string(n.fresh)},
                 {"appeared", appeared},
                 {"occurrences", n.occurrences},
                 {"leaf", to_string(n.reason)}};
        row["parent"] = n.parent == BacktrackNode::no_parent ? json(nullptr) : json(n.parent);
        row["top"] = n.state.top ? to_json(*n.state.top) : json(nullptr);
        if (!n.detail.empty()) row["detail"] = n.detail;
        nodes.push_back(std::move(row));
    }
    return {{"target", {format_notation(t.target.first), format_notation(t.target.second)}},
            {"complete", t.complete},
            {"node_count", t.nodes.size()},
            {"height", t.height()},
            {"max_occurrences", t.max_occurrences()},
            {"contradiction_leaves", t.leaf_count(LeafReason::contradiction)},
            {"immaturity_leaves", t.leaf_count(LeafReason::immaturity)},
            {"valid_for_n_at_least", t.valid_for_n_at_least()},
            {"nodes", nodes}};
}

json to_json(const BoundReport& r) {
    return {{"start", to_json(r.start)},
            {"max_s1", r.max_s1},
            {"distinct_s1", r.distinct_s1},
            {"c0", r.c0},
            {"preperiod", r.preperiod},
            {"period", r.period},
            {"theorem_bound", r.theorem_bound},
            {"corollary_bound", r.corollary_bound},
            {"pass", r.pass}};
}

json to_json(const PeriodPrediction& p) {
    return {{"period", p.period},
            {"rule", to_string(p.rule)},
            {"horizon", p.horizon},
            {"generation", p.generation},
            {"failed", p.failed}};
}

json to_json(const LoopClassification& c) {
    return {{"period", c.period},
            {"family", to_string(c.family)},
            {"row", c.row},
            {"n", c.n},
            {"params", c.params}};
}

json to_json(const Counterexample& c) {
    return {{"start", format_notation(c.start)}, {"check", c.check}, {"detail", c.detail}};
}

json to_json(const SweepSummary& s) {
    json histogram = json::object();
    for (auto [p, c] : s.period_histogram) histogram[std::to_string(p)] = c;
    json counterexamples = json::array();
    for (const auto& c : s.counterexamples) counterexamples.push_back(to_json(c));
    return {{"count", s.count},
            {"period_histogram", histogram},
            {"max_preperiod", s.max_preperiod},
            {"max_preperiod_start", format_notation(s.max_preperiod_start)},
            {"predictions_agreed", s.predictions_agreed},
            {"loops_classified", s.loops_classified},
            {"mature_generations", s.mature_generations},
            {"deterioration_checks", s.deterioration_checks},
            {"top_checks", s.top_checks},
            {"transition_checks", s.transition_checks},
            {"edge_observations", s.edge_observations},
            {"counterexamples", counterexamples},
            {"passed", s.passed()}};
}

json to_json(const HeightExceptionReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json measured = json::array();
        for (const auto& [s, g] : e.measured) measured.push_back({format_notation(s), g});
        json row{{"label", e.label}, {"expected", e.expected_generation}, {"measured", measured}, {"pass", e.pass}};
        if (!e.note.empty()) row["note"] = e.note;
        entries.push_back(std::move(row));
    }
    json counterexamples = json::array();
    for (const auto& c : r.counterexamples) counterexamples.push_back(to_json(c));
    return {{"entries", entries},
            {"family15_size", r.family15_size},
            {"family18_size", r.family18_size},
            {"swept", r.swept},
            {"sweep_exceptions", r.sweep_exceptions},
            {"counterexamples", counterexamples},
            {"passed", r.passed()}};
}

json to_json(const VariationOrbit& o) {
    json states = json::array();
    for (const Sigma& s : o.states) states.push_back(to_string(s));
    json out{{"start", to_string(o.start)}, {"states", states}, {"looped", o.looped}};
    if (o.looped) {
        out["preperiod"] = o.preperiod;
        out["period"] = o.period;
    }
    return out;
}

json to_json(const DivergenceResult& d) {
    json out{{"seed", to_string(d.seed)},
             {"outcome", d.looped ? "looped" : "no-cycle-within-budget"},
             {"generations", d.generations},
             {"final_order", d.final_order}};
    if (d.looped) {
        out["preperiod"] = d.preperiod;
        out["period"] = d.period;
    } else {
        out["monotone_growth_heuristic"] = d.monotone_growth;
    }
    return out;
}

json cycles_json(const std::vector<Cycle>& cycles) {
    json out = json::array();
    for (const Cycle& c : cycles) {
        json members = json::array();
        for (const Multiset& m : c) members.push_back(format_notation(m));
        out.push_back(members);
    }
    return out;
}

}  // namespace inventory
