#include "inventory/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <thread>

#include "inventory/adjectives.hpp"
#include "inventory/backtrack.hpp"
#include "inventory/dynamics.hpp"
#include "inventory/errors.hpp"
#include "inventory/report.hpp"
#include "inventory/variations.hpp"
#include "inventory/verify.hpp"

namespace inventory {

namespace {

enum class Format { text, json, dot };

struct Options {
    std::string format = "text";
    std::optional<std::size_t> max_iters;
    std::size_t max_order = 6;
    Element max_elem = 7;
    std::optional<std::uint64_t> budget;
    std::string preset = "classic";
    std::string seed;
    std::string repeat;
    std::size_t threads = 0;
    std::size_t n = 0;
    std::size_t depth = 2;
    std::size_t steps = 1;
    std::size_t length = 17;
    std::int64_t k_min = 7;
    std::int64_t k_max = 40;
    bool search = false;
    std::string check;
    std::vector<std::string> inputs;
};

constexpr int exit_ok = 0;
constexpr int exit_falsified = 1;
constexpr int exit_budget = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Format format_of(const Options& o) {
    if (o.format == "json") return Format::json;
    if (o.format == "dot") return Format::dot;
    return Format::text;
}

void require_format(Format f, std::initializer_list<Format> allowed, const std::string& command) {
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
        throw UsageError("format not supported by " + command);
}

std::size_t thread_count(const Options& o) {
    if (o.threads > 0) return o.threads;
    return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t read_number(std::string_view text, std::size_t& pos) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError("number too large", pos);
    if (ec != std::errc()) throw ParseError("expected a number", pos);
    pos = static_cast<std::size_t>(ptr - text.data());
    return v;
}

Multiset input_multiset(const Options& o, std::ostream& err) {
    if (!o.repeat.empty()) return parse_repeat(o.repeat);
    if (o.inputs.empty()) throw UsageError("missing multiset argument");
    Multiset s = parse_notation(o.inputs.front());
    if (s.empty()) err << "warning: empty multiset, which is its own fixed point\n";
    return s;
}

std::string describe(const Multiset& s) { return s.empty() ? std::string("(empty)") : format_notation(s); }

// "222->4", "222:4" or "24-22"; an empty side or "0" is the empty core.
CoreEdge parse_edge(const std::string& text) {
    std::size_t at = text.find("->");
    std::size_t skip = 2;
    if (at == std::string::npos) {
        at = text.find_first_of(":-");
        skip = 1;
    }
    if (at == std::string::npos) throw ParseError("expected FROM->TO", text.size());
    auto side = [](std::string part) {
        if (part == "0" || part == "e") part.clear();
        return parse_notation(part);
    };
    return {side(text.substr(0, at)), side(text.substr(at + skip))};
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_iterate(const Options& o, std::ostream& out, std::ostream& err) {
    Format f = format_of(o);
    require_format(f, {Format::text, Format::json}, "iterate");
    Multiset s = input_multiset(o, err);
    json states = json::array();
    for (std::size_t i = 0; i <= o.steps; ++i) {
        if (f == Format::text)
            out << "S_" << i << "  " << describe(s) << '\n';
        else
            states.push_back({{"generation", i}, {"notation", format_notation(s)}, {"state", to_json(s)}});
        if (i < o.steps) s = step(s);
    }
    if (f == Format::json) print_json(out, states);
    return exit_ok;
}

void print_adjectives(std::ostream& out, const GenerationRecord& g) {
    out << "  order=" << g.order << " height=" << g.height << " c=" << g.distinct_adjectives;
    if (g.adjectives)
        out << " ones=" << g.adjectives->ones << " R=" << describe(g.adjectives->core) << " m=" << g.adjectives->top;
}

std::string orbit_dot(const OrbitReport& r) {
    std::ostringstream dot;
    dot << "digraph orbit {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < r.trace.size(); ++i)
        dot << "  s" << i << " [label=\"" << describe(r.trace[i].state) << "\"];\n";
    for (std::size_t i = 0; i + 1 < r.trace.size(); ++i) dot << "  s" << i << " -> s" << i + 1 << ";\n";
    if (!r.trace.empty())
        dot << "  s" << r.trace.size() - 1 << " -> s" << r.preperiod << " [style=dashed];\n";
    dot << "}\n";
    return dot.str();
}

int cmd_orbit(const Options& o, std::ostream& out, std::ostream& err) {
    Format f = format_of(o);
    Multiset start = input_multiset(o, err);
    OrbitReport r = orbit(start, o.max_iters.value_or(default_max_iters));
    if (f == Format::json) {
        print_json(out, to_json(r));
        return exit_ok;
    }
    if (f == Format::dot) {
        out << orbit_dot(r);
        return exit_ok;
    }
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        out << "S_" << i << "  " << describe(r.trace[i].state);
        print_adjectives(out, r.trace[i]);
        out << '\n';
    }
    out << "preperiod " << r.preperiod << ", period " << r.period << '\n';
    if (r.period == 1) {
        out << "fixed point: " << describe(r.loop.front()) << " (reads " << format_inventory(r.loop.front()) << ")\n";
    } else {
        out << "loop:";
        for (const Multiset& s : r.loop) out << ' ' << describe(s);
        out << '\n';
    }
    return exit_ok;
}

int cmd_loops(const Options& o, std::ostream& out) {
    Format f = format_of(o);
    if (f == Format::dot) {
        if (o.n == 0) throw UsageError("--n is required for DOT output");
        out << gn_graph_dot(o.n);
        return exit_ok;
    }
    std::vector<std::size_t> ns;
    if (o.n > 0)
        ns.push_back(o.n);
    else
        for (std::size_t n = 1; n <= 7; ++n) ns.push_back(n);
    json all = json::object();
    std::size_t total = 0;
    for (std::size_t n : ns) {
        auto cycles = find_gn_cycles(n);
        total += cycles.size();
        if (f == Format::json) {
            all[std::to_string(n)] = cycles_json(cycles);
            continue;
        }
        out << "g_" << n << ": " << cycles.size() << (cycles.size() == 1 ? " cycle" : " cycles") << '\n';
        for (const Cycle& c : cycles) {
            out << "  ";
            for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " -> " : "") << describe(c[i]);
            out << '\n';
        }
    }
    if (f == Format::json)
        print_json(out, all);
    else if (ns.size() > 1)
        out << "total: " << total << '\n';
    return exit_ok;
}

void print_ancestry(const AncestryTree& t, Format f, std::ostream& out) {
    if (f == Format::json) {
        print_json(out, to_json(t));
        return;
    }
    if (f == Format::dot) {
        out << t.to_dot();
        return;
    }
    for (std::size_t d = 0; d <= t.max_depth; ++d) {
        bool header = false;
        for (const AncestryNode& n : t.nodes) {
            if (n.depth != d) continue;
            if (!header) {
                out << "depth " << d << '\n';
                header = true;
            }
            out << "  " << describe(n.value) << "  parents=" << n.parents.size();
            if (n.terminal != Terminal::none) out << "  [" << to_string(n.terminal) << ']';
            out << '\n';
        }
    }
    out << "nodes " << t.nodes.size() << (t.complete ? "" : " (incomplete)") << '\n';
}

int cmd_ancestry(const Options& o, std::ostream& out, std::ostream& err) {
    Format f = format_of(o);
    Multiset root = input_multiset(o, err);
    try {
        AncestryTree t = ancestry_tree(root, o.depth, o.budget.value_or(default_node_budget));
        print_ancestry(t, f, out);
        return exit_ok;
    } catch (const AncestryBudgetExceeded& e) {
        print_ancestry(e.partial(), f, out);
        err << "error: " << e.what() << " (budget " << e.budget() << ")\n";
        return exit_budget;
    }
}

int cmd_backtrack(const Options& o, std::ostream& out, std::ostream& err) {
    Format f = format_of(o);
    if (o.inputs.empty()) throw UsageError("missing edge argument, e.g. 24->22");
    CoreEdge edge = parse_edge(o.inputs.front());
    BacktrackTree t = backtrack_tree(edge, o.budget.value_or(default_backtrack_budget));
    if (f == Format::json) {
        print_json(out, to_json(t));
    } else if (f == Format::dot) {
        out << t.to_dot();
    } else {
        out << "edge " << describe(edge.first) << " -> " << describe(edge.second) << '\n';
        out << "nodes " << t.nodes.size() << '\n';
        out << "height " << t.height() << '\n';
        out << "max occurrences " << t.max_occurrences() << '\n';
        out << "contradiction leaves " << t.leaf_count(LeafReason::contradiction) << '\n';
        out << "immaturity leaves " << t.leaf_count(LeafReason::immaturity) << '\n';
        out << "valid for n >= " << t.valid_for_n_at_least() << '\n';
    }
    if (!t.complete) {
        err << "error: backtrack node budget " << t.budget << " exhausted\n";
        return exit_budget;
    }
    return exit_ok;
}

void print_counterexamples(const std::vector<Counterexample>& cs, std::ostream& out) {
    for (const auto& c : cs) out << "counterexample " << describe(c.start) << "  " << c.check << ": " << c.detail << '\n';
}

void print_summary(const SweepSummary& s, std::ostream& out) {
    out << "checked " << s.count << " starting values\n";
    for (auto [p, c] : s.period_histogram) out << "period " << p << ": " << c << '\n';
    out << "max preperiod " << s.max_preperiod << " at " << describe(s.max_preperiod_start) << '\n';
    out << "predictions agreed " << s.predictions_agreed << '\n';
    out << "loops classified " << s.loops_classified << '\n';
    out << "mature generations " << s.mature_generations << '\n';
    out << "deterioration checks " << s.deterioration_checks << '\n';
    out << "top checks " << s.top_checks << '\n';
    out << "transition checks " << s.transition_checks << '\n';
    out << "bounded edge observations " << s.edge_observations << '\n';
    print_counterexamples(s.counterexamples, out);
    out << (s.passed() ? "PASS" : "FAIL") << '\n';
}

int verify_sweep(const Options& o, Format f, std::ostream& out, std::ostream& err) {
    SweepOptions opts;
    opts.max_order = o.max_order;
    opts.max_element = o.max_elem;
    opts.threads = thread_count(o);
    if (o.budget) opts.budget = *o.budget;
    opts.progress = [&err](std::size_t done, std::size_t total) {
        err << "\rswept " << done << " / " << total << std::flush;
        if (done == total) err << '\n';
    };
    SweepSummary s;
    try {
        s = exhaustive_sweep(opts);
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (" << sweep_size(o.max_order, o.max_elem) << " inputs, budget "
            << e.budget() << ")\n";
        return exit_budget;
    }
    if (f == Format::json)
        print_json(out, to_json(s));
    else
        print_summary(s, out);
    return s.passed() ? exit_ok : exit_falsified;
}

int verify_bound(const Options& o, Format f, std::ostream& out, std::ostream& err) {
    BoundReport r = check_pre_period(input_multiset(o, err));
    if (f == Format::json) {
        print_json(out, to_json(r));
    } else {
        out << "start " << describe(r.start) << '\n';
        out << "max S_1 " << r.max_s1 << ", distinct S_1 " << r.distinct_s1 << ", c_0 " << r.c0 << '\n';
        out << "preperiod " << r.preperiod << ", period " << r.period << '\n';
        out << "theorem bound " << r.theorem_bound << '\n';
        out << "corollary bound " << r.corollary_bound << '\n';
        out << (r.pass ? "PASS" : "FAIL") << '\n';
    }
    return r.pass ? exit_ok : exit_falsified;
}

int verify_heights(Format f, std::ostream& out) {
    HeightExceptionReport r = check_height_exceptions();
    if (f == Format::json) {
        print_json(out, to_json(r));
    } else {
        for (const auto& e : r.entries) {
            out << e.label << "  expected S_" << e.expected_generation << "  " << (e.pass ? "ok" : "MISMATCH");
            if (!e.note.empty()) out << "  (" << e.note << ')';
            out << '\n';
            for (const auto& [s, g] : e.measured)
                if (g != e.expected_generation) out << "  " << describe(s) << " peaks at S_" << g << '\n';
        }
        out << "family of 15: " << r.family15_size << " members\n";
        out << "family of 18: " << r.family18_size << " members\n";
        out << "swept " << r.swept << ", " << r.sweep_exceptions << " peak after S_3, " << r.counterexamples.size()
            << " unexplained\n";
        print_counterexamples(r.counterexamples, out);
        out << (r.passed() ? "PASS" : "FAIL") << '\n';
    }
    return r.passed() ? exit_ok : exit_falsified;
}

int verify_families(const Options& o, Format f, std::ostream& out) {
    bool all = true;
    json rows = json::array();
    for (SharpFamily fam :
         {SharpFamily::four_fold, SharpFamily::three_two, SharpFamily::pair_spread, SharpFamily::repeated}) {
        for (std::int64_t k = std::max(o.k_min, family_floor(fam)); k <= o.k_max; ++k) {
            SharpInstance inst = sharp_family(fam, k);
            OrbitReport r = orbit(inst.start, o.max_iters.value_or(default_max_iters));
            bool ok = r.preperiod == inst.expected_preperiod;
            all = all && ok;
            if (f == Format::json) {
                rows.push_back({{"family", to_string(fam)},
                                {"k", k},
                                {"start", format_notation(inst.start)},
                                {"expected", inst.expected_preperiod},
                                {"measured", r.preperiod},
                                {"pass", ok}});
            } else {
                out << to_string(fam) << " k=" << k << "  expected " << inst.expected_preperiod << "  measured "
                    << r.preperiod << (ok ? "" : "  MISMATCH") << '\n';
            }
        }
    }
    if (f == Format::json)
        print_json(out, rows);
    else
        out << (all ? "PASS" : "FAIL") << '\n';
    return all ? exit_ok : exit_falsified;
}

int verify_classify(const Options& o, Format f, std::ostream& out, std::ostream& err) {
    OrbitReport r = orbit(input_multiset(o, err), o.max_iters.value_or(default_max_iters));
    LoopClassification c;
    try {
        c = classify_loop(r.loop);
    } catch (const UnclassifiableLoop& e) {
        err << "falsified: " << e.what() << '\n';
        return exit_falsified;
    }
    if (f == Format::json) {
        print_json(out, to_json(c));
        return exit_ok;
    }
    out << "period " << c.period << ", family " << to_string(c.family);
    if (c.family == LoopFamily::small_table) out << " row " << c.row;
    out << ", n=" << c.n << ", params";
    for (Element p : c.params) out << ' ' << p;
    out << '\n';
    return exit_ok;
}

int verify_predict(const Options& o, Format f, std::ostream& out, std::ostream& err) {
    Multiset start = input_multiset(o, err);
    PeriodPrediction p = predict_period(start);
    OrbitReport r = orbit(start, o.max_iters.value_or(default_max_iters));
    bool agreed = !p.failed && p.period == r.period;
    if (f == Format::json) {
        json j = to_json(p);
        j["actual_period"] = r.period;
        j["agreed"] = agreed;
        print_json(out, j);
    } else {
        out << "predicted period " << p.period << " by " << to_string(p.rule) << " at S_" << p.generation
            << " (horizon " << p.horizon << ")\n";
        out << "actual period " << r.period << '\n';
        out << (agreed ? "PASS" : "FAIL") << '\n';
    }
    return agreed ? exit_ok : exit_falsified;
}

int verify_seq65(const Options& o, Format f, std::ostream& out) {
    auto seq = theorem65_sequence(o.length);
    if (f == Format::json) {
        json arr = json::array();
        for (__int128 v : seq) arr.push_back(to_string_i128(v));
        print_json(out, arr);
    } else {
        for (std::size_t i = 0; i < seq.size(); ++i) out << "c_" << i << " = " << to_string_i128(seq[i]) << '\n';
    }
    return exit_ok;
}

int verify_list64(Format f, std::ostream& out) {
    if (f == Format::dot) {
        out << g_naive_graph_dot();
        return exit_ok;
    }
    auto list = the_64_list();
    if (f == Format::json) {
        json arr = json::array();
        for (const Multiset& r : list) arr.push_back(r.empty() ? std::string() : format_notation(r));
        print_json(out, arr);
    } else {
        for (const Multiset& r : list) out << describe(r) << '\n';
        out << list.size() << " cores\n";
    }
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    Format f = format_of(o);
    const std::string& c = o.check;
    if (c != "list64") require_format(f, {Format::text, Format::json}, "verify " + c);
    if (c == "sweep") return verify_sweep(o, f, out, err);
    if (c == "bound") return verify_bound(o, f, out, err);
    if (c == "heights") return verify_heights(f, out);
    if (c == "families") return verify_families(o, f, out);
    if (c == "classify") return verify_classify(o, f, out, err);
    if (c == "predict") return verify_predict(o, f, out, err);
    if (c == "seq65") return verify_seq65(o, f, out);
    return verify_list64(f, out);
}

// A seed may be Integer Notation or a comma separated list of integers
// (which may be zero or negative where the domain allows it). Finite digit
// domains read the seed as a numeral instead.
Sigma parse_seed(const std::string& text) {
    if (text.find_first_of(",-") == std::string::npos && text != "0")
        return sigma_from_multiset(parse_notation(text));
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        std::string part = text.substr(pos, end - pos);
        std::int64_t v = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size())
            throw ParseError("expected an integer", pos);
        values.push_back(v);
        pos = end + 1;
    }
    return sigma_from_values(values);
}

std::vector<Sigma> search_seeds(const VariationConfig& cfg) {
    std::int64_t lo = 1;
    if (cfg.domain.kind == DomainKind::integers_with_floor) lo = cfg.domain.parameter;
    if (cfg.domain.finite() || cfg.domain.kind == DomainKind::naturals_with_infinity)
        throw UsageError("--search needs an integer domain");
    std::vector<Sigma> seeds;
    std::vector<std::int64_t> values;
    auto rec = [&](auto&& self, std::int64_t from) -> void {
        if (!values.empty()) seeds.push_back(sigma_from_values(values));
        if (values.size() == 3) return;
        for (std::int64_t v = from; v <= lo + 4; ++v) {
            values.push_back(v);
            self(self, v);
            values.pop_back();
        }
    };
    rec(rec, lo);
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    return seeds;
}

int cmd_variation(const Options& o, std::ostream& out) {
    Format f = format_of(o);
    require_format(f, {Format::text, Format::json}, "variation");
    VariationConfig cfg = preset(o.preset);
    std::size_t iters = o.max_iters.value_or(1000);

    if (o.search) {
        auto results = divergence_search(cfg, search_seeds(cfg), o.budget.value_or(200));
        std::size_t open = 0;
        json arr = json::array();
        for (const auto& d : results) {
            if (!d.looped) ++open;
            if (f == Format::json) {
                arr.push_back(to_json(d));
                continue;
            }
            out << to_string(d.seed) << "  ";
            if (d.looped)
                out << "looped, preperiod " << d.preperiod << ", period " << d.period << '\n';
            else
                out << "no cycle within " << d.generations << " generations, order " << d.final_order
                    << (d.monotone_growth ? ", growing" : "") << '\n';
        }
        if (f == Format::json)
            print_json(out, arr);
        else
            out << results.size() << " seeds, " << open << " without a cycle\n";
        return exit_ok;
    }

    Sigma seed;
    const std::string text = !o.seed.empty() ? o.seed : o.inputs.empty() ? std::string() : o.inputs.front();
    if (!text.empty() && cfg.domain.finite())
        seed = sigma_from_digits(text);
    else if (!text.empty())
        seed = parse_seed(text);
    else if (cfg.name == "stig")
        seed = Sigma({{ExtValue::finite(0), ExtValue::finite(0)}, {ExtValue::infinity(), ExtValue::finite(0)}},
                     ExtValue::finite(1));
    else
        throw UsageError("missing --seed");

    VariationOrbit r = variation_orbit(seed, cfg, iters);
    if (f == Format::json) {
        json j = to_json(r);
        j["preset"] = cfg.name;
        print_json(out, j);
    } else {
        for (std::size_t i = 0; i < r.states.size(); ++i) {
            out << "sigma_" << i << "  " << to_string(r.states[i]);
            if (auto m = multiset_from_sigma(r.states[i]); m && !m->empty()) out << "  [" << format_notation(*m) << ']';
            out << '\n';
        }
        if (r.looped)
            out << "preperiod " << r.preperiod << ", period " << r.period << '\n';
        else
            out << "no repeat within " << iters << " iterations\n";
    }
    if (!r.looped) return exit_budget;
    return exit_ok;
}

}  // namespace

Multiset parse_repeat(std::string_view text) {
    std::vector<Element> elements;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    };
    while (true) {
        skip_space();
        std::uint64_t copies = 1;
        if (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') copies = read_number(text, pos);
        skip_space();
        if (pos >= text.size() || text[pos] != '{') throw ParseError("expected '{'", pos);
        ++pos;
        std::vector<Element> values;
        while (true) {
            skip_space();
            std::size_t at = pos;
            Element v = read_number(text, pos);
            if (v == 0) throw ParseError("elements must be positive", at);
            values.push_back(v);
            skip_space();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == '}') {
                ++pos;
                break;
            }
            throw ParseError("expected ',' or '}'", pos);
        }
        for (std::uint64_t i = 0; i < copies; ++i) elements.insert(elements.end(), values.begin(), values.end());
        skip_space();
        if (pos == text.size()) break;
        if (text[pos] != '+') throw ParseError("expected '+'", pos);
        ++pos;
    }
    return Multiset(std::span<const Element>(elements));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Inventory sequences on multisets of positive integers", "inventory"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "key=value file mirroring the flags");
    app.add_option("--format", o.format, "text, json or dot")->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--max-iters", o.max_iters, "iteration budget");
    app.add_option("--max-order", o.max_order, "largest order in a sweep");
    app.add_option("--max-elem", o.max_elem, "largest element in a sweep");
    app.add_option("--budget", o.budget, "node, input or generation budget");
    app.add_option("--preset", o.preset, "classic, stig, nounless10, oeig:R, significance:LIST, floor:-1");
    app.add_option("--seed", o.seed, "variation seed");
    app.add_option("--repeat", o.repeat, "family shorthand such as 4{4,9,10}");
    app.add_option("--threads", o.threads, "worker threads (0 for hardware parallelism)");
    app.add_option("--n", o.n, "adjective-space size");
    app.add_option("--depth", o.depth, "ancestry depth");
    app.add_option("--steps", o.steps, "iterations to print");
    app.add_option("--length", o.length, "sequence length");
    app.add_option("--k-min", o.k_min, "smallest family parameter");
    app.add_option("--k-max", o.k_max, "largest family parameter");
    app.add_flag("--search", o.search, "search seeds for orbits without a cycle");

    auto* iterate = app.add_subcommand("iterate", "print S_0 ... S_steps");
    auto* orbit_cmd = app.add_subcommand("orbit", "iterate until the orbit repeats");
    auto* loops = app.add_subcommand("loops", "cycles of g_n on adjective space");
    auto* ancestry = app.add_subcommand("ancestry", "preimage tree to a given depth");
    auto* backtrack = app.add_subcommand("backtrack", "symbolic ancestry of a core edge");
    auto* verify = app.add_subcommand("verify", "verification harnesses");
    auto* variation = app.add_subcommand("variation", "generalized inventory maps");
    for (auto* sub : {iterate, orbit_cmd, ancestry, backtrack, variation})
        sub->add_option("input", o.inputs, "multiset in Integer Notation");
    verify->add_option("check", o.check, "which harness")
        ->required()
        ->check(CLI::IsMember({"sweep", "bound", "heights", "families", "classify", "predict", "seq65", "list64"}));
    verify->add_option("input", o.inputs, "multiset in Integer Notation");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_falsified;
    }

    try {
        if (*iterate) return cmd_iterate(o, out, err);
        if (*orbit_cmd) return cmd_orbit(o, out, err);
        if (*loops) return cmd_loops(o, out);
        if (*ancestry) return cmd_ancestry(o, out, err);
        if (*backtrack) return cmd_backtrack(o, out, err);
        if (*verify) return cmd_verify(o, out, err);
        return cmd_variation(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        for (auto* sub : app.get_subcommands()) err << sub->help();
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (budget " << e.budget() << ")\n";
        return exit_budget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_falsified;
}

}  // namespace inventory
