#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "inventory/adjectives.hpp"
#include "inventory/backtrack.hpp"
#include "inventory/dynamics.hpp"
#include "inventory/multiset.hpp"
#include "inventory/variations.hpp"
#include "inventory/verify.hpp"

using namespace inventory;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
    bool pass = false;
    std::string note;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Verdict()>& body) {
    Verdict v;
    try {
        v = body();
    } catch (const std::exception& e) {
        v = {false, std::string("exception: ") + e.what()};
    }
    if (!v.pass) ++failures;
    std::printf("%s %2d %s: %s\n", v.pass ? "PASS" : "FAIL", id, title.c_str(), v.note.c_str());
    std::fflush(stdout);
}

Multiset from_entries(std::initializer_list<std::pair<const Element, Count>> e) {
    return Multiset::from_entries(Multiset::Entries(e));
}

// Digits of the template with each letter replaced by its value, read as Integer Notation.
Multiset substitute_letters(const std::string& text, const std::vector<Element>& values) {
    std::string out;
    for (char c : text) {
        if (c >= 'a' && c <= 'c')
            out += "(" + std::to_string(values.at(static_cast<std::size_t>(c - 'a'))) + ")";
        else
            out += c;
    }
    return parse_notation(out);
}

bool is_cycle_of_period(const Multiset& s, std::size_t period) {
    Multiset t = s;
    for (std::size_t i = 1; i <= period; ++i) {
        t = step(t);
        if (t == s) return i == period;
    }
    return false;
}

std::vector<Multiset> extended_corpus() {
    std::vector<Multiset> corpus;
    for (SharpFamily f :
         {SharpFamily::four_fold, SharpFamily::three_two, SharpFamily::pair_spread, SharpFamily::repeated})
        for (std::int64_t k = std::max<std::int64_t>(7, family_floor(f)); k <= 40; ++k)
            corpus.push_back(sharp_family(f, k).start);
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<int> order(16, 40), element(1, 60);
    for (int i = 0; i < 300; ++i) {
        std::vector<Element> v(static_cast<std::size_t>(order(rng)));
        for (Element& x : v) x = static_cast<Element>(element(rng));
        corpus.emplace_back(std::span<const Element>(v));
    }
    return corpus;
}

std::size_t count_check(const SweepSummary& s, const std::string& check) {
    return static_cast<std::size_t>(std::count_if(s.counterexamples.begin(), s.counterexamples.end(),
                                                  [&](const Counterexample& c) { return c.check == check; }));
}

}  // namespace

int main() {
    report(1, "fixed point of 1381", [] {
        const auto t0 = Clock::now();
        const OrbitReport r = orbit(parse_notation("1381"));
        const Multiset fixed = parse_notation("3122331418");
        const bool ok = r.period == 1 && r.loop.front() == fixed && step(fixed) == fixed;
        const double ms = seconds_since(t0) * 1000;
        std::ostringstream note;
        note << "preperiod " << r.preperiod << ", loop " << format_notation(r.loop.front()) << ", " << ms << " ms";
        return Verdict{ok && ms < 1.0, note.str()};
    });

    report(2, "longest small pre-period", [] {
        const OrbitReport r = orbit(from_entries({{6, 6}, {7, 7}}));
        std::ostringstream note;
        note << "preperiod " << r.preperiod << ", period " << r.period;
        return Verdict{r.preperiod == 12 && r.period == 3, note.str()};
    });

    report(3, "cycle census", [] {
        const auto t0 = Clock::now();
        std::size_t total = 0;
        for (std::size_t n = 1; n <= 7; ++n) total += find_gn_cycles(n).size();
        const std::vector<std::size_t> periods{1, 1, 1, 1, 2, 1, 3};
        const std::vector<Element> letters{5, 6, 7};
        const auto& rows = small_loop_rows();
        bool ok = total == 9 && rows.size() == periods.size();
        std::ostringstream note;
        note << total << " g_n cycles;";
        for (std::size_t r = 0; r < rows.size() && r < periods.size(); ++r) {
            std::vector<Element> values(letters.begin(), letters.begin() + static_cast<long>(rows[r].params));
            bool row_ok = rows[r].period() == periods[r];
            for (const auto& member : rows[r].members)
                row_ok = row_ok && is_cycle_of_period(substitute_letters(member, values), periods[r]);
            if (!row_ok) {
                note << " row " << r << " with a=5,b=6 is not a " << periods[r] << "-cycle";
                if (!admissible_params(rows[r], values)) note << " (5 already occurs in the row)";
                std::vector<Element> fresh{6, 7, 8};
                fresh.resize(rows[r].params);
                if (admissible_params(rows[r], fresh)) {
                    const Cycle c = instantiate_row(rows[r], fresh);
                    note << (is_cycle_of_period(c.front(), periods[r]) ? "; a=6,b=7 gives the cycle" : "");
                }
                note << ';';
            }
            ok = ok && row_ok;
        }
        const double s = seconds_since(t0);
        note << ' ' << s << " s";
        return Verdict{ok && s < 1.0, note.str()};
    });

    SweepSummary sweep;
    double sweep_seconds = 0;
    {
        const auto t0 = Clock::now();
        SweepOptions opts;
        opts.max_order = 6;
        opts.max_element = 7;
        opts.threads = 1;
        sweep = exhaustive_sweep(opts);
        sweep_seconds = seconds_since(t0);
    }

    report(4, "universal period bound", [&] {
        bool periods_ok = true;
        for (auto [p, c] : sweep.period_histogram) periods_ok = periods_ok && p >= 1 && p <= 3;
        const std::size_t bound_failures = count_check(sweep, "preperiod-bound") + count_check(sweep, "period");
        std::ostringstream note;
        note << sweep.count << " inputs, periods";
        for (auto [p, c] : sweep.period_histogram) note << ' ' << p << ':' << c;
        note << ", max preperiod " << sweep.max_preperiod << ", " << sweep.counterexamples.size()
             << " counterexamples, " << sweep_seconds << " s single-threaded";
        return Verdict{periods_ok && bound_failures == 0 && sweep.passed() && sweep.count == 1715 &&
                           sweep_seconds < 300,
                       note.str()};
    });

    report(5, "height-exception table", [] {
        const HeightExceptionReport r = check_height_exceptions();
        std::ostringstream note;
        std::size_t entries_ok = 0;
        for (const auto& e : r.entries) entries_ok += e.pass ? 1 : 0;
        note << entries_ok << "/" << r.entries.size() << " entries, families " << r.family15_size << " and "
             << r.family18_size << ", " << r.sweep_exceptions << " of " << r.swept
             << " swept inputs peak after S_3, " << r.counterexamples.size() << " of them unexplained";
        for (const auto& e : r.entries)
            if (!e.note.empty()) note << "; " << e.label << " " << e.note;
        return Verdict{r.passed() && r.family15_size == 15 && r.family18_size == 18, note.str()};
    });

    report(6, "sharpness families", [] {
        struct Family {
            SharpFamily kind;
            std::function<std::int64_t(std::int64_t)> formula;
            std::string text;
        };
        const std::vector<Family> families{
            {SharpFamily::four_fold, [](std::int64_t k) { return 2 * k - 2; }, "2k-2"},
            {SharpFamily::three_two, [](std::int64_t k) { return 2 * k - 2; }, "2k-2"},
            {SharpFamily::pair_spread, [](std::int64_t k) { return k + 2; }, "k+2"},
            {SharpFamily::repeated, [](std::int64_t k) { return k + 4; }, "k+4"},
        };
        bool ok = true;
        std::ostringstream note;
        for (const auto& f : families) {
            std::size_t mismatches = 0, total = 0;
            std::int64_t first_bad = -1, measured_at_bad = -1;
            for (std::int64_t k = std::max<std::int64_t>(7, family_floor(f.kind)); k <= 40; ++k) {
                const OrbitReport r = orbit(sharp_family(f.kind, k).start);
                ++total;
                if (static_cast<std::int64_t>(r.preperiod) != f.formula(k)) {
                    if (first_bad < 0) {
                        first_bad = k;
                        measured_at_bad = static_cast<std::int64_t>(r.preperiod);
                    }
                    ++mismatches;
                }
            }
            ok = ok && mismatches == 0;
            if (note.tellp() > 0) note << "; ";
            note << to_string(f.kind) << " " << f.text << ": " << total - mismatches << "/" << total;
            if (first_bad >= 0) note << " (k=" << first_bad << " measures " << measured_at_bad << ")";
        }
        return Verdict{ok, note.str()};
    });

    report(7, "64-list", [] {
        const std::vector<std::string> listed{
            "2",     "3",     "4",     "5",     "6",      "7",      "8",      "9",      "22",    "23",   "24",
            "33",    "25",    "34",    "26",    "35",     "44",     "27",     "36",     "45",    "28",   "37",
            "46",    "55",    "222",   "223",   "224",    "233",    "225",    "234",    "333",   "226",  "235",
            "244",   "334",   "227",   "236",   "245",    "335",    "344",    "2222",   "2223",  "2224", "2233",
            "2225",  "2234",  "2333",  "2226",  "2235",   "2244",   "2334",   "3333",   "22222", "22223",
            "22224", "22233", "22225", "22234", "22333",  "222222", "222223", "222224", "222233", ""};
        std::set<Multiset> expected;
        for (const auto& s : listed) expected.insert(parse_notation(s));
        const auto list = the_64_list();
        const std::set<Multiset> got(list.begin(), list.end());
        std::ostringstream note;
        note << list.size() << " generated, " << expected.size() << " expected";
        return Verdict{got == expected && list.size() == 64 && expected.size() == 64, note.str()};
    });

    report(8, "integer backtrack sequence", [] {
        const std::vector<std::string> expected{"61660878524", "68802238", "701955", "23344", "2333", "413",
                                               "127",         "51",       "28",     "17",    "13",   "10",
                                               "9",           "8",        "8",      "7",     "8"};
        const auto seq = theorem65_sequence(expected.size());
        bool ok = seq.size() == expected.size();
        for (std::size_t i = 0; ok && i < expected.size(); ++i)
            ok = to_string_i128(seq[i]) == expected[expected.size() - 1 - i];
        return Verdict{ok, "c_" + std::to_string(seq.size() - 1) + " = " + to_string_i128(seq.back())};
    });

    report(9, "backtracking properties", [] {
        const BacktrackTree small = backtrack_tree({parse_notation("222"), parse_notation("4")});
        const BacktrackTree large = backtrack_tree({parse_notation("24"), parse_notation("22")});
        std::ostringstream note;
        note << "222->4: " << small.nodes.size() << " nodes (reference 9), height " << small.height()
             << ", max occurrences " << small.max_occurrences() << "; 24->22: " << large.nodes.size()
             << " nodes (reference 682), height " << large.height() << ", max occurrences "
             << large.max_occurrences() << ", valid for n >= " << large.valid_for_n_at_least();
        const bool ok = small.complete && large.complete && small.max_occurrences() <= 1 &&
                        large.max_occurrences() <= 2 && large.height() <= 14;
        return Verdict{ok, note.str()};
    });

    report(10, "deterioration invariant", [&] {
        const SweepSummary corpus = sweep_corpus(extended_corpus(), 1);
        const std::size_t sweep_bad = count_check(sweep, "deterioration");
        const std::size_t corpus_bad = count_check(corpus, "deterioration");
        std::ostringstream note;
        note << "sweep: " << sweep.deterioration_checks << " checks (no sweep orbit reaches order 16), " << sweep_bad
             << " violations; extended corpus of " << corpus.count << ": " << corpus.deterioration_checks
             << " checks, " << corpus_bad << " violations, " << corpus.counterexamples.size()
             << " counterexamples overall";
        return Verdict{sweep_bad == 0 && corpus_bad == 0 && corpus.deterioration_checks > 0 && corpus.passed(),
                       note.str()};
    });

    report(11, "period prediction", [&] {
        std::ostringstream note;
        note << sweep.predictions_agreed << "/" << sweep.count << " agree";
        return Verdict{sweep.predictions_agreed == sweep.count && sweep.count > 0, note.str()};
    });

    report(12, "variations", [] {
        std::ostringstream note;
        bool all = true;

        // (a)
        const VariationConfig classic = classic_config();
        std::mt19937_64 rng(500);
        std::uniform_int_distribution<int> order(1, 12), element(1, 15);
        std::size_t matched = 0;
        for (int i = 0; i < 500; ++i) {
            std::vector<Element> v(static_cast<std::size_t>(order(rng)));
            for (Element& x : v) x = static_cast<Element>(element(rng));
            const Multiset s{std::span<const Element>(v)};
            if (variation_step(sigma_from_multiset(s), classic) == sigma_from_multiset(step(s))) ++matched;
        }
        const bool a = matched == 500;
        note << "(a) " << matched << "/500";

        // (b)
        const VariationConfig stig = stig_config();
        std::vector<Sigma> states{Sigma({{ExtValue::finite(0), ExtValue::finite(0)},
                                         {ExtValue::infinity(), ExtValue::finite(0)}},
                                        ExtValue::finite(1))};
        for (int i = 0; i < 10; ++i) states.push_back(variation_step(states.back(), stig));
        // The reference state leaves 0 -> 0 implicit; 0 is insignificant, so sigma_i(0) stays 0.
        const Sigma reference({{ExtValue::finite(0), ExtValue::finite(0)},
                             {ExtValue::finite(1), ExtValue::infinity()},
                             {ExtValue::finite(2), ExtValue::finite(2)},
                             {ExtValue::finite(4), ExtValue::finite(2)},
                             {ExtValue::infinity(), ExtValue::finite(2)}},
                            ExtValue::finite(1));
        const bool b = states[8] == states[10] && states[8] == reference;
        note << "; (b) sigma_8 = " << to_string(states[8]) << (states[7] == states[9] ? ", already sigma_7 = sigma_9" : "");

        // (c)
        const VariationConfig nounless = nounless_config(10);
        const Sigma self = sigma_from_digits("6210001000");
        const Sigma p = sigma_from_digits("7101001000"), q = sigma_from_digits("6300000100");
        const bool c = variation_step(self, nounless) == self && variation_step(p, nounless) == q &&
                       variation_step(q, nounless) == p;
        note << "; (c) " << (c ? "fixed point and 2-cycle" : "mismatch");

        // (d)
        const VariationConfig oeig = oeig_config(3);
        const VariationOrbit one = variation_orbit(sigma_from_multiset(parse_notation("1")), oeig, 1000);
        const Multiset oeig_fixed = parse_notation("31115333555544443666");
        const bool d1 = one.looped && one.period == 1 &&
                        multiset_from_sigma(one.states.back()) == std::optional<Multiset>(oeig_fixed);
        const VariationOrbit pair = variation_orbit(sigma_from_multiset(parse_notation("1381")), oeig, 1000);
        bool d2 = pair.looped && pair.period == 2;
        if (d2) {
            std::set<Multiset> adjectives;
            for (std::size_t i = pair.preperiod; i < pair.preperiod + 2; ++i) {
                auto m = multiset_from_sigma(pair.states.at(i));
                d2 = d2 && m.has_value();
                if (m) adjectives.insert(mu(*m));
            }
            d2 = d2 && adjectives == std::set<Multiset>{parse_notation("33333467"), parse_notation("33334448")};
        }
        note << "; (d) " << (d1 ? "fixed point" : "no fixed point") << ", " << (d2 ? "2-cycle" : "no 2-cycle");

        // (e)
        const auto t81 = enumerate_Tnr(8, 1), t83 = enumerate_Tnr(8, 3);
        std::set<ElementList> image;
        for (const auto& s : t81) image.insert(tnr_shift(s, 1, 3));
        const bool e = image.size() == t81.size() && image == std::set<ElementList>(t83.begin(), t83.end());
        note << "; (e) " << t81.size() << " -> " << t83.size();

        all = a && b && c && d1 && d2 && e;
        return Verdict{all, note.str()};
    });

    std::printf("%d of 12 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
