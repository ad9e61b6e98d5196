#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "dot_grammar.hpp"
#include "inventory/dynamics.hpp"
#include "inventory/errors.hpp"
#include "inventory/verify.hpp"

using namespace inventory;

namespace {

// Every P whose distinct elements are drawn from [S] with exactly |S|/2 of them,
// each multiplicity between 1 and max S. Any parent has this shape, so filtering
// by f(P) = S yields the complete parent set.
std::set<Multiset> brute_force_parents(const Multiset& s) {
    std::set<Multiset> out;
    if (s.empty() || s.order() % 2 != 0) return out;
    const std::size_t nouns = s.order() / 2;
    std::vector<Element> pool;
    for (auto [x, m] : s.entries()) pool.push_back(x);
    if (nouns > pool.size()) return out;
    std::vector<Element> chosen;
    Multiset::Entries entries;
    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (i == chosen.size()) {
            const Multiset p = Multiset::from_entries(entries);
            if (step(p) == s) out.insert(p);
            return;
        }
        for (Count m = 1; m <= s.max(); ++m) {
            entries[chosen[i]] = m;
            assign(i + 1);
        }
        entries.erase(chosen[i]);
    };
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (chosen.size() == nouns) {
            assign(0);
            return;
        }
        for (std::size_t j = from; j < pool.size(); ++j) {
            chosen.push_back(pool[j]);
            choose(j + 1);
            chosen.pop_back();
        }
    };
    choose(0);
    return out;
}

Multiset random_multiset(std::mt19937_64& rng, std::size_t min_order, std::size_t max_order, Element max_element) {
    std::uniform_int_distribution<std::size_t> order(min_order, max_order);
    std::uniform_int_distribution<Element> element(1, max_element);
    std::vector<Element> v(order(rng));
    for (Element& x : v) x = element(rng);
    return Multiset(std::span<const Element>(v));
}

}  // namespace

TEST_CASE("step appends support and multiplicities") {
    CHECK(step(Multiset{1, 1, 3, 8}) == Multiset{1, 1, 1, 2, 3, 8});
    const Multiset fixed{1, 1, 1, 2, 2, 3, 3, 3, 4, 8};
    CHECK(step(fixed) == fixed);
    CHECK(step(Multiset{}).empty());
}

TEST_CASE("orbit of 6{6}+7{7} has the longest small pre-period") {
    const OrbitReport r = orbit(Multiset::from_entries({{6, 6}, {7, 7}}));
    CHECK(r.preperiod == 12);
    CHECK(r.period == 3);
    CHECK(r.loop.size() == 3);
}

TEST_CASE("orbit of 22 is immediately fixed") {
    const OrbitReport r = orbit(Multiset{2, 2});
    CHECK(r.preperiod == 0);
    CHECK(r.period == 1);
}

TEST_CASE("orbit of 1381 ends at the self-describing fixed point") {
    const OrbitReport r = orbit(parse_notation("1381"));
    CHECK(r.period == 1);
    CHECK(r.preperiod == 6);
    CHECK(r.loop.front() == parse_notation("3122331418"));
}

TEST_CASE("orbit records are consistent") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const Multiset s = random_multiset(rng, 1, 14, 12);
        const OrbitReport r = orbit(s);
        REQUIRE(r.loop.size() == r.period);
        REQUIRE(r.trace.size() >= r.preperiod + r.period);
        for (std::size_t j = 0; j < r.period; ++j) REQUIRE(step(r.loop[j]) == r.loop[(j + 1) % r.period]);
        if (r.preperiod > 0) {
            const Multiset& before = r.trace[r.preperiod - 1].state;
            for (const Multiset& m : r.loop) REQUIRE(m != before);
        }
        const OrbitReport again = orbit(r.loop.front());
        REQUIRE(again.preperiod == 0);
        REQUIRE(again.period == r.period);
        for (std::size_t g = 0; g < r.trace.size(); ++g) {
            const GenerationRecord& rec = r.trace[g];
            REQUIRE(rec.order == rec.state.order());
            REQUIRE(rec.height == rec.state.max());
            REQUIRE(rec.distinct_adjectives == mu(rec.state).distinct());
        }
        REQUIRE(r.state_at(r.preperiod + 7 * r.period) == r.loop.front());
    }
}

TEST_CASE("orbit budget is enforced") {
    CHECK_THROWS_AS(orbit(Multiset{1}, 3), BudgetExceeded);
    CHECK_NOTHROW(orbit(Multiset{1}, 20));
}

TEST_CASE("forward invariants along orbits") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        const Multiset s = random_multiset(rng, 1, 20, 30);
        const OrbitReport r = orbit(s);
        for (std::size_t g = 0; g < r.preperiod + r.period; ++g) {
            const Multiset& a = r.state_at(g);
            const Multiset& b = r.state_at(g + 1);
            REQUIRE(b.order() == 2 * a.distinct());
            REQUIRE(support(a).is_submultiset_of(b));
            if (g >= 1) {
                REQUIRE(b.order() >= a.order());
                REQUIRE(b.max() >= a.max());
                REQUIRE(b.max() <= a.max() + 1);
            }
        }
    }
}

TEST_CASE("preimages of small examples") {
    CHECK(preimages(Multiset{1, 2}) == std::set<Multiset>{Multiset{1, 1}, Multiset{2}});
    CHECK(preimages(Multiset{1, 2, 3}).empty());
    CHECK(preimages(Multiset{1, 1}) == std::set<Multiset>{Multiset{1}});
    CHECK(preimages(Multiset{1}).empty());
    CHECK(preimages(Multiset{5, 5, 5, 5}).empty());
}

TEST_CASE("preimages agree with brute force on every small multiset") {
    for (const Multiset& s : sweep_inputs(6, 6)) REQUIRE(preimages(s) == brute_force_parents(s));
}

TEST_CASE("preimages agree with brute force on sampled larger multisets") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const Multiset s = random_multiset(rng, 1, 8, 8);
        REQUIRE(preimages(s) == brute_force_parents(s));
    }
}

TEST_CASE("preimages of images contain the original") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 300; ++i) {
        const Multiset p = random_multiset(rng, 1, 10, 9);
        REQUIRE(preimages(step(p)).count(p) == 1);
    }
}

TEST_CASE("ancestry of 11") {
    const AncestryTree t = ancestry_tree(Multiset{1, 1}, 3);
    REQUIRE(t.nodes.size() == 2);
    CHECK(t.root() == Multiset{1, 1});
    CHECK(t.generation(1) == std::vector<Multiset>{Multiset{1}});
    const auto one = t.find(Multiset{1});
    REQUIRE(one);
    CHECK(t.nodes[*one].terminal == Terminal::odd_order);
}

TEST_CASE("the families of 15 and 18") {
    CHECK(family_of_15().size() == 15);
    CHECK(family_of_18().size() == 18);
    for (const Multiset& g : family_of_15()) CHECK(preimages(g).empty());
}

TEST_CASE("ancestry edges are parent edges and terminals are explained") {
    const AncestryTree t = ancestry_tree(Multiset{1, 1, 2, 2, 3, 3}, 3);
    CHECK(t.complete);
    for (const AncestryNode& n : t.nodes) {
        for (std::size_t p : n.parents) {
            REQUIRE(step(t.nodes[p].value) == n.value);
            REQUIRE(t.nodes[p].depth == n.depth + 1);
        }
        if (n.parents.empty() && n.depth < t.max_depth) {
            REQUIRE(n.terminal != Terminal::none);
            REQUIRE(n.terminal != Terminal::depth_limit);
            if (n.value.order() % 2 == 1) REQUIRE(n.terminal == Terminal::odd_order);
        }
        if (n.depth == t.max_depth) REQUIRE(n.parents.empty());
    }
}

TEST_CASE("ancestry budget carries the partial tree") {
    try {
        ancestry_tree(Multiset{1, 2, 3, 4, 5, 6}, 3, 10);
        FAIL("budget was not enforced");
    } catch (const AncestryBudgetExceeded& e) {
        CHECK_FALSE(e.partial().complete);
        CHECK(e.partial().nodes.size() <= 10);
        CHECK(e.budget() == 10);
    }
}

TEST_CASE("ancestry DOT is well formed") {
    const std::string src = ancestry_tree(Multiset{1, 1, 2, 2, 3, 3}, 3).to_dot();
    const auto error = dot::check(src);
    CHECK_MESSAGE(!error, *error);
    CHECK(src.find("orange") != std::string::npos);
}

TEST_CASE("height profiles") {
    CHECK(height_profile(orbit(Multiset{1})).first_max_generation == 8);
    CHECK(height_profile(orbit(Multiset{2})).first_max_generation == 7);
    CHECK(height_profile(orbit(parse_notation("1381"))).first_max_generation <= 3);
    const HeightProfile p = height_profile(orbit(Multiset{3}));
    REQUIRE_FALSE(p.samples.empty());
    CHECK(p.samples.front().first == 0);
}
