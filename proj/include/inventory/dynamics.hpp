#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "inventory/adjectives.hpp"
#include "inventory/multiset.hpp"

namespace inventory {

Multiset step(const Multiset& s);

struct GenerationRecord {
    Multiset state;
    Count order = 0;
    Element height = 0;
    std::size_t distinct_adjectives = 0;
    std::optional<AdjectiveState> adjectives;  // absent for the empty multiset
};

struct OrbitReport {
    Multiset start;
    std::size_t preperiod = 0;
    std::size_t period = 1;
    std::vector<Multiset> loop;
    std::vector<GenerationRecord> trace;

    // S_i for any i >= 0, wrapping around the loop past the end of the trace.
    const Multiset& state_at(std::size_t i) const;
};

inline constexpr std::size_t default_max_iters = 10'000;

OrbitReport orbit(const Multiset& start, std::size_t max_iters = default_max_iters);

std::set<Multiset> preimages(const Multiset& s);

enum class Terminal {
    none,
    odd_order,
    too_many_elements,
    no_parents,
    depth_limit,
};

std::string to_string(Terminal t);

struct AncestryNode {
    Multiset value;
    std::size_t depth = 0;
    std::vector<std::size_t> parents;  // indices into AncestryTree::nodes
    Terminal terminal = Terminal::none;
};

struct AncestryTree {
    std::vector<AncestryNode> nodes;  // nodes[0] is the root
    std::size_t max_depth = 0;
    bool complete = true;

    const Multiset& root() const { return nodes.front().value; }
    std::optional<std::size_t> find(const Multiset& s) const;
    // f^{-k}(root): everything reachable by exactly k parent edges.
    std::vector<Multiset> generation(std::size_t k) const;
    std::string to_dot() const;

    std::unordered_map<Multiset, std::size_t, MultisetHash> index;
};

class AncestryBudgetExceeded : public BudgetExceeded {
public:
    AncestryBudgetExceeded(std::uint64_t budget, AncestryTree partial)
        : BudgetExceeded("ancestry node budget exhausted", budget), partial_(std::move(partial)) {}

    const AncestryTree& partial() const noexcept { return partial_; }

private:
    AncestryTree partial_;
};

inline constexpr std::size_t default_node_budget = 100'000;

AncestryTree ancestry_tree(const Multiset& root, std::size_t max_depth,
                           std::size_t node_budget = default_node_budget);

struct HeightProfile {
    std::vector<std::pair<std::size_t, Element>> samples;  // (generation, max element)
    std::size_t first_max_generation = 0;
};

HeightProfile height_profile(const OrbitReport& report);

}  // namespace inventory
