#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "inventory/multiset.hpp"

namespace inventory {

// Either a literal constant or the expression n - offset, where n is the
// (uninstantiated) number of adjectives at the tree's root generation.
struct SymElem {
    enum class Kind { constant, n_minus };

    Kind kind = Kind::constant;
    std::int64_t value = 0;

    static SymElem constant(std::int64_t k) { return {Kind::constant, k}; }
    static SymElem n_minus(std::int64_t c) { return {Kind::n_minus, c}; }

    friend auto operator<=>(const SymElem&, const SymElem&) = default;
};

std::string to_string(const SymElem& e);

// Values that appear in mu(S_i) but not in S_i: a subset of the core's
// distinct values, plus possibly the top adjective.
struct NewAppearance {
    std::set<Element> constants;
    bool top = false;

    std::size_t size() const { return constants.size() + (top ? 1 : 0); }
    friend auto operator<=>(const NewAppearance&, const NewAppearance&) = default;
};

std::string to_string(const NewAppearance& x);

const std::vector<Multiset>& mature_cores();
bool is_mature_core(const Multiset& r);

// R_{i+1} predicted from R_i and the values of mu(S_i) that are new in S_{i+1}.
Multiset mature_successor(const Multiset& core, const NewAppearance& fresh);

struct MatureTransition {
    Multiset from;
    NewAppearance fresh;
    Multiset to;
};

// Every labelled transition out of the mature cores.
std::vector<MatureTransition> mature_transitions();

// m_i in terms of n = |mu(S_i)| when k values appeared new in mu(S_{i-1}).
SymElem expected_top(const Multiset& core, std::size_t k);

using CoreEdge = std::pair<Multiset, Multiset>;

std::size_t edge_occurrence_bound(const CoreEdge& edge);
// Whether the edge is listed in the occurrence-bound table at all.
bool has_occurrence_bound(const CoreEdge& edge);
std::vector<CoreEdge> bounded_edges();

struct SymAdjState {
    SymElem ones;
    Multiset core;
    std::optional<SymElem> top;  // unresolved until a predecessor fixes k
    std::set<SymElem> appeared;
};

enum class LeafReason { none, contradiction, immaturity };

std::string to_string(LeafReason r);

struct BacktrackNode {
    static constexpr std::size_t no_parent = static_cast<std::size_t>(-1);

    std::size_t parent = no_parent;  // the successor generation (towards the root)
    std::size_t depth = 0;           // generations before the root
    SymAdjState state;
    NewAppearance fresh;             // new values of this generation's adjectives
    LeafReason reason = LeafReason::none;
    std::size_t occurrences = 0;     // target edges from this node up to the root
    std::string detail;
};

struct BacktrackTree {
    CoreEdge target;
    std::vector<BacktrackNode> nodes;
    bool complete = true;
    std::size_t budget = 0;

    std::size_t height() const;
    std::size_t max_occurrences() const;
    std::size_t leaf_count(LeafReason reason) const;
    // The expressions n - c stay ordered above every constant once n reaches this.
    std::int64_t valid_for_n_at_least() const;
    std::string to_dot() const;
};

inline constexpr std::size_t default_backtrack_budget = 200'000;

BacktrackTree backtrack_tree(const CoreEdge& edge, std::size_t budget = default_backtrack_budget);

}  // namespace inventory
