#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "inventory/multiset.hpp"

namespace inventory {

// mu(S) = ones*{1} + core + {top}
struct AdjectiveState {
    Count ones = 0;
    Multiset core;
    Element top = 1;

    friend bool operator==(const AdjectiveState&, const AdjectiveState&) = default;
};

using Cycle = std::vector<Multiset>;

Multiset mu_plus(const Multiset& s);
Multiset g_n(const Multiset& s, std::size_t n);

inline constexpr std::size_t default_tn_limit = 12;

bool in_Tn(const Multiset& s, std::size_t n);
std::vector<Multiset> enumerate_Tn(std::size_t n, std::size_t limit = default_tn_limit);

// Rotates a cycle so that its least member comes first.
Cycle canonical_rotation(Cycle cycle);
std::vector<Cycle> find_gn_cycles(std::size_t n);

AdjectiveState decompose(const Multiset& s);
AdjectiveState decompose_adjectives(const Multiset& adjectives);
Multiset recompose(const AdjectiveState& state);

// Sum of (r - 1) over the elements of r.
Count excess(const Multiset& r);

Multiset g_naive(const Multiset& r);
std::vector<Multiset> deteriorates(const Multiset& r);
bool is_deteriorate(const Multiset& candidate, const Multiset& source);

std::vector<Multiset> the_64_list();
std::vector<Multiset> required_cycle_elements(std::size_t n);

std::string gn_graph_dot(std::size_t n);
std::string g_naive_graph_dot();

}  // namespace inventory
