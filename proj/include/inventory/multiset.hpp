#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "inventory/errors.hpp"

namespace inventory {

using Element = std::uint64_t;
using Count = std::uint64_t;

Element checked_add(Element a, Element b);
Element checked_mul(Element a, Element b);

// A finite multiset of positive integers, stored as element -> multiplicity.
// Values are immutable once built.
class Multiset {
public:
    using Entries = std::map<Element, Count>;

    Multiset() = default;
    Multiset(std::initializer_list<Element> elements);
    explicit Multiset(std::span<const Element> elements);

    // Zero multiplicities are dropped; a zero element is rejected.
    static Multiset from_entries(Entries entries);
    // `copies` copies of each listed value, e.g. 4{4,9,10}.
    static Multiset repeated(Count copies, std::span<const Element> values);

    const Entries& entries() const noexcept { return entries_; }
    Count multiplicity(Element x) const noexcept;
    bool contains(Element x) const noexcept { return entries_.count(x) != 0; }
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t distinct() const noexcept { return entries_.size(); }
    Count order() const noexcept { return order_; }
    Element total() const;
    Element max() const;
    Element min() const;
    std::vector<Element> elements() const;
    bool is_submultiset_of(const Multiset& other) const;
    std::size_t hash() const noexcept;

    friend bool operator==(const Multiset&, const Multiset&) = default;
    // Lexicographic order of the sorted element sequences.
    friend std::strong_ordering operator<=>(const Multiset& lhs, const Multiset& rhs);

private:
    Entries entries_;
    Count order_ = 0;
};

struct MultisetHash {
    std::size_t operator()(const Multiset& s) const noexcept { return s.hash(); }
};

Multiset support(const Multiset& s);
Multiset mu(const Multiset& s);
Multiset add(const Multiset& a, const Multiset& b);
Multiset restrict(const Multiset& a, const Multiset& b);
Multiset exclude(const Multiset& a, const Multiset& b);
// Multiset difference; `b` must be a sub-multiset of `a`.
Multiset subtract(const Multiset& a, const Multiset& b);

struct NotationToken {
    Element value;
    bool parenthesized;
};

std::vector<NotationToken> tokenize_notation(std::string_view text);
Multiset parse_notation(std::string_view text);
std::string format_element(Element x);
std::string format_notation(const Multiset& s);
// Reads S aloud, smallest noun first: "two 1s, one 3, one 8" becomes "211318".
std::string format_inventory(const Multiset& s);

}  // namespace inventory
