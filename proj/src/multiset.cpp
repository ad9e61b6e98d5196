#include "inventory/multiset.hpp"

#include <algorithm>
#include <cctype>

namespace inventory {

Element checked_add(Element a, Element b) {
    Element out;
    if (__builtin_add_overflow(a, b, &out)) throw OverflowError("multiset arithmetic overflow");
    return out;
}

Element checked_mul(Element a, Element b) {
    Element out;
    if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("multiset arithmetic overflow");
    return out;
}

Multiset::Multiset(std::initializer_list<Element> elements)
    : Multiset(std::span<const Element>(elements.begin(), elements.size())) {}

Multiset::Multiset(std::span<const Element> elements) {
    for (Element x : elements) {
        if (x == 0) throw PreconditionError("multiset elements must be positive");
        ++entries_[x];
        order_ = checked_add(order_, 1);
    }
}

Multiset Multiset::from_entries(Entries entries) {
    Multiset out;
    for (auto it = entries.begin(); it != entries.end();) {
        if (it->first == 0 && it->second != 0)
            throw PreconditionError("multiset elements must be positive");
        if (it->second == 0) {
            it = entries.erase(it);
        } else {
            out.order_ = checked_add(out.order_, it->second);
            ++it;
        }
    }
    out.entries_ = std::move(entries);
    return out;
}

Multiset Multiset::repeated(Count copies, std::span<const Element> values) {
    Entries entries;
    for (Element x : values) entries[x] = checked_add(entries[x], copies);
    return from_entries(std::move(entries));
}

Count Multiset::multiplicity(Element x) const noexcept {
    auto it = entries_.find(x);
    return it == entries_.end() ? 0 : it->second;
}

Element Multiset::total() const {
    Element sum = 0;
    for (auto [x, m] : entries_) sum = checked_add(sum, checked_mul(x, m));
    return sum;
}

Element Multiset::max() const {
    if (empty()) throw PreconditionError("max of empty multiset");
    return entries_.rbegin()->first;
}

Element Multiset::min() const {
    if (empty()) throw PreconditionError("min of empty multiset");
    return entries_.begin()->first;
}

std::vector<Element> Multiset::elements() const {
    std::vector<Element> out;
    out.reserve(order_);
    for (auto [x, m] : entries_) out.insert(out.end(), m, x);
    return out;
}

bool Multiset::is_submultiset_of(const Multiset& other) const {
    for (auto [x, m] : entries_)
        if (other.multiplicity(x) < m) return false;
    return true;
}

std::size_t Multiset::hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0x100000001b3ULL;
    };
    for (auto [x, m] : entries_) {
        mix(x);
        mix(m);
    }
    return static_cast<std::size_t>(h);
}

std::strong_ordering operator<=>(const Multiset& lhs, const Multiset& rhs) {
    auto a = lhs.entries_.begin(), b = rhs.entries_.begin();
    const auto a_end = lhs.entries_.end(), b_end = rhs.entries_.end();
    Count ra = a == a_end ? 0 : a->second;
    Count rb = b == b_end ? 0 : b->second;
    while (a != a_end && b != b_end) {
        if (a->first != b->first) return a->first <=> b->first;
        Count take = std::min(ra, rb);
        ra -= take;
        rb -= take;
        if (ra == 0 && ++a != a_end) ra = a->second;
        if (rb == 0 && ++b != b_end) rb = b->second;
    }
    if (a == a_end && b == b_end) return std::strong_ordering::equal;
    return a == a_end ? std::strong_ordering::less : std::strong_ordering::greater;
}

Multiset support(const Multiset& s) {
    Multiset::Entries out;
    for (auto [x, m] : s.entries()) out.emplace_hint(out.end(), x, 1);
    return Multiset::from_entries(std::move(out));
}

Multiset mu(const Multiset& s) {
    Multiset::Entries out;
    for (auto [x, m] : s.entries()) ++out[m];
    return Multiset::from_entries(std::move(out));
}

Multiset add(const Multiset& a, const Multiset& b) {
    Multiset::Entries out = a.entries();
    for (auto [x, m] : b.entries()) out[x] = checked_add(out[x], m);
    return Multiset::from_entries(std::move(out));
}

Multiset restrict(const Multiset& a, const Multiset& b) {
    Multiset::Entries out;
    for (auto [x, m] : a.entries())
        if (b.contains(x)) out.emplace_hint(out.end(), x, m);
    return Multiset::from_entries(std::move(out));
}

Multiset exclude(const Multiset& a, const Multiset& b) {
    Multiset::Entries out;
    for (auto [x, m] : a.entries())
        if (!b.contains(x)) out.emplace_hint(out.end(), x, m);
    return Multiset::from_entries(std::move(out));
}

Multiset subtract(const Multiset& a, const Multiset& b) {
    Multiset::Entries out = a.entries();
    for (auto [x, m] : b.entries()) {
        auto it = out.find(x);
        if (it == out.end() || it->second < m)
            throw PreconditionError("subtract: right operand is not a sub-multiset");
        it->second -= m;
    }
    return Multiset::from_entries(std::move(out));
}

std::vector<NotationToken> tokenize_notation(std::string_view text) {
    std::vector<NotationToken> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t') {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            if (c == '0') throw ParseError("zero element", i);
            tokens.push_back({static_cast<Element>(c - '0'), false});
            ++i;
        } else if (c == '(') {
            const std::size_t open = i++;
            Element value = 0;
            std::size_t digits = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                Element next;
                if (__builtin_mul_overflow(value, Element{10}, &next) ||
                    __builtin_add_overflow(next, static_cast<Element>(text[i] - '0'), &next))
                    throw ParseError("element too large", open);
                value = next;
                ++digits;
                ++i;
            }
            if (i == text.size()) throw ParseError("unclosed parenthesis", open);
            if (text[i] != ')') throw ParseError("unexpected character inside parentheses", i);
            if (digits == 0) throw ParseError("empty parentheses", open);
            if (value == 0) throw ParseError("zero element", open);
            tokens.push_back({value, true});
            ++i;
        } else if (c == ')') {
            throw ParseError("unmatched closing parenthesis", i);
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
    }
    return tokens;
}

Multiset parse_notation(std::string_view text) {
    Multiset::Entries entries;
    for (const auto& token : tokenize_notation(text)) ++entries[token.value];
    return Multiset::from_entries(std::move(entries));
}

std::string format_element(Element x) {
    return x < 10 ? std::to_string(x) : "(" + std::to_string(x) + ")";
}

std::string format_notation(const Multiset& s) {
    std::string out;
    for (auto [x, m] : s.entries()) {
        const std::string token = format_element(x);
        for (Count k = 0; k < m; ++k) out += token;
    }
    return out;
}

std::string format_inventory(const Multiset& s) {
    std::string out;
    for (auto [x, m] : s.entries()) out += format_element(m) + format_element(x);
    return out;
}

}  // namespace inventory
