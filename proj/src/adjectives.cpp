#include "inventory/adjectives.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace inventory {

namespace {

std::string dot_label(const Multiset& s) {
    return s.empty() ? "∅" : format_notation(s);
}

void partitions_into(std::size_t parts, Element sum, Element least, std::vector<Element>& prefix,
                     std::vector<Multiset>& out) {
    if (parts == 0) {
        if (sum == 0) out.emplace_back(std::span<const Element>(prefix));
        return;
    }
    // Remaining parts are all >= the next part, so it can be at most sum / parts.
    for (Element part = least; part * parts <= sum; ++part) {
        prefix.push_back(part);
        partitions_into(parts - 1, sum - part, part, prefix, out);
        prefix.pop_back();
    }
}

// Every result of decrementing a non-empty sub-multiset of r, with 1s discarded.
void decrement_subsets(const Multiset& r, std::set<Multiset>& out) {
    std::vector<std::pair<Element, Count>> entries(r.entries().begin(), r.entries().end());
    std::vector<Count> chosen(entries.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < entries.size() && chosen[i] == entries[i].second) chosen[i++] = 0;
        if (i == entries.size()) break;
        ++chosen[i];
        Multiset::Entries next;
        for (std::size_t j = 0; j < entries.size(); ++j) {
            auto [x, m] = entries[j];
            if (m > chosen[j]) next[x] += m - chosen[j];
            if (chosen[j] > 0 && x - 1 >= 2) next[x - 1] += chosen[j];
        }
        out.insert(Multiset::from_entries(std::move(next)));
    }
}

std::vector<Multiset> replace_max(const Multiset& r) {
    std::vector<Multiset> out;
    if (r.empty()) return out;
    const Element top = r.max();
    Multiset::Entries base = r.entries();
    if (--base[top] == 0) base.erase(top);
    out.push_back(Multiset::from_entries(base));
    for (Element v = 2; v < top; ++v) {
        Multiset::Entries next = base;
        ++next[v];
        out.push_back(Multiset::from_entries(std::move(next)));
    }
    return out;
}

}  // namespace

Multiset mu_plus(const Multiset& s) {
    Multiset::Entries out;
    for (auto [x, m] : s.entries()) ++out[checked_add(m, 1)];
    return Multiset::from_entries(std::move(out));
}

Multiset g_n(const Multiset& s, std::size_t n) {
    if (s.distinct() > n) throw PreconditionError("g_n: more distinct elements than n");
    Multiset::Entries out = mu_plus(s).entries();
    const Count padding = n - s.distinct();
    if (padding > 0) out[1] += padding;
    return Multiset::from_entries(std::move(out));
}

bool in_Tn(const Multiset& s, std::size_t n) {
    return s.order() == n && s.total() == 2 * static_cast<Element>(n);
}

std::vector<Multiset> enumerate_Tn(std::size_t n, std::size_t limit) {
    if (n == 0) throw PreconditionError("enumerate_Tn: n must be positive");
    if (n > limit) throw PreconditionError("enumerate_Tn: n exceeds the configured limit");
    std::vector<Multiset> out;
    std::vector<Element> prefix;
    partitions_into(n, 2 * static_cast<Element>(n), 1, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

Cycle canonical_rotation(Cycle cycle) {
    auto least = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), least, cycle.end());
    return cycle;
}

std::vector<Cycle> find_gn_cycles(std::size_t n) {
    std::set<Multiset> settled;
    std::vector<Cycle> cycles;
    for (const Multiset& start : enumerate_Tn(n)) {
        std::map<Multiset, std::size_t> on_path;
        std::vector<Multiset> path;
        Multiset current = start;
        while (!settled.count(current) && !on_path.count(current)) {
            on_path.emplace(current, path.size());
            path.push_back(current);
            current = g_n(current, n);
        }
        if (auto hit = on_path.find(current); hit != on_path.end())
            cycles.push_back(canonical_rotation(Cycle(path.begin() + hit->second, path.end())));
        settled.insert(path.begin(), path.end());
    }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

AdjectiveState decompose_adjectives(const Multiset& adjectives) {
    if (adjectives.empty()) throw PreconditionError("decompose: empty multiset");
    AdjectiveState state;
    state.top = adjectives.max();
    Multiset::Entries rest = adjectives.entries();
    if (--rest[state.top] == 0) rest.erase(state.top);
    if (auto it = rest.find(1); it != rest.end()) {
        state.ones = it->second;
        rest.erase(it);
    }
    state.core = Multiset::from_entries(std::move(rest));
    return state;
}

AdjectiveState decompose(const Multiset& s) { return decompose_adjectives(mu(s)); }

Multiset recompose(const AdjectiveState& state) {
    Multiset::Entries out = state.core.entries();
    if (state.ones > 0) out[1] += state.ones;
    ++out[state.top];
    return Multiset::from_entries(std::move(out));
}

Count excess(const Multiset& r) {
    Count sum = 0;
    for (auto [x, m] : r.entries()) sum = checked_add(sum, checked_mul(x - 1, m));
    return sum;
}

Multiset g_naive(const Multiset& r) {
    if (r.contains(1)) throw PreconditionError("g_naive: core adjectives may not contain 1");
    return add(Multiset{2}, mu_plus(r));
}

std::vector<Multiset> deteriorates(const Multiset& r) {
    if (r.contains(1)) throw PreconditionError("deteriorates: core adjectives may not contain 1");
    std::set<Multiset> out;
    decrement_subsets(r, out);
    for (const Multiset& replaced : replace_max(r)) {
        out.insert(replaced);
        decrement_subsets(replaced, out);
    }
    out.erase(r);
    return {out.begin(), out.end()};
}

bool is_deteriorate(const Multiset& candidate, const Multiset& source) {
    if (candidate.contains(1) || source.contains(1))
        throw PreconditionError("is_deteriorate: core adjectives may not contain 1");
    if (candidate == source) return true;
    // Neither operation can increase any of these quantities.
    if (excess(candidate) > excess(source) || candidate.order() > source.order()) return false;
    const auto all = deteriorates(source);
    return std::binary_search(all.begin(), all.end(), candidate);
}

std::vector<Multiset> the_64_list() {
    constexpr std::size_t max_size = 6;
    constexpr Count max_excess = 8;
    std::vector<Multiset> out{Multiset{}};
    std::vector<Element> prefix;
    auto extend = [&](auto&& self, Element least, Count budget) -> void {
        for (Element x = least; x - 1 <= budget; ++x) {
            prefix.push_back(x);
            out.emplace_back(std::span<const Element>(prefix));
            if (prefix.size() < max_size) self(self, x, budget - (x - 1));
            prefix.pop_back();
        }
    };
    extend(extend, 2, max_excess);
    std::sort(out.begin(), out.end(), [](const Multiset& a, const Multiset& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        if (a.total() != b.total()) return a.total() < b.total();
        return a < b;
    });
    return out;
}

std::vector<Multiset> required_cycle_elements(std::size_t n) {
    if (n < 8) throw PreconditionError("required_cycle_elements: n must be at least 8");
    const Element big = n;
    const std::vector<std::vector<Element>> heads{
        {2, big}, {3, big - 1}, {2, 2, big - 1}, {2, 3, big - 2}, {2, 2, 2, big - 2}, {2, 2, 3, big - 3},
    };
    std::vector<Multiset> out;
    for (const auto& head : heads) {
        Multiset::Entries entries;
        for (Element x : head) ++entries[x];
        entries[1] += n - head.size();
        out.push_back(Multiset::from_entries(std::move(entries)));
    }
    return out;
}

std::string gn_graph_dot(std::size_t n) {
    const auto nodes = enumerate_Tn(n);
    std::set<Multiset> on_cycle;
    for (const Cycle& c : find_gn_cycles(n)) on_cycle.insert(c.begin(), c.end());

    std::ostringstream out;
    out << "digraph g" << n << " {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (const Multiset& s : nodes) {
        out << "  \"" << format_notation(s) << "\"";
        if (on_cycle.count(s)) out << " [penwidth=3]";
        out << ";\n";
    }
    for (const Multiset& s : nodes) {
        const Multiset image = g_n(s, n);
        out << "  \"" << format_notation(s) << "\" -> \"" << format_notation(image) << "\"";
        if (on_cycle.count(s)) out << " [penwidth=3]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string g_naive_graph_dot() {
    const auto nodes = the_64_list();
    std::set<Multiset> listed(nodes.begin(), nodes.end());
    std::map<Count, std::vector<Multiset>> ranks;
    for (const Multiset& r : nodes) ranks[excess(r)].push_back(r);

    std::ostringstream out;
    out << "digraph g_naive {\n";
    out << "  rankdir=TB;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (const auto& [level, members] : ranks) {
        out << "  subgraph rank" << level << " {\n    rank=same;\n";
        for (const Multiset& r : members) out << "    \"" << dot_label(r) << "\";\n";
        out << "  }\n";
    }
    for (const Multiset& r : nodes) {
        const Multiset image = g_naive(r);
        out << "  \"" << dot_label(r) << "\" -> \"" << dot_label(image) << "\"";
        if (!listed.count(image)) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace inventory
