#include "inventory/dynamics.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace inventory {

Multiset step(const Multiset& s) {
    Multiset::Entries out;
    for (auto [x, m] : s.entries()) {
        ++out[x];
        ++out[m];
    }
    return Multiset::from_entries(std::move(out));
}

const Multiset& OrbitReport::state_at(std::size_t i) const {
    if (i < trace.size()) return trace[i].state;
    return loop[(i - preperiod) % period];
}

namespace {

GenerationRecord record(const Multiset& s) {
    GenerationRecord r;
    r.state = s;
    r.order = s.order();
    if (!s.empty()) {
        r.height = s.max();
        r.adjectives = decompose(s);
        r.distinct_adjectives = mu(s).distinct();
    }
    return r;
}

}  // namespace

OrbitReport orbit(const Multiset& start, std::size_t max_iters) {
    if (max_iters == 0) throw PreconditionError("orbit: max_iters must be positive");
    std::unordered_map<Multiset, std::size_t, MultisetHash> seen;
    std::vector<Multiset> states{start};
    seen.emplace(start, 0);
    for (std::size_t iter = 1; iter <= max_iters; ++iter) {
        Multiset next = step(states.back());
        if (auto hit = seen.find(next); hit != seen.end()) {
            OrbitReport report;
            report.start = start;
            report.preperiod = hit->second;
            report.period = states.size() - hit->second;
            report.loop.assign(states.begin() + static_cast<std::ptrdiff_t>(hit->second), states.end());
            report.trace.reserve(states.size());
            for (const Multiset& s : states) report.trace.push_back(record(s));
            return report;
        }
        seen.emplace(next, states.size());
        states.push_back(std::move(next));
    }
    throw BudgetExceeded("orbit: no repeat within " + std::to_string(max_iters) + " iterations",
                         max_iters);
}

std::set<Multiset> preimages(const Multiset& s) {
    std::set<Multiset> out;
    if (s.order() % 2 != 0) return out;
    const std::size_t nouns = s.order() / 2;
    if (s.distinct() < nouns) return out;

    std::vector<Element> candidates;
    for (auto [x, m] : s.entries()) candidates.push_back(x);

    // Walk every choice of `nouns` distinct elements via a selection mask.
    std::vector<char> pick(candidates.size(), 0);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(nouns), 1);
    do {
        Multiset::Entries noun_entries;
        std::vector<Element> chosen;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (pick[i]) {
                noun_entries.emplace(candidates[i], 1);
                chosen.push_back(candidates[i]);
            }
        }
        std::vector<Element> adjectives =
            subtract(s, Multiset::from_entries(std::move(noun_entries))).elements();
        do {
            Multiset::Entries parent;
            for (std::size_t i = 0; i < chosen.size(); ++i) parent.emplace(chosen[i], adjectives[i]);
            out.insert(Multiset::from_entries(std::move(parent)));
        } while (std::next_permutation(adjectives.begin(), adjectives.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

std::string to_string(Terminal t) {
    switch (t) {
        case Terminal::none: return "none";
        case Terminal::odd_order: return "odd-order";
        case Terminal::too_many_elements: return "too-many-elements";
        case Terminal::no_parents: return "no-parents";
        case Terminal::depth_limit: return "depth-limit";
    }
    return "unknown";
}

std::optional<std::size_t> AncestryTree::find(const Multiset& s) const {
    auto it = index.find(s);
    if (it == index.end()) return std::nullopt;
    return it->second;
}

std::vector<Multiset> AncestryTree::generation(std::size_t k) const {
    std::set<std::size_t> frontier{0};
    for (std::size_t level = 0; level < k; ++level) {
        std::set<std::size_t> next;
        for (std::size_t id : frontier)
            next.insert(nodes[id].parents.begin(), nodes[id].parents.end());
        frontier = std::move(next);
    }
    std::vector<Multiset> out;
    for (std::size_t id : frontier) out.push_back(nodes[id].value);
    std::sort(out.begin(), out.end());
    return out;
}

std::string AncestryTree::to_dot() const {
    std::ostringstream out;
    out << "digraph ancestry {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& node = nodes[i];
        out << "  n" << i << " [label=\"" << (node.value.empty() ? "∅" : format_notation(node.value))
            << "\"";
        switch (node.terminal) {
            case Terminal::odd_order: out << ", style=filled, fillcolor=orange"; break;
            case Terminal::too_many_elements: out << ", style=filled, fillcolor=lightblue"; break;
            case Terminal::no_parents: out << ", style=filled, fillcolor=gray"; break;
            case Terminal::depth_limit: out << ", style=dashed"; break;
            case Terminal::none: break;
        }
        out << "];\n";
    }
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t p : nodes[i].parents) out << "  n" << p << " -> n" << i << ";\n";
    out << "}\n";
    return out.str();
}

AncestryTree ancestry_tree(const Multiset& root, std::size_t max_depth, std::size_t node_budget) {
    AncestryTree tree;
    tree.max_depth = max_depth;
    tree.nodes.push_back({root, 0, {}, Terminal::none});
    tree.index.emplace(root, 0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();
        const Multiset value = tree.nodes[id].value;
        if (tree.nodes[id].depth >= max_depth) {
            tree.nodes[id].terminal = Terminal::depth_limit;
            continue;
        }
        const auto parents = preimages(value);
        if (parents.empty()) {
            if (value.order() % 2 != 0)
                tree.nodes[id].terminal = Terminal::odd_order;
            else if (value.order() > 2 * value.distinct())
                tree.nodes[id].terminal = Terminal::too_many_elements;
            else
                tree.nodes[id].terminal = Terminal::no_parents;
            continue;
        }
        for (const Multiset& p : parents) {
            auto [it, inserted] = tree.index.emplace(p, tree.nodes.size());
            if (inserted) {
                if (tree.nodes.size() >= node_budget) {
                    tree.index.erase(it);
                    tree.complete = false;
                    throw AncestryBudgetExceeded(node_budget, std::move(tree));
                }
                tree.nodes.push_back({p, tree.nodes[id].depth + 1, {}, Terminal::none});
                queue.push_back(it->second);
            }
            tree.nodes[id].parents.push_back(it->second);
        }
    }
    return tree;
}

HeightProfile height_profile(const OrbitReport& report) {
    HeightProfile profile;
    Element best = 0;
    for (std::size_t i = 0; i < report.trace.size(); ++i) {
        const Element h = report.trace[i].height;
        profile.samples.emplace_back(i, h);
        if (h > best) {
            best = h;
            profile.first_max_generation = i;
        }
    }
    return profile;
}

}  // namespace inventory
