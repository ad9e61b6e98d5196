#include "inventory/backtrack.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "inventory/adjectives.hpp"

namespace inventory {

std::string to_string(const SymElem& e) {
    if (e.kind == SymElem::Kind::constant) return std::to_string(e.value);
    if (e.value == 0) return "n";
    if (e.value < 0) return "n+" + std::to_string(-e.value);
    return "n-" + std::to_string(e.value);
}

std::string to_string(const NewAppearance& x) {
    std::string out;
    for (Element c : x.constants) out += std::to_string(c);
    if (x.top) out += "m";
    return out.empty() ? "-" : out;
}

std::string to_string(LeafReason r) {
    switch (r) {
        case LeafReason::none: return "none";
        case LeafReason::contradiction: return "contradiction";
        case LeafReason::immaturity: return "immaturity";
    }
    return "unknown";
}

const std::vector<Multiset>& mature_cores() {
    static const std::vector<Multiset> cores{
        Multiset{}, Multiset{2}, Multiset{3}, Multiset{4},
        Multiset{2, 2}, Multiset{2, 3}, Multiset{2, 4}, Multiset{2, 2, 2},
    };
    return cores;
}

bool is_mature_core(const Multiset& r) {
    const auto& cores = mature_cores();
    return std::find(cores.begin(), cores.end(), r) != cores.end();
}

Multiset mature_successor(const Multiset& core, const NewAppearance& fresh) {
    Multiset::Entries next;
    for (auto [v, m] : core.entries()) {
        const Count c = m + (fresh.constants.count(v) ? 0 : 1);
        if (c >= 2) ++next[c];
    }
    for (Element c : fresh.constants)
        if (!core.contains(c)) throw PreconditionError("new-appearance value not among the core adjectives");
    const Count top_count = fresh.top ? 1 : 2;
    if (top_count >= 2) ++next[top_count];
    return Multiset::from_entries(std::move(next));
}

std::vector<MatureTransition> mature_transitions() {
    std::vector<MatureTransition> out;
    for (const Multiset& core : mature_cores()) {
        std::vector<Element> values;
        for (auto [v, m] : core.entries()) values.push_back(v);
        const std::size_t slots = values.size() + 1;  // the last slot is the top adjective
        std::vector<NewAppearance> labels;
        for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
            NewAppearance x;
            for (std::size_t i = 0; i < values.size(); ++i)
                if (mask & (1u << i)) x.constants.insert(values[i]);
            x.top = (mask >> values.size()) & 1u;
            labels.push_back(std::move(x));
        }
        std::stable_sort(labels.begin(), labels.end(), [](const NewAppearance& a, const NewAppearance& b) {
            return a.size() < b.size();
        });
        for (auto& x : labels) {
            Multiset to = mature_successor(core, x);
            out.push_back({core, std::move(x), std::move(to)});
        }
    }
    return out;
}

SymElem expected_top(const Multiset& core, std::size_t k) {
    static const std::map<Multiset, std::vector<std::size_t>> allowed{
        {Multiset{}, {1, 2, 3}},   {Multiset{2}, {0, 1, 2}}, {Multiset{3}, {1, 2}},
        {Multiset{4}, {1, 2}},     {Multiset{2, 2}, {0, 1}}, {Multiset{2, 3}, {0, 1}},
        {Multiset{2, 4}, {0}},     {Multiset{2, 2, 2}, {0}},
    };
    auto row = allowed.find(core);
    if (row == allowed.end()) throw PreconditionError("expected_top: not a mature core");
    if (std::find(row->second.begin(), row->second.end(), k) == row->second.end())
        throw PreconditionError("expected_top: impossible cell (" + format_notation(core) + ", k=" +
                                std::to_string(k) + ")");
    return SymElem::n_minus(2 * static_cast<std::int64_t>(k) - 1 + static_cast<std::int64_t>(excess(core)));
}

namespace {

struct BoundRow {
    CoreEdge edge;
    std::size_t bound;
};

const std::vector<BoundRow>& bound_table() {
    static const std::vector<BoundRow> rows{
        {{Multiset{2, 2, 2}, Multiset{3}}, 1},    {{Multiset{2, 2, 2}, Multiset{4}}, 1},
        {{Multiset{2, 2, 2}, Multiset{2, 3}}, 1}, {{Multiset{2, 4}, Multiset{}}, 1},
        {{Multiset{2, 4}, Multiset{2, 2}}, 4},    {{Multiset{2, 3}, Multiset{2}}, 2},
        {{Multiset{2, 4}, Multiset{2}}, 2},       {{Multiset{2, 3}, Multiset{}}, 1},
        {{Multiset{2, 2}, Multiset{2}}, 1},       {{Multiset{2, 2}, Multiset{2, 2}}, 1},
        {{Multiset{2}, Multiset{}}, 1},           {{Multiset{3}, Multiset{}}, 1},
        {{Multiset{4}, Multiset{}}, 1},
    };
    return rows;
}

}  // namespace

bool has_occurrence_bound(const CoreEdge& edge) {
    const auto& rows = bound_table();
    return std::any_of(rows.begin(), rows.end(), [&](const BoundRow& r) { return r.edge == edge; });
}

std::size_t edge_occurrence_bound(const CoreEdge& edge) {
    for (const auto& row : bound_table())
        if (row.edge == edge) return row.bound;
    throw PreconditionError("edge_occurrence_bound: edge " + format_notation(edge.first) + "->" +
                            format_notation(edge.second) + " is not in the table");
}

std::vector<CoreEdge> bounded_edges() {
    std::vector<CoreEdge> out;
    for (const auto& row : bound_table()) out.push_back(row.edge);
    return out;
}

std::size_t BacktrackTree::height() const {
    std::size_t h = 0;
    for (const auto& node : nodes) h = std::max(h, node.depth);
    return h;
}

std::size_t BacktrackTree::max_occurrences() const {
    std::size_t best = 0;
    for (const auto& node : nodes) best = std::max(best, node.occurrences);
    return best;
}

std::size_t BacktrackTree::leaf_count(LeafReason reason) const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [&](const BacktrackNode& n) { return n.reason == reason; }));
}

std::int64_t BacktrackTree::valid_for_n_at_least() const {
    std::int64_t floor = 8;
    for (const auto& node : nodes) {
        // ones = n_j - |R_j| - 1 encodes n_j = n - noff
        const std::int64_t noff = node.state.ones.value - static_cast<std::int64_t>(node.state.core.order()) - 1;
        floor = std::max(floor, 8 + noff);
        for (const SymElem& e : node.state.appeared)
            if (e.kind == SymElem::Kind::n_minus) floor = std::max(floor, e.value + 5);
        if (node.state.top && node.state.top->kind == SymElem::Kind::n_minus)
            floor = std::max(floor, node.state.top->value + 5);
    }
    return floor;
}

namespace {

struct PathEntry {
    Multiset core;
    NewAppearance fresh;
    std::int64_t noff = 0;
    std::optional<std::int64_t> moff;
    std::size_t node = 0;
};

std::optional<std::string> find_contradiction(const std::vector<PathEntry>& path) {
    for (std::size_t t = 0; t < path.size(); ++t) {
        std::vector<SymElem> values;
        for (Element c : path[t].fresh.constants) values.push_back(SymElem::constant(static_cast<std::int64_t>(c)));
        if (path[t].fresh.top && path[t].moff) values.push_back(SymElem::n_minus(*path[t].moff));
        for (const SymElem& v : values) {
            for (std::size_t j = t + 1; j < path.size(); ++j) {
                bool present = false;
                if (v.kind == SymElem::Kind::constant)
                    present = path[j].core.contains(static_cast<Element>(v.value));
                else
                    present = path[j].moff && *path[j].moff == v.value;
                if (present)
                    return to_string(v) + " appears " + std::to_string(j - t) +
                           " generation(s) before its new appearance";
            }
        }
    }
    return std::nullopt;
}

class Expander {
public:
    Expander(BacktrackTree& tree, std::vector<MatureTransition> transitions)
        : tree_(tree), transitions_(std::move(transitions)) {}

    void expand(std::vector<PathEntry>& path) {
        if (!tree_.complete) return;
        bool any_valid = false;
        const PathEntry current = path.back();
        for (const MatureTransition& t : transitions_) {
            if (t.to != current.core) continue;
            if (tree_.nodes.size() >= tree_.budget) {
                tree_.complete = false;
                return;
            }
            const SymElem top = expected_top(current.core, t.fresh.size());
            path.back().moff = current.noff + top.value;
            PathEntry child{t.from, t.fresh, current.noff + static_cast<std::int64_t>(t.fresh.size()),
                            std::nullopt, 0};
            path.push_back(child);
            const auto contradiction = find_contradiction(path);
            path.back().node = add_node(path, contradiction);
            if (!contradiction) {
                any_valid = true;
                expand(path);
            }
            path.pop_back();
            path.back().moff = current.moff;
        }
        if (!any_valid && tree_.complete) tree_.nodes[current.node].reason = LeafReason::immaturity;
    }

    std::size_t add_root(const PathEntry& root) {
        std::vector<PathEntry> path{root};
        return add_node(path, std::nullopt);
    }

    void finish() {
        // A top that differs between branches stays symbolic on the node itself.
        for (std::size_t id : ambiguous_) tree_.nodes[id].state.top.reset();
    }

private:
    std::size_t add_node(const std::vector<PathEntry>& path, const std::optional<std::string>& contradiction) {
        const PathEntry& entry = path.back();
        BacktrackNode node;
        node.depth = path.size() - 1;
        node.parent = path.size() >= 2 ? path[path.size() - 2].node : BacktrackNode::no_parent;
        node.fresh = entry.fresh;
        node.state.core = entry.core;
        node.state.ones = SymElem::n_minus(entry.noff + static_cast<std::int64_t>(entry.core.order()) + 1);
        for (std::size_t t = 0; t + 1 < path.size(); ++t) {
            for (Element c : path[t].fresh.constants)
                node.state.appeared.insert(SymElem::constant(static_cast<std::int64_t>(c)));
            if (path[t].fresh.top && path[t].moff) node.state.appeared.insert(SymElem::n_minus(*path[t].moff));
        }
        for (std::size_t t = 0; t < path.size(); ++t) {
            const Multiset& successor = t == 0 ? tree_.target.second : path[t - 1].core;
            if (path[t].core == tree_.target.first && successor == tree_.target.second) ++node.occurrences;
        }
        if (contradiction) {
            node.reason = LeafReason::contradiction;
            node.detail = *contradiction;
        }
        if (path.size() >= 2) {
            // This branch fixes the successor's top adjective.
            auto& successor = tree_.nodes[node.parent];
            const SymElem top = SymElem::n_minus(*path[path.size() - 2].moff);
            if (!successor.state.top)
                successor.state.top = top;
            else if (*successor.state.top != top) {
                ambiguous_.insert(node.parent);
            }
        }
        tree_.nodes.push_back(std::move(node));
        return tree_.nodes.size() - 1;
    }

    BacktrackTree& tree_;
    std::vector<MatureTransition> transitions_;
    std::set<std::size_t> ambiguous_;
};

}  // namespace

BacktrackTree backtrack_tree(const CoreEdge& edge, std::size_t budget) {
    const CoreEdge allowed[] = {{Multiset{2, 2, 2}, Multiset{4}}, {Multiset{2, 4}, Multiset{2, 2}}};
    if (std::find(std::begin(allowed), std::end(allowed), edge) == std::end(allowed))
        throw PreconditionError("backtrack_tree: only 222->4 and 24->22 need backtracking");
    if (budget == 0) throw PreconditionError("backtrack_tree: budget must be positive");

    BacktrackTree tree;
    tree.target = edge;
    tree.budget = budget;
    NewAppearance only_top;
    only_top.top = true;
    if (mature_successor(edge.first, only_top) != edge.second)
        throw PreconditionError("backtrack_tree: edge is not taken by a new top adjective");

    Expander expander(tree, mature_transitions());
    std::vector<PathEntry> path{{edge.first, only_top, 0, std::nullopt, 0}};
    path.back().node = expander.add_root(path.back());
    expander.expand(path);
    expander.finish();
    return tree;
}

std::string BacktrackTree::to_dot() const {
    std::ostringstream out;
    out << "digraph backtrack {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"monospace\"];\n";
    out << "  target [shape=plaintext, label=\"" << (target.second.empty() ? "∅" : format_notation(target.second))
        << "\"];\n";
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& node = nodes[i];
        std::string label = "1x(" + to_string(node.state.ones) + ") " +
                            (node.state.core.empty() ? "∅" : format_notation(node.state.core)) + " " +
                            (node.state.top ? "(" + to_string(*node.state.top) + ")" : "m?");
        label += "\\nnew: " + to_string(node.fresh);
        if (node.occurrences > 0) label += "\\noccurrences: " + std::to_string(node.occurrences);
        out << "  b" << i << " [label=\"" << label << "\"";
        if (node.reason == LeafReason::contradiction)
            out << ", color=red, tooltip=\"" << node.detail << "\"";
        else if (node.reason == LeafReason::immaturity)
            out << ", style=filled, fillcolor=gray";
        out << "];\n";
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const auto& node = nodes[i];
        out << "  b" << i << " -> " << (node.parent == BacktrackNode::no_parent ? "target" : "b" + std::to_string(node.parent))
            << " [label=\"" << to_string(node.fresh) << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace inventory
