#include "tqcube/construction.hpp"

#include <algorithm>
#include <unordered_set>
#include <utility>

#include "tqcube/io.hpp"

namespace tqcube {

namespace {

// Base table for the edge-disjoint Hamiltonian construction: two
// edge-disjoint Hamiltonian paths of TQ_5. P runs 00000 -> 11000,
// Q runs 00100 -> 01100.
constexpr std::array<NodeLabel, 32> kEdhBaseP = {
    0b00000, 0b00001, 0b00101, 0b00100, 0b10100, 0b10101, 0b10001, 0b10000,
    0b10110, 0b10010, 0b00010, 0b00011, 0b10011, 0b10111, 0b00111, 0b00110,
    0b11110, 0b11010, 0b01010, 0b01011, 0b11011, 0b11111, 0b01111, 0b01110,
    0b01000, 0b01001, 0b01101, 0b01100, 0b11100, 0b11101, 0b11001, 0b11000,
};

constexpr std::array<NodeLabel, 32> kEdhBaseQ = {
    0b00100, 0b00000, 0b10000, 0b10100, 0b10010, 0b10011, 0b10001, 0b00001,
    0b00011, 0b00111, 0b00101, 0b10101, 0b10111, 0b10110, 0b00110, 0b00010,
    0b01010, 0b01110, 0b11110, 0b11111, 0b11101, 0b01101, 0b01111, 0b01011,
    0b01001, 0b11001, 0b11011, 0b11010, 0b11100, 0b11000, 0b01000, 0b01100,
};

// Base table for the equal node-disjoint construction: two node-disjoint
// 4-node paths that together cover TQ_3.
constexpr std::array<NodeLabel, 4> kNdcBaseP = {0b001, 0b101, 0b111, 0b011};
constexpr std::array<NodeLabel, 4> kNdcBaseQ = {0b000, 0b100, 0b010, 0b110};

constexpr int kEdhBaseDim = 5;
constexpr int kNdcBaseDim = 3;

std::string label_brief(NodeLabel b, Dimension n) {
    return label_to_string(b, n) + " (" + std::to_string(b) + ")";
}

void check_base_path(const std::vector<NodeLabel>& nodes, Dimension n, const char* name) {
    if (nodes.size() != n.node_count()) {
        throw ConstructionError(std::string("base table ") + name + ": expected " +
                                std::to_string(n.node_count()) + " nodes, found " +
                                std::to_string(nodes.size()));
    }
    std::vector<bool> seen(nodes.size(), false);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!n.contains(nodes[i])) {
            throw ConstructionError(std::string("base table ") + name + ": label out of range at " +
                                    std::to_string(i));
        }
        if (seen[nodes[i]]) {
            throw ConstructionError(std::string("base table ") + name + ": duplicate node " +
                                    label_brief(nodes[i], n));
        }
        seen[nodes[i]] = true;
        if (i > 0 && !is_adjacent(nodes[i - 1], nodes[i], n)) {
            throw ConstructionError(std::string("base table ") + name + ": entries " +
                                    std::to_string(i - 1) + " and " + std::to_string(i) +
                                    " are not adjacent: " + label_brief(nodes[i - 1], n) + " / " +
                                    label_brief(nodes[i], n));
        }
    }
}

void check_base_edge_disjoint(const std::vector<NodeLabel>& p, const std::vector<NodeLabel>& q,
                              const char* what) {
    std::unordered_set<std::uint64_t> edges;
    auto key = [](const Edge& e) { return (e.u << 32) | e.v; };
    for (std::size_t i = 1; i < p.size(); ++i) {
        edges.insert(key(make_edge(p[i - 1], p[i])));
    }
    for (std::size_t i = 1; i < q.size(); ++i) {
        if (!edges.insert(key(make_edge(q[i - 1], q[i]))).second) {
            throw ConstructionError(std::string("base tables ") + what +
                                    ": P and Q share an edge");
        }
    }
}

template <std::size_t N>
std::vector<NodeLabel> to_vector(const std::array<NodeLabel, N>& table) {
    return std::vector<NodeLabel>(table.begin(), table.end());
}

const std::vector<NodeLabel>& base_nodes(PairKind kind, PathId which) {
    // Validated on first use; a transcription defect fails here, not deep in
    // a high-dimension build.
    static const auto tables = [] {
        std::array<std::vector<NodeLabel>, 4> t = {
            to_vector(kEdhBaseP),
            to_vector(kEdhBaseQ),
            to_vector(kNdcBaseP),
            to_vector(kNdcBaseQ),
        };
        const Dimension five(kEdhBaseDim);
        const Dimension three(kNdcBaseDim);
        check_base_path(t[0], five, "edh P");
        check_base_path(t[1], five, "edh Q");
        check_base_edge_disjoint(t[0], t[1], "edh");
        // The ndc halves each hold 2^(n-1) nodes and must partition TQ_3.
        for (const auto* nodes : {&t[2], &t[3]}) {
            if (nodes->size() != three.node_count() / 2) {
                throw ConstructionError("base table ndc: expected 4 nodes per path");
            }
        }
        std::vector<bool> seen(three.node_count(), false);
        for (const auto* nodes : {&t[2], &t[3]}) {
            for (std::size_t i = 0; i < nodes->size(); ++i) {
                NodeLabel b = (*nodes)[i];
                if (!three.contains(b) || seen[b]) {
                    throw ConstructionError("base table ndc: labels do not partition TQ_3");
                }
                seen[b] = true;
                if (i > 0 && !is_adjacent((*nodes)[i - 1], b, three)) {
                    throw ConstructionError("base table ndc: non-adjacent entries at " +
                                            std::to_string(i));
                }
            }
        }
        return t;
    }();
    const std::size_t idx =
        (kind == PairKind::edge_disjoint_hamiltonian ? 0 : 2) + (which == PathId::Q ? 1 : 0);
    return tables[idx];
}

void require_kind_dimension(PairKind kind, Dimension n) {
    if (kind == PairKind::edge_disjoint_hamiltonian && n.value() < 5) {
        if (n.value() == 3) {
            throw UnsupportedDimensionError(
                "TQ_3 admits no two edge-disjoint Hamiltonian cycles: each node has only "
                "three incident edges and a cycle pair would need four per node");
        }
        throw UnsupportedDimensionError(
            "edge-disjoint Hamiltonian construction requires odd n >= 5, got n=" +
            std::to_string(n.value()));
    }
    // Dimension already guarantees odd n >= 1, which is all ndc needs beyond n >= 3.
    if (kind == PairKind::equal_node_disjoint && n.value() < 3) {
        throw UnsupportedDimensionError(
            "equal node-disjoint construction requires odd n >= 3, got n=" +
            std::to_string(n.value()));
    }
}

// One induction level: four relabeled copies of `sub`, slots 1 and 3
// reversed, junctions re-checked even though the scheme guarantees them.
Path assemble_level(const Path& sub, const AssemblyPlan& plan, int m) {
    const Dimension dim(m);
    std::vector<NodeLabel> out;
    out.reserve(sub.nodes.size() * 4);
    for (int slot = 0; slot < 4; ++slot) {
        const NodeLabel prefix = static_cast<NodeLabel>(plan.quadrants[slot]) << (m - 2);
        const std::size_t junction = out.size();
        if (slot % 2 == 0) {
            for (auto it = sub.nodes.begin(); it != sub.nodes.end(); ++it) {
                out.push_back(*it | prefix);
            }
        } else {
            for (auto it = sub.nodes.rbegin(); it != sub.nodes.rend(); ++it) {
                out.push_back(*it | prefix);
            }
        }
        if (slot > 0 && !is_adjacent(out[junction - 1], out[junction], dim)) {
            throw ConstructionError("junction check failed at n=" + std::to_string(m) + ": " +
                                    label_brief(out[junction - 1], dim) + " -/- " +
                                    label_brief(out[junction], dim));
        }
    }
    return Path{dim, std::move(out)};
}

PathPair build_paths(PairKind kind, Dimension n, int max_n) {
    require_kind_dimension(kind, n);
    require_within_cap(n, max_n, "materialized path construction");
    PathPair pair{Path{Dimension(assembly_plan(kind, PathId::P).base_dimension),
                       base_nodes(kind, PathId::P)},
                  Path{Dimension(assembly_plan(kind, PathId::Q).base_dimension),
                       base_nodes(kind, PathId::Q)}};
    const AssemblyPlan plan_p = assembly_plan(kind, PathId::P);
    const AssemblyPlan plan_q = assembly_plan(kind, PathId::Q);
    for (int m = plan_p.base_dimension + 2; m <= n.value(); m += 2) {
        pair.p = assemble_level(pair.p, plan_p, m);
        pair.q = assemble_level(pair.q, plan_q, m);
    }
    const EndpointSpec spec = endpoint_spec(n, kind);
    if (pair.p.nodes.front() != spec.start_p || pair.p.nodes.back() != spec.end_p ||
        pair.q.nodes.front() != spec.start_q || pair.q.nodes.back() != spec.end_q) {
        throw ConstructionError("constructed endpoints do not match the endpoint spec at n=" +
                                std::to_string(n.value()));
    }
    return pair;
}

Cycle close_into_cycle(Path&& path) {
    if (path.nodes.size() < 3) {
        throw ConstructionError("cannot close a path of fewer than 3 nodes into a cycle");
    }
    if (!is_adjacent(path.nodes.back(), path.nodes.front(), path.n)) {
        throw ConstructionError("closing edge missing: " +
                                label_brief(path.nodes.back(), path.n) + " -/- " +
                                label_brief(path.nodes.front(), path.n));
    }
    return Cycle{path.n, std::move(path.nodes)};
}

CyclePair close_pair(PathPair&& pair) {
    Cycle p = close_into_cycle(std::move(pair.p));
    Cycle q = close_into_cycle(std::move(pair.q));
    if (make_edge(p.nodes.front(), p.nodes.back()) == make_edge(q.nodes.front(), q.nodes.back())) {
        throw ConstructionError("the two closing edges coincide");
    }
    return CyclePair{std::move(p), std::move(q)};
}

}  // namespace

PairKind pair_kind_from_string(std::string_view s) {
    if (s == "edh") {
        return PairKind::edge_disjoint_hamiltonian;
    }
    if (s == "ndc") {
        return PairKind::equal_node_disjoint;
    }
    throw ArgumentError("unknown construction kind '" + std::string(s) + "' (expected edh or ndc)");
}

std::string_view to_string(PairKind kind) {
    return kind == PairKind::edge_disjoint_hamiltonian ? "edh" : "ndc";
}

EndpointSpec endpoint_spec(Dimension n, PairKind kind) {
    require_kind_dimension(kind, n);
    const int nv = n.value();
    const NodeLabel top = NodeLabel{1} << (nv - 1);
    const NodeLabel second = NodeLabel{1} << (nv - 2);
    if (kind == PairKind::edge_disjoint_hamiltonian) {
        return EndpointSpec{0, top | second, NodeLabel{1} << 2, second | (NodeLabel{1} << 2), kind,
                            n};
    }
    return EndpointSpec{1, second | 1, 0, top | second, kind, n};
}

Path reverse_path(const Path& p) {
    return Path{p.n, std::vector<NodeLabel>(p.nodes.rbegin(), p.nodes.rend())};
}

Path concat(const Path& first, const Path& second) {
    if (first.n != second.n) {
        throw ArgumentError("concat: dimensions differ (" + std::to_string(first.n.value()) +
                            " vs " + std::to_string(second.n.value()) + ")");
    }
    if (first.nodes.empty() || second.nodes.empty()) {
        throw ArgumentError("concat: paths must be non-empty");
    }
    std::unordered_set<NodeLabel> seen(first.nodes.begin(), first.nodes.end());
    for (NodeLabel b : second.nodes) {
        if (seen.contains(b)) {
            throw DisjointnessError("concat: node " + label_brief(b, first.n) +
                                    " appears in both paths");
        }
    }
    const NodeLabel tail = first.nodes.back();
    const NodeLabel head = second.nodes.front();
    if (!is_adjacent(tail, head, first.n)) {
        throw JunctionError("concat: junction " + label_brief(tail, first.n) + " -> " +
                                label_brief(head, first.n) + " is not an edge",
                            tail, head);
    }
    std::vector<NodeLabel> joined;
    joined.reserve(first.nodes.size() + second.nodes.size());
    joined.insert(joined.end(), first.nodes.begin(), first.nodes.end());
    joined.insert(joined.end(), second.nodes.begin(), second.nodes.end());
    return Path{first.n, std::move(joined)};
}

Path embed_in_quadrant(const Path& sub, int quadrant, Dimension n) {
    if (quadrant < 0 || quadrant > 3) {
        throw ArgumentError("quadrant tag must be in [0, 3], got " + std::to_string(quadrant));
    }
    if (n.value() != sub.n.value() + 2) {
        throw ArgumentError("embed_in_quadrant: target dimension must be sub dimension + 2");
    }
    const NodeLabel prefix = static_cast<NodeLabel>(quadrant) << (n.value() - 2);
    std::vector<NodeLabel> nodes;
    nodes.reserve(sub.nodes.size());
    for (NodeLabel b : sub.nodes) {
        nodes.push_back(b | prefix);
    }
    return Path{n, std::move(nodes)};
}

PathPair edh_base() {
    return PathPair{
        Path{Dimension(kEdhBaseDim), base_nodes(PairKind::edge_disjoint_hamiltonian, PathId::P)},
        Path{Dimension(kEdhBaseDim), base_nodes(PairKind::edge_disjoint_hamiltonian, PathId::Q)}};
}

PathPair ndc_base() {
    return PathPair{
        Path{Dimension(kNdcBaseDim), base_nodes(PairKind::equal_node_disjoint, PathId::P)},
        Path{Dimension(kNdcBaseDim), base_nodes(PairKind::equal_node_disjoint, PathId::Q)}};
}

PathPair edh_paths(Dimension n, int max_n) {
    return build_paths(PairKind::edge_disjoint_hamiltonian, n, max_n);
}

PathPair ndc_paths(Dimension n, int max_n) {
    return build_paths(PairKind::equal_node_disjoint, n, max_n);
}

CyclePair edh_cycles(Dimension n, int max_n) {
    return close_pair(edh_paths(n, max_n));
}

CyclePair ndc_cycles(Dimension n, int max_n) {
    return close_pair(ndc_paths(n, max_n));
}

AssemblyPlan assembly_plan(PairKind kind, PathId which) {
    // Quadrant visit orders of the two concatenation schemes. Slots 1 and 3
    // are always the reversed copies.
    if (kind == PairKind::edge_disjoint_hamiltonian) {
        return which == PathId::P ? AssemblyPlan{{0b00, 0b10, 0b01, 0b11}, kEdhBaseDim}
                                  : AssemblyPlan{{0b00, 0b10, 0b11, 0b01}, kEdhBaseDim};
    }
    return which == PathId::P ? AssemblyPlan{{0b00, 0b10, 0b11, 0b01}, kNdcBaseDim}
                              : AssemblyPlan{{0b00, 0b10, 0b01, 0b11}, kNdcBaseDim};
}

PathStream::PathStream(Dimension n, PairKind kind, PathId which)
    : plan_(assembly_plan(kind, which)), base_(&base_nodes(kind, which)) {
    require_kind_dimension(kind, n);
    const int depth = (n.value() - plan_.base_dimension) / 2;
    total_ = static_cast<std::uint64_t>(base_->size()) << (2 * depth);
    if (n.value() == plan_.base_dimension) {
        return;  // leaf state already points at the forward base table
    }
    levels_.reserve(static_cast<std::size_t>(depth));
    levels_.push_back(Level{n.value(), 0, false, 0});
    descend();
}

void PathStream::descend() {
    while (true) {
        const Level& top = levels_.back();
        const int listed = top.reversed ? 3 - top.slot : top.slot;
        const bool child_reversed = top.reversed ^ (listed % 2 == 1);
        const NodeLabel child_prefix =
            top.prefix | (static_cast<NodeLabel>(plan_.quadrants[listed]) << (top.dim - 2));
        const int child_dim = top.dim - 2;
        if (child_dim == plan_.base_dimension) {
            leaf_prefix_ = child_prefix;
            leaf_reversed_ = child_reversed;
            leaf_pos_ = 0;
            return;
        }
        levels_.push_back(Level{child_dim, 0, child_reversed, child_prefix});
    }
}

void PathStream::advance_leaf() {
    while (!levels_.empty() && levels_.back().slot == 3) {
        levels_.pop_back();
    }
    if (levels_.empty()) {
        done_ = true;
        return;
    }
    ++levels_.back().slot;
    descend();
}

std::optional<NodeLabel> PathStream::next() {
    if (done_) {
        return std::nullopt;
    }
    const auto& table = *base_;
    const std::size_t idx = leaf_reversed_ ? table.size() - 1 - leaf_pos_ : leaf_pos_;
    const NodeLabel out = leaf_prefix_ | table[idx];
    if (++leaf_pos_ == table.size()) {
        advance_leaf();
    }
    return out;
}

}  // namespace tqcube
