#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tqcube/topology.hpp"

namespace tqcube {

/// Ordered sequence of distinct nodes with every consecutive pair adjacent.
struct Path {
    Dimension n;
    std::vector<NodeLabel> nodes;

    friend bool operator==(const Path&, const Path&) = default;
};

/// A Path whose last node is also adjacent to its first.
struct Cycle {
    Dimension n;
    std::vector<NodeLabel> nodes;

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// The two pair constructions this library builds.
enum class PairKind {
    edge_disjoint_hamiltonian,  // "edh": two edge-disjoint Hamiltonian paths/cycles, odd n >= 5
    equal_node_disjoint,        // "ndc": two equal node-disjoint paths/cycles, odd n >= 3
};

PairKind pair_kind_from_string(std::string_view s);
std::string_view to_string(PairKind kind);

/// Which of the pair.
enum class PathId { P, Q };

struct PathPair {
    Path p;
    Path q;
};

struct CyclePair {
    Cycle p;
    Cycle q;
};

/// The four end nodes the constructions guarantee for a given n and kind.
struct EndpointSpec {
    NodeLabel start_p;
    NodeLabel end_p;
    NodeLabel start_q;
    NodeLabel end_q;
    PairKind kind;
    Dimension n;

    friend bool operator==(const EndpointSpec&, const EndpointSpec&) = default;
};

EndpointSpec endpoint_spec(Dimension n, PairKind kind);

/// Same nodes, reversed order.
Path reverse_path(const Path& p);

/// Joins two node-disjoint paths across the edge end(first) -> start(second).
/// Throws JunctionError when that edge does not exist and DisjointnessError
/// when the node sets overlap.
Path concat(const Path& first, const Path& second);

/// Relabels a path of TQ_{n-2} into the quadrant of TQ_n whose top two bits
/// are the given tag; requires n == sub.n + 2.
Path embed_in_quadrant(const Path& sub, int quadrant, Dimension n);

/// The two hard-coded edge-disjoint Hamiltonian paths of TQ_5. The tables
/// are validated once on first use (adjacency, distinctness, endpoints,
/// edge-disjointness) and any defect raises ConstructionError immediately.
PathPair edh_base();

/// The two hard-coded equal node-disjoint paths of TQ_3, validated likewise.
PathPair ndc_base();

/// Two edge-disjoint Hamiltonian paths of TQ_n, odd n >= 5. For n == 3 the
/// error explains that no such pair exists rather than citing a bad argument.
PathPair edh_paths(Dimension n, int max_n = kDefaultEnumerationCap);

/// Two equal node-disjoint paths of TQ_n (each of 2^(n-1) nodes), odd n >= 3.
PathPair ndc_paths(Dimension n, int max_n = kDefaultEnumerationCap);

/// The path pairs closed into cycles via their start/end edges.
CyclePair edh_cycles(Dimension n, int max_n = kDefaultEnumerationCap);
CyclePair ndc_cycles(Dimension n, int max_n = kDefaultEnumerationCap);

/// Quadrant visit order for one assembled level. Children at slots 1 and 3
/// are traversed reversed. Shared by the materialized builder and the
/// streaming walker so both follow the same concatenation scheme.
struct AssemblyPlan {
    std::array<int, 4> quadrants;  // tag values in visit order
    int base_dimension;            // 5 for edh, 3 for ndc
};

AssemblyPlan assembly_plan(PairKind kind, PathId which);

/// Walks one constructed path in order using O(n) memory, without ever
/// materializing the 2^n (or 2^(n-1)) node sequence. No enumeration cap:
/// any odd n up to kMaxDimension is accepted.
class PathStream {
public:
    PathStream(Dimension n, PairKind kind, PathId which);

    /// Next label, or nullopt once the walk is complete.
    std::optional<NodeLabel> next();

    /// Number of labels the stream yields in total.
    std::uint64_t total() const noexcept { return total_; }

private:
    struct Level {
        int dim;           // sub-dimension this level assembles
        int slot;          // current child, 0..3
        bool reversed;     // whether this level's segment is traversed backwards
        NodeLabel prefix;  // bits above `dim` fixed so far
    };

    void descend();
    void advance_leaf();

    AssemblyPlan plan_;
    const std::vector<NodeLabel>* base_;  // forward base table
    std::vector<Level> levels_;
    NodeLabel leaf_prefix_ = 0;
    bool leaf_reversed_ = false;
    std::size_t leaf_pos_ = 0;
    std::uint64_t total_ = 0;
    bool done_ = false;
};

}  // namespace tqcube
