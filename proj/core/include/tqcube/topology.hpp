#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tqcube/errors.hpp"

namespace tqcube {

/// A node of TQ_n, encoded as an unsigned integer with bit i holding b_i.
/// The textual form b_{n-1}...b_1b_0 is therefore read MSB-first.
using NodeLabel = std::uint64_t;

/// Largest dimension for which label arithmetic fits in 64 bits.
inline constexpr int kMaxDimension = 61;

/// Largest n that whole-graph enumeration accepts unless the caller raises
/// the cap explicitly (2^25 nodes is still desk scale).
inline constexpr int kDefaultEnumerationCap = 25;

/// Dimension of a twisted cube. The construction is defined for odd n only,
/// so even values are rejected here rather than rounded anywhere else.
class Dimension {
public:
    explicit Dimension(int n);

    int value() const noexcept { return n_; }
    std::uint64_t node_count() const noexcept { return std::uint64_t{1} << n_; }
    /// n * 2^(n-1); throws CapacityError if the product overflows 64 bits.
    std::uint64_t edge_count() const;
    bool contains(NodeLabel b) const noexcept { return b < node_count(); }

    friend bool operator==(Dimension, Dimension) noexcept = default;

private:
    int n_;
};

/// Undirected edge in canonical form: u < v.
struct Edge {
    NodeLabel u;
    NodeLabel v;

    friend bool operator==(const Edge&, const Edge&) noexcept = default;
    friend auto operator<=>(const Edge&, const Edge&) noexcept = default;
};

/// Canonicalizes an unordered pair; rejects self-loops.
Edge make_edge(NodeLabel a, NodeLabel b);

/// XOR of bits bit_index..0 of b, i.e. the i-th bit parity of the label.
int parity(NodeLabel b, int bit_index, Dimension n);

/// The n neighbors of b in TQ_n, sorted ascending.
///
/// Computed by walking the recursive definition down two dimensions at a
/// time: at sub-dimension m >= 3 the node gains the cross neighbor that
/// flips bit m-1, plus either the one flipping bits m-1 and m-2 (parity of
/// bits m-3..0 is 0) or the one flipping bit m-2 alone (parity 1); the walk
/// bottoms out at m = 1 with the single bit-0 neighbor.
std::vector<NodeLabel> neighbors(NodeLabel b, Dimension n);

/// True iff (u, v) is an edge of TQ_n. Symmetric; false for u == v.
bool is_adjacent(NodeLabel u, NodeLabel v, Dimension n);

/// Quadrant tag (b_{n-1} << 1) | b_{n-2} identifying which sub-twisted-cube
/// of the top-level split contains b. Requires n >= 3.
int subcube_of(NodeLabel b, Dimension n);

/// Renders a quadrant tag as the two-character prefix "ij".
std::string subcube_tag_string(int tag);

/// Streams every undirected edge exactly once, ascending by (u, v).
/// Total count is n * 2^(n-1). Refuses n > max_n with CapacityError.
void for_each_edge(Dimension n, const std::function<void(const Edge&)>& fn,
                   int max_n = kDefaultEnumerationCap);

/// Materialized form of for_each_edge, same order.
std::vector<Edge> edge_list(Dimension n, int max_n = kDefaultEnumerationCap);

/// Throws CapacityError when n exceeds max_n. `what` names the operation.
void require_within_cap(Dimension n, int max_n, const char* what);

}  // namespace tqcube
