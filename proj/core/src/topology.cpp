#include "tqcube/topology.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace tqcube {

namespace {

void require_valid_label(NodeLabel b, Dimension n, const char* who) {
    if (!n.contains(b)) {
        throw ArgumentError(std::string(who) + ": label " + std::to_string(b) +
                            " out of range for n=" + std::to_string(n.value()));
    }
}

// XOR of the low `bits` bits of b.
int xor_low_bits(NodeLabel b, int bits) {
    const NodeLabel mask = (NodeLabel{1} << bits) - 1;
    return std::popcount(b & mask) & 1;
}

}  // namespace

Dimension::Dimension(int n) : n_(n) {
    if (n < 1) {
        throw ArgumentError("dimension must be >= 1, got " + std::to_string(n));
    }
    if (n % 2 == 0) {
        throw ArgumentError("TQ_n is defined for odd n only, got " + std::to_string(n));
    }
    if (n > kMaxDimension) {
        throw ArgumentError("dimension " + std::to_string(n) + " exceeds label width limit " +
                            std::to_string(kMaxDimension));
    }
}

std::uint64_t Dimension::edge_count() const {
    const std::uint64_t half = node_count() >> 1;  // 2^(n-1)
    if (n_ > 0 && half > UINT64_MAX / static_cast<std::uint64_t>(n_)) {
        throw CapacityError("edge count n*2^(n-1) overflows 64 bits at n=" + std::to_string(n_));
    }
    return static_cast<std::uint64_t>(n_) * half;
}

Edge make_edge(NodeLabel a, NodeLabel b) {
    if (a == b) {
        throw ArgumentError("edge endpoints must differ, got " + std::to_string(a) + " twice");
    }
    return a < b ? Edge{a, b} : Edge{b, a};
}

int parity(NodeLabel b, int bit_index, Dimension n) {
    require_valid_label(b, n, "parity");
    if (bit_index < 0 || bit_index >= n.value()) {
        throw ArgumentError("parity: bit index " + std::to_string(bit_index) +
                            " out of range for n=" + std::to_string(n.value()));
    }
    return xor_low_bits(b, bit_index + 1);
}

std::vector<NodeLabel> neighbors(NodeLabel b, Dimension n) {
    require_valid_label(b, n, "neighbors");
    std::vector<NodeLabel> out;
    out.reserve(static_cast<std::size_t>(n.value()));
    for (int m = n.value(); m >= 3; m -= 2) {
        out.push_back(b ^ (NodeLabel{1} << (m - 1)));
        if (xor_low_bits(b, m - 2) == 0) {
            out.push_back(b ^ (NodeLabel{3} << (m - 2)));
        } else {
            out.push_back(b ^ (NodeLabel{1} << (m - 2)));
        }
    }
    out.push_back(b ^ NodeLabel{1});
    std::sort(out.begin(), out.end());
    return out;
}

bool is_adjacent(NodeLabel u, NodeLabel v, Dimension n) {
    require_valid_label(u, n, "is_adjacent");
    require_valid_label(v, n, "is_adjacent");
    const NodeLabel diff = u ^ v;
    if (diff == 0) {
        return false;
    }
    const int high = std::bit_width(diff) - 1;
    if (high == 0) {
        return true;  // diff == 1: the TQ_1 edge at the bottom of the recursion
    }
    // Bit positions pair up as (m-1, m-2) per sub-dimension m = n, n-2, ..., 3.
    const int m = (high % 2 == 0) ? high + 1 : high + 2;
    const NodeLabel hi = NodeLabel{1} << (m - 1);
    const NodeLabel lo = NodeLabel{1} << (m - 2);
    if (diff == hi) {
        return true;
    }
    const int par = xor_low_bits(u, m - 2);  // bits below m-2 agree between u and v
    if (diff == (hi | lo)) {
        return par == 0;
    }
    if (diff == lo) {
        return par == 1;
    }
    return false;
}

int subcube_of(NodeLabel b, Dimension n) {
    if (n.value() < 3) {
        throw ArgumentError("subcube_of: TQ_1 has no subcubes");
    }
    require_valid_label(b, n, "subcube_of");
    return static_cast<int>(b >> (n.value() - 2));
}

std::string subcube_tag_string(int tag) {
    if (tag < 0 || tag > 3) {
        throw ArgumentError("quadrant tag must be in [0, 3], got " + std::to_string(tag));
    }
    std::string s(2, '0');
    s[0] = static_cast<char>('0' + ((tag >> 1) & 1));
    s[1] = static_cast<char>('0' + (tag & 1));
    return s;
}

void require_within_cap(Dimension n, int max_n, const char* what) {
    if (n.value() > max_n) {
        throw CapacityError(std::string(what) + " refused at n=" + std::to_string(n.value()) +
                            ": cap is n<=" + std::to_string(max_n));
    }
}

void for_each_edge(Dimension n, const std::function<void(const Edge&)>& fn, int max_n) {
    require_within_cap(n, max_n, "edge enumeration");
    const NodeLabel total = n.node_count();
    for (NodeLabel u = 0; u < total; ++u) {
        for (NodeLabel v : neighbors(u, n)) {
            if (v > u) {
                fn(Edge{u, v});
            }
        }
    }
}

std::vector<Edge> edge_list(Dimension n, int max_n) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(n.edge_count()));
    for_each_edge(n, [&](const Edge& e) { out.push_back(e); }, max_n);
    return out;
}

}  // namespace tqcube
