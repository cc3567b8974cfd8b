#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tqcube/construction.hpp"

namespace tqcube {

/// Machine-checkable evidence attached to a failing check, so a failure can
/// be re-examined independently of the checker that produced it.
struct Witness {
    enum class Kind {
        out_of_range,       // a: offending label, index: its position
        duplicate_node,     // a: label, index: position of the repeat
        count_mismatch,     // a: expected count, b: actual count
        non_adjacent_pair,  // a, b: the labels, index: position of a
        no_closing_edge,    // a: last node, b: first node
        shared_edge,        // a, b: one shared edge, count: total shared
        overlapping_node,   // a: a node present in both inputs
        missing_nodes,      // a: smallest uncovered label, count: how many
    };

    Kind kind{};
    NodeLabel a = 0;
    NodeLabel b = 0;
    std::size_t index = 0;
    std::uint64_t count = 0;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    std::optional<Witness> witness;
};

struct VerificationReport {
    std::string subject;
    std::vector<CheckResult> checks;

    /// Conjunction of all recorded checks.
    bool overall() const;
    const CheckResult* find(std::string_view name) const;
};

/// Whether a node sequence is to be read as an open path or a closed cycle.
/// Passed explicitly: the checkers never infer closure from adjacency.
enum class Closure { open, closed };

/// Full Hamiltonian-path check: node count 2^n, labels in range, no
/// duplicates, every consecutive pair adjacent. `jobs` > 1 partitions the
/// adjacency scan across threads; the merged report is identical.
VerificationReport verify_hamiltonian_path(const Path& p,
                                           int max_n = kDefaultEnumerationCap,
                                           int jobs = 1);

/// verify_hamiltonian_path plus the closing edge and minimum length 3.
VerificationReport verify_hamiltonian_cycle(const Cycle& c,
                                            int max_n = kDefaultEnumerationCap,
                                            int jobs = 1);

/// Structural cycle check without the Hamiltonian node-count requirement.
VerificationReport verify_cycle(const Cycle& c,
                                int max_n = kDefaultEnumerationCap,
                                int jobs = 1);

/// Checks that both inputs are structurally valid (in range, distinct,
/// consecutive adjacency, closing edge for cycles) and that their canonical
/// edge sets, closing edges included, do not intersect.
VerificationReport verify_edge_disjoint(const Path& a, const Path& b);
VerificationReport verify_edge_disjoint(const Cycle& a, const Cycle& b);

/// Checks |V(a)| == |V(b)| == 2^(n-1), disjoint node sets, and full coverage
/// of the 2^n labels.
VerificationReport verify_equal_node_disjoint(const Cycle& a, const Cycle& b,
                                              Dimension n,
                                              int max_n = kDefaultEnumerationCap);

struct GraphStats {
    Dimension n;
    std::uint64_t node_count = 0;
    std::uint64_t edge_count = 0;
    bool is_regular = false;
    int degree = 0;

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

/// Counts nodes and edges by enumeration and verifies n-regularity.
GraphStats graph_stats(Dimension n, int max_n = kDefaultEnumerationCap);

/// Depth-first backtracking search for Hamiltonian paths from start to end,
/// neighbor order ascending, so results are reproducible. Returns up to
/// `limit` paths. Practical bound n <= 5; beyond that CapacityError.
std::vector<Path> oracle_find_hamiltonian_paths(Dimension n, NodeLabel start,
                                                NodeLabel end, std::size_t limit);

struct OracleEdhAnswer {
    bool exists = false;
    /// One line per piece of justification (degree argument, search summary,
    /// checker outcomes), suitable for direct printing.
    std::vector<std::string> notes;
    /// A verified edge-disjoint Hamiltonian cycle pair when exists is true.
    std::optional<CyclePair> witness;
};

/// Answers whether TQ_n admits two edge-disjoint Hamiltonian cycles, for
/// n in {3, 5}. For n == 3 the answer is justified both by the degree
/// argument and by exhaustive search over Hamiltonian cycle pairs.
OracleEdhAnswer oracle_edh_pair_exists(Dimension n);

}  // namespace tqcube
