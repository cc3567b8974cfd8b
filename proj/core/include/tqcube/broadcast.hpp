#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "tqcube/verification.hpp"

namespace tqcube {

/// Largest n the broadcast simulator accepts by default: the pipeline walks
/// ring-length - 1 steps over up to 2^n nodes, tracked as counts.
inline constexpr int kDefaultSimulationCap = 15;

enum class RingDirection { forward, backward };

/// Whether a ring carries every node's whole payload or one of two halves.
enum class MessageShare { whole, half };

struct RingSchedule {
    Cycle ring;
    RingDirection direction = RingDirection::forward;
    MessageShare share = MessageShare::whole;
};

/// Per-ring outcome of one full all-to-all round.
struct RingOutcome {
    std::size_t length = 0;
    std::uint64_t steps = 0;  // ring length - 1
    RingDirection direction = RingDirection::forward;
    MessageShare share = MessageShare::whole;
    int payload_half = -1;  // which half of every node's payload rode this ring; -1 for whole
    bool complete = false;  // every ring member received length - 1 messages
    std::vector<std::uint64_t> received;  // message count per ring position
};

struct LinkLoadReport {
    Dimension n;
    std::uint64_t steps = 0;  // one full round: max over rings
    std::uint64_t contention_edges = 0;  // undirected edges used by more than one ring
    std::vector<RingOutcome> rings;
    std::map<std::pair<NodeLabel, NodeLabel>, std::uint64_t> directed_load;
    std::vector<Edge> contended;  // the contended undirected edges, canonical order
};

/// Runs the synchronous pipeline on every schedule: at each step every node
/// forwards to its ring successor the message it received the previous step,
/// for ring-length - 1 steps. Loads are accounted per directed edge, so two
/// rings crossing a region in opposite directions do not collide.
///
/// Schedules must all live in the same TQ_n and be pairwise over identical
/// or disjoint node sets (identical: split/duplicate broadcast; disjoint:
/// independent per-component broadcasts). Half shares require exactly two
/// rings over the same node set.
LinkLoadReport simulate_all_to_all(std::span<const RingSchedule> schedules,
                                   int max_n = kDefaultSimulationCap);

/// Classification of every TQ_n edge against two rings.
struct ContentionSummary {
    std::uint64_t total_edges = 0;
    std::uint64_t shared = 0;
    std::uint64_t first_only = 0;
    std::uint64_t second_only = 0;
    std::uint64_t unused = 0;
    std::vector<Edge> shared_edges;  // canonical order

    friend bool operator==(const ContentionSummary&, const ContentionSummary&) = default;
};

ContentionSummary contention_report(const Cycle& first, const Cycle& second,
                                    int max_n = kDefaultEnumerationCap);

}  // namespace tqcube
