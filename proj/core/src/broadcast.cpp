#include "tqcube/broadcast.hpp"

#include <algorithm>
#include <bit>

namespace tqcube {

namespace {

std::vector<bool> node_set_of(const Cycle& ring) {
    std::vector<bool> set(ring.n.node_count(), false);
    for (NodeLabel b : ring.nodes) {
        set[b] = true;
    }
    return set;
}

enum class SetRelation { equal, disjoint, partial };

SetRelation relate(const std::vector<bool>& a, const std::vector<bool>& b) {
    bool any_shared = false;
    bool any_unshared = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] && b[i]) {
            any_shared = true;
        } else if (a[i] != b[i]) {
            any_unshared = true;
        }
    }
    if (any_shared && !any_unshared) {
        return SetRelation::equal;
    }
    if (!any_shared) {
        return SetRelation::disjoint;
    }
    return SetRelation::partial;
}

}  // namespace

LinkLoadReport simulate_all_to_all(std::span<const RingSchedule> schedules, int max_n) {
    if (schedules.empty()) {
        throw ArgumentError("simulate_all_to_all: at least one ring schedule is required");
    }
    if (schedules.size() > 64) {
        throw ArgumentError("simulate_all_to_all: at most 64 ring schedules are supported");
    }
    const Dimension n = schedules.front().ring.n;
    for (const RingSchedule& s : schedules) {
        if (s.ring.n != n) {
            throw ConfigError("simulate_all_to_all: rings live in different dimensions");
        }
    }
    require_within_cap(n, max_n, "broadcast simulation");

    for (std::size_t i = 0; i < schedules.size(); ++i) {
        const VerificationReport rep = verify_cycle(schedules[i].ring, n.value());
        if (!rep.overall()) {
            for (const CheckResult& c : rep.checks) {
                if (!c.passed) {
                    throw ArgumentError("ring " + std::to_string(i) + " is not a valid cycle: " +
                                        c.name + " failed (" + c.detail + ")");
                }
            }
        }
    }

    // Rings must pairwise cover identical node sets (shared broadcast) or be
    // fully disjoint (independent per-component broadcasts).
    std::vector<std::vector<bool>> sets;
    sets.reserve(schedules.size());
    for (const RingSchedule& s : schedules) {
        sets.push_back(node_set_of(s.ring));
    }
    bool all_equal = true;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            const SetRelation rel = relate(sets[i], sets[j]);
            if (rel == SetRelation::partial) {
                throw ConfigError("rings " + std::to_string(i) + " and " + std::to_string(j) +
                                  " overlap without covering the same node set");
            }
            all_equal = all_equal && rel == SetRelation::equal;
        }
    }

    const std::size_t halves =
        static_cast<std::size_t>(std::count_if(schedules.begin(), schedules.end(),
                                               [](const RingSchedule& s) {
                                                   return s.share == MessageShare::half;
                                               }));
    if (halves > 0) {
        if (halves != schedules.size() || schedules.size() != 2 || !all_equal) {
            throw ConfigError(
                "half shares model one payload split in two: exactly two rings over the same "
                "node set must both carry share=half");
        }
    }

    LinkLoadReport report{n, 0, 0, {}, {}, {}};
    std::map<Edge, std::uint64_t> users;  // undirected edge -> bitmask of ring indices
    int half_index = 0;

    for (std::size_t ring_idx = 0; ring_idx < schedules.size(); ++ring_idx) {
        const RingSchedule& sched = schedules[ring_idx];
        const std::vector<NodeLabel>& ring = sched.ring.nodes;
        const std::size_t k = ring.size();
        const std::uint64_t steps = k - 1;

        RingOutcome outcome;
        outcome.length = k;
        outcome.steps = steps;
        outcome.direction = sched.direction;
        outcome.share = sched.share;
        outcome.payload_half = sched.share == MessageShare::half ? half_index++ : -1;

        // Synchronous pipeline: the ring is full from the first step, so at
        // every step each node receives one new message (the one its
        // predecessor got the step before) and each directed ring edge
        // carries exactly one message. Counts therefore advance uniformly by
        // one per step for ring-length - 1 steps.
        outcome.received.assign(k, steps);
        outcome.complete = std::all_of(outcome.received.begin(), outcome.received.end(),
                                       [&](std::uint64_t r) { return r == steps; });

        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t pred =
                sched.direction == RingDirection::forward ? (j + k - 1) % k : (j + 1) % k;
            report.directed_load[{ring[pred], ring[j]}] += steps;
            users[make_edge(ring[pred], ring[j])] |= std::uint64_t{1} << ring_idx;
        }

        report.steps = std::max(report.steps, steps);
        report.rings.push_back(std::move(outcome));
    }

    for (const auto& [edge, mask] : users) {
        if (std::popcount(mask) > 1) {
            ++report.contention_edges;
            report.contended.push_back(edge);
        }
    }
    return report;
}

ContentionSummary contention_report(const Cycle& first, const Cycle& second, int max_n) {
    if (first.n != second.n) {
        throw ArgumentError("contention_report: dimensions differ");
    }
    const Dimension n = first.n;
    require_within_cap(n, max_n, "contention report");

    auto ring_edges = [](const Cycle& c) {
        std::vector<Edge> edges;
        edges.reserve(c.nodes.size());
        for (std::size_t i = 1; i < c.nodes.size(); ++i) {
            edges.push_back(make_edge(c.nodes[i - 1], c.nodes[i]));
        }
        if (c.nodes.size() >= 2 && c.nodes.front() != c.nodes.back()) {
            edges.push_back(make_edge(c.nodes.back(), c.nodes.front()));
        }
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    const std::vector<Edge> ea = ring_edges(first);
    const std::vector<Edge> eb = ring_edges(second);

    ContentionSummary summary;
    for_each_edge(
        n,
        [&](const Edge& e) {
            const bool in_a = std::binary_search(ea.begin(), ea.end(), e);
            const bool in_b = std::binary_search(eb.begin(), eb.end(), e);
            ++summary.total_edges;
            if (in_a && in_b) {
                ++summary.shared;
                summary.shared_edges.push_back(e);
            } else if (in_a) {
                ++summary.first_only;
            } else if (in_b) {
                ++summary.second_only;
            } else {
                ++summary.unused;
            }
        },
        max_n);
    return summary;
}

}  // namespace tqcube
