#include "tqcube/verification.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <set>
#include <thread>
#include <utility>

#include "tqcube/io.hpp"

namespace tqcube {

namespace {

std::string fmt(NodeLabel b, Dimension n) {
    return n.contains(b) ? label_to_string(b, n) : std::to_string(b);
}

void add_check(VerificationReport& rep, std::string name, bool passed, std::string detail,
               std::optional<Witness> witness = std::nullopt) {
    rep.checks.push_back(CheckResult{std::move(name), passed, std::move(detail), witness});
}

std::optional<std::size_t> first_bad_pair_in_range(const std::vector<NodeLabel>& nodes,
                                                   Dimension n, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
        if (!is_adjacent(nodes[i], nodes[i + 1], n)) {
            return i;
        }
    }
    return std::nullopt;
}

// First index i with (nodes[i], nodes[i+1]) not an edge; scan optionally
// partitioned across threads, merged to the smallest index so the result is
// identical to the sequential scan.
std::optional<std::size_t> first_bad_pair(const std::vector<NodeLabel>& nodes, Dimension n,
                                          int jobs) {
    if (nodes.size() < 2) {
        return std::nullopt;
    }
    const std::size_t pairs = nodes.size() - 1;
    if (jobs <= 1 || pairs < 4096) {
        return first_bad_pair_in_range(nodes, n, 0, pairs);
    }
    const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(jobs), pairs);
    std::vector<std::optional<std::size_t>> found(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    const std::size_t chunk = (pairs + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(pairs, lo + chunk);
        threads.emplace_back(
            [&, lo, hi, w] { found[w] = first_bad_pair_in_range(nodes, n, lo, hi); });
    }
    for (auto& t : threads) {
        t.join();
    }
    for (const auto& f : found) {
        if (f) {
            return f;  // chunks are ordered, so the first hit is the smallest index
        }
    }
    return std::nullopt;
}

// Structural checks shared by every sequence-shaped verifier. Check names
// get `prefix` prepended so pair verifiers can flatten two inputs into one
// report. Returns true when every appended check passed.
bool append_sequence_checks(VerificationReport& rep, const std::string& prefix,
                            const std::vector<NodeLabel>& nodes, Dimension n, Closure closure,
                            bool require_hamiltonian, int jobs) {
    const std::size_t first_check = rep.checks.size();
    if (require_hamiltonian) {
        const std::uint64_t expect = n.node_count();
        const bool ok = nodes.size() == expect;
        add_check(rep, prefix + "node-count", ok,
                  "expected " + std::to_string(expect) + ", got " + std::to_string(nodes.size()),
                  ok ? std::nullopt
                     : std::make_optional(Witness{Witness::Kind::count_mismatch, expect,
                                                  nodes.size(), 0, 0}));
    }
    if (closure == Closure::closed) {
        const bool ok = nodes.size() >= 3;
        add_check(rep, prefix + "cycle-length", ok,
                  "cycle needs >= 3 nodes, got " + std::to_string(nodes.size()),
                  ok ? std::nullopt
                     : std::make_optional(
                           Witness{Witness::Kind::count_mismatch, 3, nodes.size(), 0, 0}));
    }

    std::optional<std::size_t> bad_range;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!n.contains(nodes[i])) {
            bad_range = i;
            break;
        }
    }
    add_check(rep, prefix + "labels-in-range", !bad_range,
              bad_range ? "label " + std::to_string(nodes[*bad_range]) + " at position " +
                              std::to_string(*bad_range) + " exceeds 2^n"
                        : "all labels < 2^" + std::to_string(n.value()),
              bad_range ? std::make_optional(Witness{Witness::Kind::out_of_range,
                                                     nodes[*bad_range], 0, *bad_range, 0})
                        : std::nullopt);
    if (bad_range) {
        return false;  // the remaining checks would index past the label universe
    }

    const auto all_passed = [&] {
        return std::all_of(rep.checks.begin() + static_cast<std::ptrdiff_t>(first_check),
                           rep.checks.end(), [](const CheckResult& c) { return c.passed; });
    };

    {
        std::vector<bool> seen(n.node_count(), false);
        std::optional<std::size_t> dup;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (seen[nodes[i]]) {
                dup = i;
                break;
            }
            seen[nodes[i]] = true;
        }
        add_check(rep, prefix + "distinct-nodes", !dup,
                  dup ? "node " + fmt(nodes[*dup], n) + " repeats at position " +
                            std::to_string(*dup)
                      : "no duplicates",
                  dup ? std::make_optional(
                            Witness{Witness::Kind::duplicate_node, nodes[*dup], 0, *dup, 0})
                      : std::nullopt);
    }

    const auto bad_pair = first_bad_pair(nodes, n, jobs);
    add_check(rep, prefix + "consecutive-adjacency", !bad_pair,
              bad_pair ? "nodes " + fmt(nodes[*bad_pair], n) + " and " +
                             fmt(nodes[*bad_pair + 1], n) + " at positions " +
                             std::to_string(*bad_pair) + "," + std::to_string(*bad_pair + 1) +
                             " are not adjacent"
                       : "every consecutive pair is an edge",
              bad_pair ? std::make_optional(Witness{Witness::Kind::non_adjacent_pair,
                                                    nodes[*bad_pair], nodes[*bad_pair + 1],
                                                    *bad_pair, 0})
                       : std::nullopt);

    if (closure == Closure::closed && nodes.size() >= 2) {
        const bool ok = is_adjacent(nodes.back(), nodes.front(), n);
        add_check(rep, prefix + "closing-edge", ok,
                  ok ? "last node is adjacent to the first"
                     : "nodes " + fmt(nodes.back(), n) + " and " + fmt(nodes.front(), n) +
                           " do not close the cycle",
                  ok ? std::nullopt
                     : std::make_optional(Witness{Witness::Kind::no_closing_edge, nodes.back(),
                                                  nodes.front(), nodes.size() - 1, 0}));
    }
    return all_passed();
}

std::vector<Edge> edge_set(const std::vector<NodeLabel>& nodes, Closure closure) {
    std::vector<Edge> edges;
    if (nodes.size() < 2) {
        return edges;
    }
    edges.reserve(nodes.size());
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        edges.push_back(make_edge(nodes[i - 1], nodes[i]));
    }
    if (closure == Closure::closed && nodes.front() != nodes.back()) {
        edges.push_back(make_edge(nodes.back(), nodes.front()));
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

VerificationReport edge_disjoint_impl(const std::vector<NodeLabel>& a, Closure ca,
                                      const std::vector<NodeLabel>& b, Closure cb, Dimension n,
                                      std::string subject) {
    VerificationReport rep{std::move(subject), {}};
    const bool a_ok = append_sequence_checks(rep, "first:", a, n, ca, false, 1);
    const bool b_ok = append_sequence_checks(rep, "second:", b, n, cb, false, 1);
    if (!a_ok || !b_ok) {
        return rep;  // disjointness is only judged between structurally valid inputs
    }
    const std::vector<Edge> ea = edge_set(a, ca);
    const std::vector<Edge> eb = edge_set(b, cb);
    std::vector<Edge> shared;
    std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(), std::back_inserter(shared));
    const bool ok = shared.empty();
    add_check(rep, "edge-intersection", ok,
              std::to_string(shared.size()) + " shared edge(s)",
              ok ? std::nullopt
                 : std::make_optional(Witness{Witness::Kind::shared_edge, shared.front().u,
                                              shared.front().v, 0, shared.size()}));
    return rep;
}

}  // namespace

bool VerificationReport::overall() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::find(std::string_view name) const {
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

VerificationReport verify_hamiltonian_path(const Path& p, int max_n, int jobs) {
    require_within_cap(p.n, max_n, "Hamiltonian path verification");
    VerificationReport rep{"hamiltonian path, n=" + std::to_string(p.n.value()), {}};
    append_sequence_checks(rep, "", p.nodes, p.n, Closure::open, true, jobs);
    return rep;
}

VerificationReport verify_hamiltonian_cycle(const Cycle& c, int max_n, int jobs) {
    require_within_cap(c.n, max_n, "Hamiltonian cycle verification");
    VerificationReport rep{"hamiltonian cycle, n=" + std::to_string(c.n.value()), {}};
    append_sequence_checks(rep, "", c.nodes, c.n, Closure::closed, true, jobs);
    return rep;
}

VerificationReport verify_cycle(const Cycle& c, int max_n, int jobs) {
    require_within_cap(c.n, max_n, "cycle verification");
    VerificationReport rep{"cycle, n=" + std::to_string(c.n.value()), {}};
    append_sequence_checks(rep, "", c.nodes, c.n, Closure::closed, false, jobs);
    return rep;
}

VerificationReport verify_edge_disjoint(const Path& a, const Path& b) {
    if (a.n != b.n) {
        throw ArgumentError("verify_edge_disjoint: dimensions differ");
    }
    return edge_disjoint_impl(a.nodes, Closure::open, b.nodes, Closure::open, a.n,
                              "edge-disjoint paths, n=" + std::to_string(a.n.value()));
}

VerificationReport verify_edge_disjoint(const Cycle& a, const Cycle& b) {
    if (a.n != b.n) {
        throw ArgumentError("verify_edge_disjoint: dimensions differ");
    }
    return edge_disjoint_impl(a.nodes, Closure::closed, b.nodes, Closure::closed, a.n,
                              "edge-disjoint cycles, n=" + std::to_string(a.n.value()));
}

VerificationReport verify_equal_node_disjoint(const Cycle& a, const Cycle& b, Dimension n,
                                              int max_n) {
    require_within_cap(n, max_n, "node-disjointness verification");
    VerificationReport rep{"equal node-disjoint cycles, n=" + std::to_string(n.value()), {}};

    bool ranges_ok = true;
    for (const auto& [nodes, prefix] :
         {std::pair{&a.nodes, "first:"}, std::pair{&b.nodes, "second:"}}) {
        std::optional<std::size_t> bad;
        for (std::size_t i = 0; i < nodes->size(); ++i) {
            if (!n.contains((*nodes)[i])) {
                bad = i;
                break;
            }
        }
        add_check(rep, std::string(prefix) + "labels-in-range", !bad,
                  bad ? "label at position " + std::to_string(*bad) + " exceeds 2^n"
                      : "all labels in range",
                  bad ? std::make_optional(Witness{Witness::Kind::out_of_range, (*nodes)[*bad], 0,
                                                   *bad, 0})
                      : std::nullopt);
        ranges_ok = ranges_ok && !bad;
    }
    if (!ranges_ok) {
        return rep;
    }

    const std::uint64_t half = n.node_count() / 2;
    std::vector<bool> in_a(n.node_count(), false);
    std::uint64_t size_a = 0;
    for (NodeLabel x : a.nodes) {
        if (!in_a[x]) {
            in_a[x] = true;
            ++size_a;
        }
    }
    std::vector<bool> in_b(n.node_count(), false);
    std::uint64_t size_b = 0;
    std::optional<NodeLabel> overlap;
    for (NodeLabel x : b.nodes) {
        if (!overlap && in_a[x]) {
            overlap = x;
        }
        if (!in_b[x]) {
            in_b[x] = true;
            ++size_b;
        }
    }

    add_check(rep, "first-node-count", size_a == half,
              "expected " + std::to_string(half) + " distinct nodes, got " + std::to_string(size_a),
              size_a == half ? std::nullopt
                             : std::make_optional(
                                   Witness{Witness::Kind::count_mismatch, half, size_a, 0, 0}));
    add_check(rep, "second-node-count", size_b == half,
              "expected " + std::to_string(half) + " distinct nodes, got " + std::to_string(size_b),
              size_b == half ? std::nullopt
                             : std::make_optional(
                                   Witness{Witness::Kind::count_mismatch, half, size_b, 0, 0}));
    add_check(rep, "node-disjoint", !overlap,
              overlap ? "node " + fmt(*overlap, n) + " appears in both cycles"
                      : "no common node",
              overlap ? std::make_optional(Witness{Witness::Kind::overlapping_node, *overlap, 0, 0,
                                                   0})
                      : std::nullopt);

    std::uint64_t missing = 0;
    std::optional<NodeLabel> first_missing;
    for (std::uint64_t x = 0; x < n.node_count(); ++x) {
        if (!in_a[x] && !in_b[x]) {
            if (!first_missing) {
                first_missing = x;
            }
            ++missing;
        }
    }
    add_check(rep, "full-coverage", missing == 0,
              missing == 0 ? "every node of TQ_n is covered"
                           : std::to_string(missing) + " node(s) uncovered, first " +
                                 fmt(*first_missing, n),
              missing == 0 ? std::nullopt
                           : std::make_optional(Witness{Witness::Kind::missing_nodes,
                                                        *first_missing, 0, 0, missing}));
    return rep;
}

GraphStats graph_stats(Dimension n, int max_n) {
    require_within_cap(n, max_n, "graph statistics");
    std::uint64_t node_count = 0;
    std::uint64_t degree_sum = 0;
    bool regular = true;
    const std::size_t expected_degree = static_cast<std::size_t>(n.value());
    for (NodeLabel b = 0; b < n.node_count(); ++b) {
        const auto nb = neighbors(b, n);
        regular = regular && nb.size() == expected_degree;
        degree_sum += nb.size();
        ++node_count;
    }
    return GraphStats{n, node_count, degree_sum / 2, regular, regular ? n.value() : -1};
}

std::vector<Path> oracle_find_hamiltonian_paths(Dimension n, NodeLabel start, NodeLabel end,
                                                std::size_t limit) {
    if (n.value() > 5) {
        throw CapacityError("Hamiltonian path search is exhaustive; refused beyond n=5, got n=" +
                            std::to_string(n.value()));
    }
    if (!n.contains(start) || !n.contains(end)) {
        throw ArgumentError("oracle: start/end label out of range for n=" +
                            std::to_string(n.value()));
    }
    if (limit < 1) {
        throw ArgumentError("oracle: limit must be >= 1");
    }
    std::vector<Path> results;
    if (start == end) {
        return results;  // a Hamiltonian path has distinct endpoints when 2^n > 1
    }

    const std::size_t total = static_cast<std::size_t>(n.node_count());
    std::vector<std::vector<NodeLabel>> adj(total);
    for (NodeLabel b = 0; b < total; ++b) {
        adj[b] = neighbors(b, n);  // already ascending, so the search is reproducible
    }

    std::vector<NodeLabel> path;
    path.reserve(total);
    std::vector<bool> visited(total, false);

    auto dfs = [&](auto&& self, NodeLabel u) -> bool {
        if (path.size() == total) {
            if (u == end) {
                results.push_back(Path{n, path});
            }
            return results.size() >= limit;
        }
        for (NodeLabel v : adj[u]) {
            if (visited[v]) {
                continue;
            }
            if (v == end && path.size() + 1 != total) {
                continue;  // the end node may only be visited last
            }
            visited[v] = true;
            path.push_back(v);
            const bool stop = self(self, v);
            path.pop_back();
            visited[v] = false;
            if (stop) {
                return true;
            }
        }
        return false;
    };

    visited[start] = true;
    path.push_back(start);
    dfs(dfs, start);
    return results;
}

OracleEdhAnswer oracle_edh_pair_exists(Dimension n) {
    if (n.value() == 3) {
        OracleEdhAnswer answer;
        answer.exists = false;
        answer.notes.push_back(
            "degree argument: two edge-disjoint Hamiltonian cycles use 4 distinct edges at "
            "every node, but TQ_3 is 3-regular (and 2*8 = 16 edges exceed its 12)");

        // Exhaustive corroboration: every Hamiltonian cycle contains node 000,
        // so closing every Hamiltonian path from 000 to one of its neighbors
        // enumerates them all (each cycle twice, once per direction).
        const NodeLabel origin = 0;
        std::set<std::vector<Edge>> cycles;
        for (NodeLabel w : neighbors(origin, n)) {
            for (const Path& p :
                 oracle_find_hamiltonian_paths(n, origin, w, std::numeric_limits<std::size_t>::max())) {
                cycles.insert(edge_set(p.nodes, Closure::closed));
            }
        }
        bool disjoint_pair = false;
        for (auto it = cycles.begin(); it != cycles.end() && !disjoint_pair; ++it) {
            for (auto jt = std::next(it); jt != cycles.end() && !disjoint_pair; ++jt) {
                std::vector<Edge> shared;
                std::set_intersection(it->begin(), it->end(), jt->begin(), jt->end(),
                                      std::back_inserter(shared));
                disjoint_pair = shared.empty();
            }
        }
        answer.notes.push_back("exhaustive search: " + std::to_string(cycles.size()) +
                               " Hamiltonian cycles, " +
                               (disjoint_pair ? "an edge-disjoint pair exists"
                                              : "no pair is edge-disjoint"));
        answer.exists = disjoint_pair;
        return answer;
    }
    if (n.value() == 5) {
        OracleEdhAnswer answer;
        const auto seeded = oracle_find_hamiltonian_paths(n, 0b00000, 0b11000, 1);
        answer.notes.push_back(
            "search: found " + std::to_string(seeded.size()) +
            " Hamiltonian path(s) 00000 -> 11000 with adjacent endpoints, so at least one "
            "Hamiltonian cycle exists");
        CyclePair pair = edh_cycles(n);
        const bool ok = verify_hamiltonian_cycle(pair.p).overall() &&
                        verify_hamiltonian_cycle(pair.q).overall() &&
                        verify_edge_disjoint(pair.p, pair.q).overall();
        answer.notes.push_back(ok ? "constructed pair re-verified: two Hamiltonian cycles, "
                                    "edge sets disjoint"
                                  : "constructed pair failed re-verification");
        answer.exists = ok;
        if (ok) {
            answer.witness = std::move(pair);
        }
        return answer;
    }
    throw ArgumentError("oracle_edh_pair_exists supports n in {3, 5}, got n=" +
                        std::to_string(n.value()));
}

}  // namespace tqcube
