#include <doctest.h>

#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "tqcube/construction.hpp"
#include "tqcube/io.hpp"
#include "tqcube/verification.hpp"

using namespace tqcube;

namespace {

// Independent transcription of the two TQ_5 base paths, kept as strings so a
// table defect in the library cannot hide in shared constants.
const std::vector<std::string> kExpectedEdhP = {
    "00000", "00001", "00101", "00100", "10100", "10101", "10001", "10000",
    "10110", "10010", "00010", "00011", "10011", "10111", "00111", "00110",
    "11110", "11010", "01010", "01011", "11011", "11111", "01111", "01110",
    "01000", "01001", "01101", "01100", "11100", "11101", "11001", "11000"};

const std::vector<std::string> kExpectedEdhQ = {
    "00100", "00000", "10000", "10100", "10010", "10011", "10001", "00001",
    "00011", "00111", "00101", "10101", "10111", "10110", "00110", "00010",
    "01010", "01110", "11110", "11111", "11101", "01101", "01111", "01011",
    "01001", "11001", "11011", "11010", "11100", "11000", "01000", "01100"};

std::vector<std::string> to_strings(const std::vector<NodeLabel>& nodes, Dimension n) {
    std::vector<std::string> out;
    out.reserve(nodes.size());
    for (NodeLabel b : nodes) {
        out.push_back(label_to_string(b, n));
    }
    return out;
}

std::vector<NodeLabel> collect(PathStream stream) {
    std::vector<NodeLabel> out;
    while (const auto b = stream.next()) {
        out.push_back(*b);
    }
    return out;
}

}  // namespace

TEST_SUITE("construction") {

TEST_CASE("edh base tables match the transcribed sequences") {
    const PathPair base = edh_base();
    CHECK(to_strings(base.p.nodes, base.p.n) == kExpectedEdhP);
    CHECK(to_strings(base.q.nodes, base.q.n) == kExpectedEdhQ);
}

TEST_CASE("edh base paths are edge-disjoint Hamiltonian paths") {
    const PathPair base = edh_base();
    CHECK(verify_hamiltonian_path(base.p).overall());
    CHECK(verify_hamiltonian_path(base.q).overall());
    CHECK(verify_edge_disjoint(base.p, base.q).overall());
}

TEST_CASE("ndc base tables") {
    const PathPair base = ndc_base();
    CHECK(base.p.nodes == std::vector<NodeLabel>{0b001, 0b101, 0b111, 0b011});
    CHECK(base.q.nodes == std::vector<NodeLabel>{0b000, 0b100, 0b010, 0b110});
    std::set<NodeLabel> all(base.p.nodes.begin(), base.p.nodes.end());
    all.insert(base.q.nodes.begin(), base.q.nodes.end());
    CHECK(all.size() == 8);  // the two 4-node paths partition V(TQ_3)
}

TEST_CASE("reverse_path") {
    const Path p{Dimension(3), {0b001, 0b101, 0b111, 0b011}};
    CHECK(reverse_path(p).nodes == std::vector<NodeLabel>{0b011, 0b111, 0b101, 0b001});
    CHECK(reverse_path(reverse_path(p)) == p);
    const Path single{Dimension(3), {0b101}};
    CHECK(reverse_path(single) == single);
}

TEST_CASE("concat joins across an edge and rejects bad junctions") {
    const Dimension three(3);
    const Path a{three, {0b000, 0b100}};
    const Path b{three, {0b010, 0b110}};
    CHECK(concat(a, b).nodes == std::vector<NodeLabel>{0b000, 0b100, 0b010, 0b110});

    // end(a) == start(second): overlap, not a junction
    const Path overlapping{three, {0b100, 0b101}};
    CHECK_THROWS_AS(concat(a, overlapping), DisjointnessError);

    // 100 and 111 are not adjacent
    const Path far{three, {0b111, 0b011}};
    CHECK_THROWS_AS(concat(a, far), JunctionError);
    try {
        concat(a, far);
    } catch (const JunctionError& e) {
        CHECK(e.tail() == 0b100);
        CHECK(e.head() == 0b111);
    }

    CHECK_THROWS_AS(concat(a, Path{Dimension(5), {0b00010, 0b00011}}), ArgumentError);
    CHECK_THROWS_AS(concat(a, Path{three, {}}), ArgumentError);
}

TEST_CASE("concatenating the four embedded ndc quadrant paths reproduces ndc_paths(5).P") {
    const Dimension five(5);
    const PathPair base = ndc_base();
    // Visit order 00, 10, 11, 01 with the second and fourth copies reversed.
    const Path assembled =
        concat(concat(concat(embed_in_quadrant(base.p, 0b00, five),
                             reverse_path(embed_in_quadrant(base.p, 0b10, five))),
                      embed_in_quadrant(base.p, 0b11, five)),
               reverse_path(embed_in_quadrant(base.p, 0b01, five)));
    CHECK(assembled == ndc_paths(five).p);

    // Hand-derived expansion of the same scheme.
    const std::vector<std::string> expected = {
        "00001", "00101", "00111", "00011", "10011", "10111", "10101", "10001",
        "11001", "11101", "11111", "11011", "01011", "01111", "01101", "01001"};
    CHECK(to_strings(assembled.nodes, five) == expected);
}

TEST_CASE("endpoint specs") {
    const EndpointSpec edh5 = endpoint_spec(Dimension(5), PairKind::edge_disjoint_hamiltonian);
    CHECK(edh5.start_p == 0b00000);
    CHECK(edh5.end_p == 0b11000);
    CHECK(edh5.start_q == 0b00100);
    CHECK(edh5.end_q == 0b01100);

    const EndpointSpec ndc3 = endpoint_spec(Dimension(3), PairKind::equal_node_disjoint);
    CHECK(ndc3.start_p == 0b001);
    CHECK(ndc3.end_p == 0b011);
    CHECK(ndc3.start_q == 0b000);
    CHECK(ndc3.end_q == 0b110);

    CHECK(endpoint_spec(Dimension(7), PairKind::edge_disjoint_hamiltonian).end_q == 0b0100100);
    CHECK_THROWS_AS(endpoint_spec(Dimension(3), PairKind::edge_disjoint_hamiltonian),
                    UnsupportedDimensionError);
    CHECK_THROWS_AS(endpoint_spec(Dimension(1), PairKind::equal_node_disjoint),
                    UnsupportedDimensionError);
}

TEST_CASE("edh_paths(5) is the base case") {
    const PathPair built = edh_paths(Dimension(5));
    const PathPair base = edh_base();
    CHECK(built.p == base.p);
    CHECK(built.q == base.q);
}

TEST_CASE("edh_paths(7) endpoints") {
    const PathPair pair = edh_paths(Dimension(7));
    const Dimension seven(7);
    CHECK(label_to_string(pair.p.nodes.front(), seven) == "0000000");
    CHECK(label_to_string(pair.p.nodes.back(), seven) == "1100000");
    CHECK(label_to_string(pair.q.nodes.front(), seven) == "0000100");
    CHECK(label_to_string(pair.q.nodes.back(), seven) == "0100100");
}

TEST_CASE("edh pairs up to n=13: Hamiltonian, edge-disjoint, spec endpoints") {
    for (int nv : {5, 7, 9, 11, 13}) {
        const Dimension n(nv);
        const PathPair pair = edh_paths(n);
        CHECK(pair.p.nodes.size() == n.node_count());
        CHECK(pair.q.nodes.size() == n.node_count());
        CHECK(verify_hamiltonian_path(pair.p).overall());
        CHECK(verify_hamiltonian_path(pair.q).overall());
        CHECK(verify_edge_disjoint(pair.p, pair.q).overall());
        const EndpointSpec spec = endpoint_spec(n, PairKind::edge_disjoint_hamiltonian);
        CHECK(pair.p.nodes.front() == spec.start_p);
        CHECK(pair.p.nodes.back() == spec.end_p);
        CHECK(pair.q.nodes.front() == spec.start_q);
        CHECK(pair.q.nodes.back() == spec.end_q);
    }
}

TEST_CASE("ndc pairs up to n=13: equal halves covering the node set") {
    for (int nv : {3, 5, 7, 9, 11, 13}) {
        const Dimension n(nv);
        const PathPair pair = ndc_paths(n);
        CHECK(pair.p.nodes.size() == n.node_count() / 2);
        CHECK(pair.q.nodes.size() == n.node_count() / 2);
        std::set<NodeLabel> all(pair.p.nodes.begin(), pair.p.nodes.end());
        CHECK(all.size() == pair.p.nodes.size());  // distinct within P
        for (NodeLabel b : pair.q.nodes) {
            CHECK(all.insert(b).second);  // distinct and disjoint from P
        }
        CHECK(all.size() == n.node_count());  // full coverage
        const EndpointSpec spec = endpoint_spec(n, PairKind::equal_node_disjoint);
        CHECK(pair.p.nodes.front() == spec.start_p);
        CHECK(pair.p.nodes.back() == spec.end_p);
        CHECK(pair.q.nodes.front() == spec.start_q);
        CHECK(pair.q.nodes.back() == spec.end_q);
    }
}

TEST_CASE("ndc_paths(5) endpoints") {
    const PathPair pair = ndc_paths(Dimension(5));
    CHECK(pair.p.nodes.front() == 0b00001);
    CHECK(pair.p.nodes.back() == 0b01001);
    CHECK(pair.q.nodes.front() == 0b00000);
    CHECK(pair.q.nodes.back() == 0b11000);
}

TEST_CASE("cycle closure") {
    const CyclePair edh5 = edh_cycles(Dimension(5));
    CHECK(edh5.p.nodes.size() == 32);
    CHECK(edh5.q.nodes.size() == 32);
    // 32 path/cycle edges each, 64 pairwise distinct overall
    std::set<Edge> edges;
    for (const Cycle* c : {&edh5.p, &edh5.q}) {
        for (std::size_t i = 0; i < c->nodes.size(); ++i) {
            edges.insert(make_edge(c->nodes[i], c->nodes[(i + 1) % c->nodes.size()]));
        }
    }
    CHECK(edges.size() == 64);

    const CyclePair ndc3 = ndc_cycles(Dimension(3));
    CHECK(ndc3.p.nodes == std::vector<NodeLabel>{0b001, 0b101, 0b111, 0b011});
    CHECK(ndc3.q.nodes == std::vector<NodeLabel>{0b000, 0b100, 0b010, 0b110});

    for (int nv : {3, 5, 7}) {
        const CyclePair pair = ndc_cycles(Dimension(nv));
        CHECK(is_adjacent(pair.p.nodes.back(), pair.p.nodes.front(), pair.p.n));
        CHECK(is_adjacent(pair.q.nodes.back(), pair.q.nodes.front(), pair.q.n));
    }
    for (int nv : {5, 7, 9}) {
        const CyclePair pair = edh_cycles(Dimension(nv));
        CHECK(is_adjacent(pair.p.nodes.back(), pair.p.nodes.front(), pair.p.n));
        CHECK(is_adjacent(pair.q.nodes.back(), pair.q.nodes.front(), pair.q.n));
        CHECK(verify_edge_disjoint(pair.p, pair.q).overall());
    }
}

TEST_CASE("edh at n=3 raises the dedicated non-existence error") {
    CHECK_THROWS_AS(edh_paths(Dimension(3)), UnsupportedDimensionError);
    CHECK_THROWS_WITH_AS(edh_cycles(Dimension(3)),
                         doctest::Contains("no two edge-disjoint Hamiltonian cycles"),
                         UnsupportedDimensionError);
    CHECK_THROWS_AS(edh_paths(Dimension(1)), UnsupportedDimensionError);
    CHECK_THROWS_AS(ndc_paths(Dimension(1)), UnsupportedDimensionError);
}

TEST_CASE("materialized construction honors the enumeration cap") {
    CHECK_THROWS_AS(edh_paths(Dimension(27)), CapacityError);
    CHECK_THROWS_AS(ndc_cycles(Dimension(9), 7), CapacityError);
    CHECK(ndc_cycles(Dimension(9), 9).p.nodes.size() == 256);
}

TEST_CASE("construction is deterministic") {
    CHECK(edh_paths(Dimension(9)).p == edh_paths(Dimension(9)).p);
    CHECK(ndc_paths(Dimension(9)).q == ndc_paths(Dimension(9)).q);
}

TEST_CASE("parity preconditions of the inductive step hold for embedded endpoints") {
    for (int nv : {7, 9, 11}) {
        const Dimension n(nv);
        const EndpointSpec edh = endpoint_spec(Dimension(nv - 2), PairKind::edge_disjoint_hamiltonian);
        CHECK(parity(edh.start_p, nv - 3, n) == 0);
        CHECK(parity(edh.end_p, nv - 3, n) == 0);
        CHECK(parity(edh.start_q, nv - 3, n) == 1);
        CHECK(parity(edh.end_q, nv - 3, n) == 0);

        const EndpointSpec ndc = endpoint_spec(Dimension(nv - 2), PairKind::equal_node_disjoint);
        CHECK(parity(ndc.start_p, nv - 3, n) == 1);
        CHECK(parity(ndc.end_p, nv - 3, n) == 0);
        CHECK(parity(ndc.start_q, nv - 3, n) == 0);
        CHECK(parity(ndc.end_q, nv - 3, n) == 0);
    }
}

TEST_CASE("path stream matches the materialized construction element-wise") {
    for (int nv : {3, 5, 7, 9}) {
        const Dimension n(nv);
        for (PairKind kind : {PairKind::edge_disjoint_hamiltonian, PairKind::equal_node_disjoint}) {
            if (kind == PairKind::edge_disjoint_hamiltonian && nv < 5) {
                continue;
            }
            const PathPair pair = kind == PairKind::edge_disjoint_hamiltonian ? edh_paths(n)
                                                                              : ndc_paths(n);
            CHECK(collect(PathStream(n, kind, PathId::P)) == pair.p.nodes);
            CHECK(collect(PathStream(n, kind, PathId::Q)) == pair.q.nodes);
        }
    }
}

TEST_CASE("path stream starts at the endpoint_spec start node and knows its length") {
    for (int nv : {5, 7, 9, 11, 21}) {
        PathStream stream(Dimension(nv), PairKind::edge_disjoint_hamiltonian, PathId::P);
        CHECK(stream.total() == (std::uint64_t{1} << nv));
        CHECK(stream.next() == NodeLabel{0});
    }
    PathStream q(Dimension(7), PairKind::equal_node_disjoint, PathId::Q);
    CHECK(q.total() == 64);
    CHECK(q.next() == NodeLabel{0});
}

TEST_CASE("path stream is deterministic across instances") {
    const Dimension n(9);
    PathStream a(n, PairKind::equal_node_disjoint, PathId::Q);
    PathStream b(n, PairKind::equal_node_disjoint, PathId::Q);
    while (true) {
        const auto x = a.next();
        const auto y = b.next();
        CHECK(x == y);
        if (!x) {
            break;
        }
    }
}

TEST_CASE("path stream has no materialization cap") {
    // n = 61 would be ~2.3e18 nodes materialized; the stream just walks.
    PathStream stream(Dimension(61), PairKind::edge_disjoint_hamiltonian, PathId::Q);
    const Dimension n(61);
    std::vector<NodeLabel> head;
    for (int i = 0; i < 40; ++i) {
        head.push_back(*stream.next());
    }
    CHECK(head.front() == endpoint_spec(n, PairKind::edge_disjoint_hamiltonian).start_q);
    for (std::size_t i = 1; i < head.size(); ++i) {
        CHECK(is_adjacent(head[i - 1], head[i], n));
    }
}

TEST_CASE("assembly plans expose the shared quadrant orders") {
    CHECK(assembly_plan(PairKind::edge_disjoint_hamiltonian, PathId::P).quadrants ==
          std::array<int, 4>{0b00, 0b10, 0b01, 0b11});
    CHECK(assembly_plan(PairKind::edge_disjoint_hamiltonian, PathId::Q).quadrants ==
          std::array<int, 4>{0b00, 0b10, 0b11, 0b01});
    CHECK(assembly_plan(PairKind::equal_node_disjoint, PathId::P).quadrants ==
          std::array<int, 4>{0b00, 0b10, 0b11, 0b01});
    CHECK(assembly_plan(PairKind::equal_node_disjoint, PathId::Q).quadrants ==
          std::array<int, 4>{0b00, 0b10, 0b01, 0b11});
}

TEST_CASE("pair kind strings") {
    CHECK(pair_kind_from_string("edh") == PairKind::edge_disjoint_hamiltonian);
    CHECK(pair_kind_from_string("ndc") == PairKind::equal_node_disjoint);
    CHECK(to_string(PairKind::edge_disjoint_hamiltonian) == "edh");
    CHECK_THROWS_AS(pair_kind_from_string("both"), ArgumentError);
}

}  // TEST_SUITE
