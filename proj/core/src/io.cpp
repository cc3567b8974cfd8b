#include "tqcube/io.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace tqcube {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* kDotUnusedAttr = " [color=\"gray70\"]";
const char* kDotRing1Attr = " [color=\"crimson\", penwidth=2]";
const char* kDotRing2Attr = " [color=\"steelblue\", penwidth=2, style=dashed]";

std::vector<Edge> cycle_edges(const Cycle& c) {
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
}

ordered_json require_key(const ordered_json& j, const char* key, const char* type_name) {
    if (!j.contains(key)) {
        throw ParseError(std::string("cycle document: missing key '") + key + "'", 0);
    }
    const ordered_json& v = j.at(key);
    const std::string_view want(type_name);
    const bool ok = (want == "integer" && v.is_number_integer()) ||
                    (want == "string" && v.is_string()) || (want == "array" && v.is_array());
    if (!ok) {
        throw ParseError(std::string("cycle document: key '") + key + "' must be a " + type_name,
                         0);
    }
    return v;
}

}  // namespace

std::string label_to_string(NodeLabel b, Dimension n) {
    if (!n.contains(b)) {
        throw ArgumentError("label_to_string: label " + std::to_string(b) +
                            " out of range for n=" + std::to_string(n.value()));
    }
    std::string s(static_cast<std::size_t>(n.value()), '0');
    for (int i = 0; i < n.value(); ++i) {
        if ((b >> i) & 1) {
            s[static_cast<std::size_t>(n.value() - 1 - i)] = '1';
        }
    }
    return s;
}

NodeLabel parse_label(std::string_view s, Dimension n) {
    if (s.size() != static_cast<std::size_t>(n.value())) {
        throw ParseError("node string must have length " + std::to_string(n.value()) + ", got " +
                             std::to_string(s.size()),
                         0);
    }
    NodeLabel b = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c != '0' && c != '1') {
            throw ParseError(std::string("invalid character '") + c + "' at position " +
                                 std::to_string(i),
                             i);
        }
        b = (b << 1) | static_cast<NodeLabel>(c - '0');
    }
    return b;
}

CycleDocument cycle_document(const CyclePair& pair, PairKind kind) {
    return CycleDocument{pair.p.n, kind, {pair.p.nodes, pair.q.nodes}, kCycleFormatVersion};
}

void export_edgelist(std::ostream& os, Dimension n, int max_n) {
    for_each_edge(
        n,
        [&](const Edge& e) {
            os << label_to_string(e.u, n) << ' ' << label_to_string(e.v, n) << '\n';
        },
        max_n);
}

std::string export_edgelist(Dimension n, int max_n) {
    std::ostringstream os;
    export_edgelist(os, n, max_n);
    return os.str();
}

void export_dot(std::ostream& os, Dimension n, const Cycle* first, const Cycle* second,
                int max_n) {
    std::vector<Edge> ea;
    std::vector<Edge> eb;
    const bool attributed = first != nullptr || second != nullptr;
    if (first != nullptr) {
        ea = cycle_edges(*first);
    }
    if (second != nullptr) {
        eb = cycle_edges(*second);
    }
    os << "graph tq" << n.value() << " {\n";
    os << "  // " << n.node_count() << " nodes, " << n.edge_count() << " edges\n";
    if (attributed) {
        os << "  // ring 1: crimson, ring 2: dashed steelblue, unused: gray\n";
    }
    for_each_edge(
        n,
        [&](const Edge& e) {
            os << "  \"" << label_to_string(e.u, n) << "\" -- \"" << label_to_string(e.v, n)
               << '"';
            if (attributed) {
                if (std::binary_search(ea.begin(), ea.end(), e)) {
                    os << kDotRing1Attr;
                } else if (std::binary_search(eb.begin(), eb.end(), e)) {
                    os << kDotRing2Attr;
                } else {
                    os << kDotUnusedAttr;
                }
            }
            os << ";\n";
        },
        max_n);
    os << "}\n";
}

std::string export_dot(Dimension n, const Cycle* first, const Cycle* second, int max_n) {
    std::ostringstream os;
    export_dot(os, n, first, second, max_n);
    return os.str();
}

void export_graph_json(std::ostream& os, Dimension n, int max_n) {
    ordered_json j;
    j["n"] = n.value();
    j["nodes"] = n.node_count();
    ordered_json edges = ordered_json::array();
    for_each_edge(
        n,
        [&](const Edge& e) {
            edges.push_back(
                ordered_json::array({label_to_string(e.u, n), label_to_string(e.v, n)}));
        },
        max_n);
    j["edges"] = std::move(edges);
    j["format_version"] = kCycleFormatVersion;
    os << j.dump(2) << '\n';
}

std::string export_cycles(const CycleDocument& doc) {
    ordered_json j;
    j["n"] = doc.n.value();
    j["kind"] = std::string(to_string(doc.kind));
    ordered_json cycles = ordered_json::array();
    for (const auto& cycle : doc.cycles) {
        ordered_json names = ordered_json::array();
        for (NodeLabel b : cycle) {
            names.push_back(label_to_string(b, doc.n));
        }
        cycles.push_back(std::move(names));
    }
    j["cycles"] = std::move(cycles);
    j["format_version"] = doc.format_version;
    return j.dump(2) + "\n";
}

CycleDocument import_cycles(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("cycle document: ") + e.what(), e.byte);
    }
    if (!j.is_object()) {
        throw ParseError("cycle document: top level must be an object", 0);
    }
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        if (key != "n" && key != "kind" && key != "cycles" && key != "format_version") {
            throw ParseError("cycle document: unexpected key '" + key + "'", 0);
        }
    }

    const ordered_json version = require_key(j, "format_version", "integer");
    if (version.get<int>() != kCycleFormatVersion) {
        throw ParseError("cycle document: unsupported format_version " +
                             std::to_string(version.get<int>()) + " (expected " +
                             std::to_string(kCycleFormatVersion) + ")",
                         0);
    }
    const int n_value = require_key(j, "n", "integer").get<int>();
    Dimension n = [&] {
        try {
            return Dimension(n_value);
        } catch (const ArgumentError& e) {
            throw ParseError(std::string("cycle document: ") + e.what(), 0);
        }
    }();
    const PairKind kind = [&] {
        try {
            return pair_kind_from_string(require_key(j, "kind", "string").get<std::string>());
        } catch (const ParseError&) {
            throw;
        } catch (const ArgumentError& e) {
            throw ParseError(std::string("cycle document: ") + e.what(), 0);
        }
    }();
    if (kind == PairKind::edge_disjoint_hamiltonian && n.value() < 5) {
        throw ParseError(
            "cycle document: kind 'edh' requires n >= 5 (TQ_3 has no two edge-disjoint "
            "Hamiltonian cycles)",
            0);
    }

    const ordered_json cycles = require_key(j, "cycles", "array");
    if (cycles.size() != 2) {
        throw ParseError("cycle document: 'cycles' must hold exactly 2 node lists, got " +
                             std::to_string(cycles.size()),
                         0);
    }
    CycleDocument doc{n, kind, {}, kCycleFormatVersion};
    for (std::size_t c = 0; c < 2; ++c) {
        if (!cycles[c].is_array()) {
            throw ParseError("cycle document: cycles[" + std::to_string(c) + "] must be an array",
                             0);
        }
        doc.cycles[c].reserve(cycles[c].size());
        for (std::size_t i = 0; i < cycles[c].size(); ++i) {
            if (!cycles[c][i].is_string()) {
                throw ParseError("cycle document: cycles[" + std::to_string(c) + "][" +
                                     std::to_string(i) + "] must be a string",
                                 0);
            }
            try {
                doc.cycles[c].push_back(parse_label(cycles[c][i].get<std::string>(), n));
            } catch (const ParseError& e) {
                throw ParseError("cycle document: cycles[" + std::to_string(c) + "][" +
                                     std::to_string(i) + "]: " + e.what(),
                                 e.position());
            }
        }
    }
    return doc;
}

std::string export_load_report(const LinkLoadReport& report) {
    ordered_json j;
    j["n"] = report.n.value();
    j["steps"] = report.steps;
    j["contention_edges"] = report.contention_edges;
    ordered_json rings = ordered_json::array();
    for (std::size_t i = 0; i < report.rings.size(); ++i) {
        const RingOutcome& r = report.rings[i];
        ordered_json jr;
        jr["index"] = i;
        jr["length"] = r.length;
        jr["steps"] = r.steps;
        jr["direction"] = r.direction == RingDirection::forward ? "forward" : "backward";
        jr["share"] = r.share == MessageShare::whole ? "whole" : "half";
        jr["payload_half"] = r.payload_half;
        jr["complete"] = r.complete;
        rings.push_back(std::move(jr));
    }
    j["rings"] = std::move(rings);
    ordered_json contended = ordered_json::array();
    for (const Edge& e : report.contended) {
        contended.push_back(ordered_json::array(
            {label_to_string(e.u, report.n), label_to_string(e.v, report.n)}));
    }
    j["contended_edges"] = std::move(contended);
    ordered_json loads = ordered_json::array();
    for (const auto& [edge, messages] : report.directed_load) {
        ordered_json jl;
        jl["from"] = label_to_string(edge.first, report.n);
        jl["to"] = label_to_string(edge.second, report.n);
        jl["messages"] = messages;
        loads.push_back(std::move(jl));
    }
    j["per_directed_edge_load"] = std::move(loads);
    j["format_version"] = kCycleFormatVersion;
    return j.dump(2) + "\n";
}

}  // namespace tqcube
