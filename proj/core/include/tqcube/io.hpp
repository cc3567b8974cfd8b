#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tqcube/broadcast.hpp"

namespace tqcube {

inline constexpr int kCycleFormatVersion = 1;

/// MSB-first binary rendering, length exactly n.
std::string label_to_string(NodeLabel b, Dimension n);

/// Inverse of label_to_string; ParseError carries the offending position.
NodeLabel parse_label(std::string_view s, Dimension n);

/// Serializable pair-of-cycles document. Node strings in the textual form
/// are MSB-first; in memory the labels are kept numeric.
struct CycleDocument {
    Dimension n;
    PairKind kind;
    std::array<std::vector<NodeLabel>, 2> cycles;
    int format_version = kCycleFormatVersion;

    friend bool operator==(const CycleDocument&, const CycleDocument&) = default;
};

CycleDocument cycle_document(const CyclePair& pair, PairKind kind);

/// One edge per line, "u v" as MSB-first strings, canonical ascending order,
/// newline-terminated.
void export_edgelist(std::ostream& os, Dimension n, int max_n = kDefaultEnumerationCap);
std::string export_edgelist(Dimension n, int max_n = kDefaultEnumerationCap);

/// Graphviz rendering of the whole graph. When a cycle pair is supplied the
/// first ring, second ring, and unused edges get distinct attributes.
void export_dot(std::ostream& os, Dimension n, const Cycle* first = nullptr,
                const Cycle* second = nullptr, int max_n = kDefaultEnumerationCap);
std::string export_dot(Dimension n, const Cycle* first = nullptr,
                       const Cycle* second = nullptr, int max_n = kDefaultEnumerationCap);

/// Whole-graph JSON document: keys n, nodes, edges, format_version.
void export_graph_json(std::ostream& os, Dimension n, int max_n = kDefaultEnumerationCap);

/// Cycle-document JSON with keys exactly n, kind, cycles, format_version in
/// that order; byte-deterministic.
std::string export_cycles(const CycleDocument& doc);

/// Parses and validates a cycle document: shape, key set, dimension, kind,
/// node-string length and alphabet. Does not verify cycle semantics; that is
/// the verification module's job.
CycleDocument import_cycles(std::string_view text);

/// Broadcast link-load report as JSON; byte-deterministic.
std::string export_load_report(const LinkLoadReport& report);

}  // namespace tqcube
