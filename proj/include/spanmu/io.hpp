#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spanmu/construct.hpp"
#include "spanmu/graph.hpp"

namespace spanmu {

/// Parses the "spanmu-graph v1" text format; throws ParseError.
///
/// Lines starting with '#' and blank lines are skipped. Every edge line
/// must read "u v" with u < v < n, and the number of edge lines must equal m.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

/// A certificate as exchanged on disk: the certificate itself, the emitted
/// tree and, if computed, the exact independence number.
struct CertificateDoc {
    Certificate cert;
    std::vector<Edge> tree_edges;
    std::optional<int> alpha;
};

/// Pretty-printed JSON with two-space indent.
std::string certificate_to_json(const CertificateDoc& doc);

/// Throws ParseError on malformed JSON, missing fields or bad rationals.
CertificateDoc certificate_from_json(std::string_view text);

std::string read_text_file(const std::string& path);

} // namespace spanmu
