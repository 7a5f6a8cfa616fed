#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qgain/gain_graph.hpp"

namespace qgain {

/// One edge of a graph document; the gain is given either as a [w, x, y, z]
/// array or as one of the tokens 1, -1, i, -i, j, -j, k, -k.
struct DocumentEdge {
    std::string id;
    std::string from;
    std::string to;
    Quaternion gain;
};

/// The schema of graph files:
///   {
///     "vertices": ["v1", "v2", ...],
///     "edges": [{"id": "e1", "from": "v1", "to": "v2", "gain": [0,1,0,0]}, ...]
///   }
/// The stored orientation is authoritative: the gain belongs to from -> to
/// and the reverse direction carries its conjugate.
struct GraphDocument {
    std::vector<std::string> vertices;
    std::vector<DocumentEdge> edges;
};

/// Parses a document from JSON text. Gains given as 4-arrays are accepted
/// as-is within 1e-9 of unit norm, renormalized with a warning (written to
/// `warnings` when given) up to 1e-6, and rejected with NonUnitGain beyond
/// that. Schema violations throw ParseError.
GraphDocument parse_graph_document(const std::string& json_text,
                                   std::ostream* warnings = nullptr);

/// Reads and parses a graph file; file-system failures throw ParseError.
GraphDocument load_graph_document(const std::string& path, std::ostream* warnings = nullptr);

/// Serializes with gains as plain 4-arrays; parse followed by emit is
/// idempotent.
std::string graph_document_to_json(const GraphDocument& doc, int indent = 2);

GainGraph graph_from_document(const GraphDocument& doc, double tol = kDefaultTol);

GraphDocument document_from_graph(const GainGraph& g);

/// Parses "i", "-k", ... into the corresponding unit quaternion.
Quaternion parse_gain_token(const std::string& token);

} // namespace qgain
