#include "qgain/graph_json.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "qgain/errors.hpp"
#include "qgain/format.hpp"

namespace qgain {

namespace {

using nlohmann::ordered_json;

/// Norm deviations up to this bound are silently within tolerance; between
/// this and kRenormalizeLimit the gain is renormalized with a warning.
constexpr double kWarnLimit = 1e-9;
constexpr double kRenormalizeLimit = 1e-6;

Quaternion parse_gain(const ordered_json& value, const std::string& edge_id,
                      std::ostream* warnings) {
    Quaternion q;
    if (value.is_string()) {
        q = parse_gain_token(value.get<std::string>());
    } else if (value.is_array() && value.size() == 4) {
        double comps[4];
        for (std::size_t k = 0; k < 4; ++k) {
            if (!value[k].is_number()) {
                throw ParseError("edge '" + edge_id + "': gain components must be numbers");
            }
            comps[k] = value[k].get<double>();
        }
        try {
            q = Quaternion(comps[0], comps[1], comps[2], comps[3]);
        } catch (const NonFiniteValue&) {
            throw ParseError("edge '" + edge_id + "': gain component is not finite");
        }
    } else {
        throw ParseError("edge '" + edge_id + "': gain must be a 4-array or a unit token");
    }

    const double deviation = std::abs(norm(q) - 1.0);
    if (deviation > kRenormalizeLimit) {
        throw NonUnitGain("edge '" + edge_id + "': gain norm " + format_real(norm(q)) +
                          " is not unit");
    }
    if (deviation > kWarnLimit) {
        if (warnings != nullptr) {
            *warnings << "warning: renormalizing gain of edge '" << edge_id
                      << "' (norm deviation " << format_real(deviation) << ")\n";
        }
        q = normalized(q);
    }
    return q;
}

} // namespace

Quaternion parse_gain_token(const std::string& token) {
    static const std::unordered_map<std::string, Quaternion> tokens = {
        {"1", Quaternion::one()}, {"-1", -Quaternion::one()}, {"i", Quaternion::i()},
        {"-i", -Quaternion::i()}, {"j", Quaternion::j()},     {"-j", -Quaternion::j()},
        {"k", Quaternion::k()},   {"-k", -Quaternion::k()},
    };
    const auto it = tokens.find(token);
    if (it == tokens.end()) {
        throw ParseError("unknown gain token '" + token + "'");
    }
    return it->second;
}

GraphDocument parse_graph_document(const std::string& json_text, std::ostream* warnings) {
    ordered_json root;
    try {
        root = ordered_json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object() || !root.contains("vertices") || !root.contains("edges")) {
        throw ParseError("graph document must be an object with 'vertices' and 'edges'");
    }
    if (!root["vertices"].is_array() || !root["edges"].is_array()) {
        throw ParseError("'vertices' and 'edges' must be arrays");
    }

    GraphDocument doc;
    for (const auto& v : root["vertices"]) {
        if (!v.is_string()) {
            throw ParseError("vertex labels must be strings");
        }
        doc.vertices.push_back(v.get<std::string>());
    }
    for (const auto& e : root["edges"]) {
        if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("gain")) {
            throw ParseError("each edge needs 'from', 'to' and 'gain'");
        }
        DocumentEdge edge;
        if (e.contains("id")) {
            if (!e["id"].is_string()) {
                throw ParseError("edge ids must be strings");
            }
            edge.id = e["id"].get<std::string>();
        }
        if (!e["from"].is_string() || !e["to"].is_string()) {
            throw ParseError("edge endpoints must be vertex labels");
        }
        edge.from = e["from"].get<std::string>();
        edge.to = e["to"].get<std::string>();
        edge.gain = parse_gain(e["gain"], edge.id.empty() ? edge.from + "-" + edge.to : edge.id,
                               warnings);
        doc.edges.push_back(std::move(edge));
    }
    return doc;
}

GraphDocument load_graph_document(const std::string& path, std::ostream* warnings) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open graph file '" + path + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_graph_document(text.str(), warnings);
}

std::string graph_document_to_json(const GraphDocument& doc, int indent) {
    ordered_json root;
    root["vertices"] = doc.vertices;
    root["edges"] = ordered_json::array();
    for (const DocumentEdge& e : doc.edges) {
        ordered_json edge;
        edge["id"] = e.id;
        edge["from"] = e.from;
        edge["to"] = e.to;
        edge["gain"] = {e.gain.w, e.gain.x, e.gain.y, e.gain.z};
        root["edges"].push_back(std::move(edge));
    }
    return root.dump(indent);
}

GainGraph graph_from_document(const GraphDocument& doc, double tol) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t v = 0; v < doc.vertices.size(); ++v) {
        index.emplace(doc.vertices[v], v);
    }
    std::vector<OrientedEdge> edges;
    edges.reserve(doc.edges.size());
    for (const DocumentEdge& e : doc.edges) {
        const auto from = index.find(e.from);
        const auto to = index.find(e.to);
        if (from == index.end() || to == index.end()) {
            throw ParseError("edge '" + e.id + "' references an undeclared vertex");
        }
        edges.push_back(OrientedEdge{e.id, from->second, to->second, e.gain});
    }
    return GainGraph(doc.vertices, std::move(edges), tol);
}

GraphDocument document_from_graph(const GainGraph& g) {
    GraphDocument doc;
    doc.vertices = g.vertex_labels();
    for (const OrientedEdge& e : g.edges()) {
        doc.edges.push_back(DocumentEdge{e.id, g.vertex_labels()[e.from],
                                         g.vertex_labels()[e.to], e.gain});
    }
    return doc;
}

} // namespace qgain
