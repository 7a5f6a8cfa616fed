#include "qgain/gain_graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "qgain/errors.hpp"
#include "qgain/format.hpp"

namespace qgain {

GainGraph::GainGraph(std::vector<std::string> vertex_labels, std::vector<OrientedEdge> edges,
                     double tol)
    : labels_(std::move(vertex_labels)), edges_(std::move(edges)) {
    const std::size_t n = labels_.size();

    std::unordered_set<std::string> seen_labels;
    for (const auto& label : labels_) {
        if (label.empty()) {
            throw InvalidGraph("empty vertex label");
        }
        if (!seen_labels.insert(label).second) {
            throw InvalidGraph("duplicate vertex label '" + label + "'");
        }
    }

    neighbors_.assign(n, {});
    edge_lookup_.assign(n, std::vector<int>(n, -1));

    std::unordered_set<std::string> seen_ids;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        OrientedEdge& e = edges_[k];
        if (e.id.empty()) {
            e.id = "e" + std::to_string(k + 1);
        }
        if (!seen_ids.insert(e.id).second) {
            throw InvalidGraph("duplicate edge id '" + e.id + "'");
        }
        if (e.from >= n || e.to >= n) {
            throw InvalidGraph("edge '" + e.id + "' references a missing vertex");
        }
        if (e.from == e.to) {
            throw InvalidGraph("self-loop on edge '" + e.id + "'");
        }
        if (edge_lookup_[e.from][e.to] != -1) {
            throw InvalidGraph("parallel edge '" + e.id + "'");
        }
        if (!is_unit(e.gain, tol)) {
            throw NonUnitGain("gain of edge '" + e.id + "' has norm " +
                              format_real(norm(e.gain)));
        }
        edge_lookup_[e.from][e.to] = static_cast<int>(k);
        edge_lookup_[e.to][e.from] = static_cast<int>(k);
        neighbors_[e.from].push_back(e.to);
        neighbors_[e.to].push_back(e.from);
    }
    for (auto& adj : neighbors_) {
        std::sort(adj.begin(), adj.end());
    }
}

bool GainGraph::adjacent(std::size_t u, std::size_t v) const {
    return u < vertex_count() && v < vertex_count() && edge_lookup_[u][v] != -1;
}

std::optional<Quaternion> GainGraph::gain(std::size_t u, std::size_t v) const {
    if (!adjacent(u, v)) {
        return std::nullopt;
    }
    const OrientedEdge& e = edges_[static_cast<std::size_t>(edge_lookup_[u][v])];
    return e.from == u ? e.gain : conj(e.gain);
}

std::optional<std::size_t> GainGraph::edge_index(std::size_t u, std::size_t v) const {
    if (!adjacent(u, v)) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(edge_lookup_[u][v]);
}

std::optional<std::size_t> GainGraph::vertex_index(const std::string& label) const {
    for (std::size_t v = 0; v < labels_.size(); ++v) {
        if (labels_[v] == label) {
            return v;
        }
    }
    return std::nullopt;
}

QMatrix incidence_matrix(const GainGraph& g) {
    QMatrix h(g.vertex_count(), g.edge_count());
    for (std::size_t k = 0; k < g.edge_count(); ++k) {
        const OrientedEdge& e = g.edges()[k];
        h(e.to, k) = Quaternion::one();
        h(e.from, k) = -e.gain;
    }
    return h;
}

QMatrix adjacency_matrix(const GainGraph& g) {
    QMatrix a(g.vertex_count(), g.vertex_count());
    for (const OrientedEdge& e : g.edges()) {
        a(e.from, e.to) = e.gain;
        a(e.to, e.from) = conj(e.gain);
    }
    return a;
}

QMatrix degree_matrix(const GainGraph& g) {
    QMatrix d(g.vertex_count(), g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        d(v, v) = Quaternion(static_cast<double>(g.degree(v)));
    }
    return d;
}

QMatrix laplacian(const GainGraph& g, LaplacianRoute route) {
    if (route == LaplacianRoute::degree_minus_adjacency) {
        return degree_matrix(g) - adjacency_matrix(g);
    }
    const QMatrix h = incidence_matrix(g);
    return h * h.conjugate_transpose();
}

QMatrix laplacian_checked(const GainGraph& g, double tol) {
    QMatrix by_degree = laplacian(g, LaplacianRoute::degree_minus_adjacency);
    const QMatrix by_incidence = laplacian(g, LaplacianRoute::incidence_product);
    const double dev = QMatrix::max_abs_diff(by_degree, by_incidence);
    if (dev > tol) {
        throw RouteMismatch("Laplacian constructions disagree by " + format_real(dev));
    }
    return by_degree;
}

Quaternion walk_gain(const GainGraph& g, std::span<const std::size_t> walk) {
    if (walk.size() < 2) {
        throw NotAWalk("a walk needs at least two vertices");
    }
    Quaternion prod = Quaternion::one();
    for (std::size_t t = 0; t + 1 < walk.size(); ++t) {
        const auto gain = g.gain(walk[t], walk[t + 1]);
        if (!gain) {
            throw NotAWalk("vertices " + std::to_string(walk[t]) + " and " +
                           std::to_string(walk[t + 1]) + " are not adjacent");
        }
        prod = prod * *gain;
    }
    return prod;
}

Quaternion cycle_gain_from_laplacian(const QMatrix& l, std::span<const std::size_t> cycle,
                                     double tol) {
    const std::size_t s = cycle.size();
    if (s < 3) {
        throw NotAWalk("a cycle needs at least three vertices");
    }
    Quaternion prod = Quaternion::one();
    for (std::size_t t = 0; t < s; ++t) {
        const Quaternion& entry = l.at(cycle[t], cycle[(t + 1) % s]);
        if (is_zero(entry, tol)) {
            throw ZeroEntry("cycle traverses a zero Laplacian entry");
        }
        prod = prod * entry;
    }
    return s % 2 == 0 ? prod : -prod;
}

bool is_balanced(const GainGraph& g, double tol) {
    const std::size_t n = g.vertex_count();
    std::vector<char> assigned(n, 0);
    std::vector<Quaternion> theta(n, Quaternion::one());

    for (std::size_t root = 0; root < n; ++root) {
        if (assigned[root]) {
            continue;
        }
        assigned[root] = 1;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t v : g.neighbors(u)) {
                if (assigned[v]) {
                    continue;
                }
                theta[v] = theta[u] * *g.gain(u, v);
                assigned[v] = 1;
                queue.push_back(v);
            }
        }
    }

    for (const OrientedEdge& e : g.edges()) {
        if (norm(theta[e.from] * e.gain - theta[e.to]) > tol) {
            return false;
        }
    }
    return true;
}

double cycle_contribution(const Quaternion& gain) {
    const Quaternion d = Quaternion::one() - gain;
    return (d * conj(d)).w;
}

namespace {

struct CycleSearch {
    const GainGraph& g;
    std::size_t max_len;
    std::size_t budget;
    std::vector<CycleReport>& out;
    std::vector<std::size_t> path;
    std::vector<char> on_path;

    void record() {
        if (out.size() >= budget) {
            throw BudgetExceeded("cycle enumeration budget of " + std::to_string(budget) +
                                 " exceeded");
        }
        CycleReport report;
        report.vertices = path;
        report.vertices.push_back(path.front());
        report.gain = walk_gain(g, report.vertices);
        report.contribution = cycle_contribution(report.gain);
        out.push_back(std::move(report));
    }

    void extend() {
        const std::size_t start = path.front();
        const std::size_t u = path.back();
        for (std::size_t v : g.neighbors(u)) {
            if (v == start && path.size() >= 3 && path[1] < path.back()) {
                // closing edge; path[1] < back() keeps one of the two
                // traversal directions
                record();
            } else if (v > start && !on_path[v] && path.size() < max_len) {
                path.push_back(v);
                on_path[v] = 1;
                extend();
                on_path[v] = 0;
                path.pop_back();
            }
        }
    }
};

} // namespace

std::vector<CycleReport> enumerate_cycles(const GainGraph& g, std::size_t max_len,
                                          std::size_t budget) {
    std::vector<CycleReport> out;
    if (max_len < 3) {
        return out;
    }
    CycleSearch search{g, max_len, budget, out, {}, std::vector<char>(g.vertex_count(), 0)};
    for (std::size_t start = 0; start < g.vertex_count(); ++start) {
        search.path.assign(1, start);
        std::fill(search.on_path.begin(), search.on_path.end(), 0);
        search.on_path[start] = 1;
        search.extend();
    }
    return out;
}

} // namespace qgain
