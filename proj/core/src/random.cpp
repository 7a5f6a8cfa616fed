#include "qgain/random.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <utility>

#include "qgain/errors.hpp"

namespace qgain {

double SeededRng::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

double SeededRng::normal() {
    if (has_spare_normal_) {
        has_spare_normal_ = false;
        return spare_normal_;
    }
    double u1 = uniform01();
    while (u1 <= 0.0) {
        u1 = uniform01();
    }
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_normal_ = radius * std::sin(angle);
    has_spare_normal_ = true;
    return radius * std::cos(angle);
}

std::size_t SeededRng::index(std::size_t bound) {
    return bound == 0 ? 0 : static_cast<std::size_t>(engine_() % bound);
}

Quaternion SeededRng::quaternion(double scale) {
    return Quaternion(uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale),
                      uniform(-scale, scale));
}

Quaternion SeededRng::unit_quaternion() {
    while (true) {
        const Quaternion q(normal(), normal(), normal(), normal());
        const double n = norm(q);
        if (n > 1e-6) {
            return q * (1.0 / n);
        }
    }
}

Quaternion SeededRng::lipschitz_unit() {
    static const Quaternion units[8] = {
        Quaternion::one(),  -Quaternion::one(), Quaternion::i(), -Quaternion::i(),
        Quaternion::j(),    -Quaternion::j(),   Quaternion::k(), -Quaternion::k(),
    };
    return units[index(8)];
}

QMatrix random_matrix(SeededRng& rng, std::size_t n, double scale) {
    return random_rectangular(rng, n, n, scale);
}

QMatrix random_rectangular(SeededRng& rng, std::size_t rows, std::size_t cols, double scale) {
    QMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rng.quaternion(scale);
        }
    }
    return m;
}

QMatrix random_hermitian(SeededRng& rng, std::size_t n, double scale) {
    const QMatrix b = random_matrix(rng, n, scale);
    return b + b.conjugate_transpose();
}

namespace {

std::vector<std::string> default_labels(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t v = 1; v <= n; ++v) {
        labels.push_back("v" + std::to_string(v));
    }
    return labels;
}

/// Undirected edge pairs of a uniform random labeled tree (Prüfer decode).
std::vector<std::pair<std::size_t, std::size_t>> random_tree_edges(SeededRng& rng,
                                                                   std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (n < 2) {
        return edges;
    }
    if (n == 2) {
        edges.emplace_back(0, 1);
        return edges;
    }
    std::vector<std::size_t> pruefer(n - 2);
    for (auto& p : pruefer) {
        p = rng.index(n);
    }
    std::vector<std::size_t> deg(n, 1);
    for (std::size_t p : pruefer) {
        ++deg[p];
    }
    std::set<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v) {
        if (deg[v] == 1) {
            leaves.insert(v);
        }
    }
    for (std::size_t p : pruefer) {
        const std::size_t leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, p);
        if (--deg[p] == 1) {
            leaves.insert(p);
        }
    }
    const std::size_t a = *leaves.begin();
    const std::size_t b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return edges;
}

template <typename GainFn>
GainGraph graph_from_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                           std::size_t n, GainFn&& next_gain) {
    std::vector<OrientedEdge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        edges.push_back(OrientedEdge{"", u, v, next_gain()});
    }
    return GainGraph(default_labels(n), std::move(edges));
}

std::vector<std::pair<std::size_t, std::size_t>> connected_topology(SeededRng& rng,
                                                                    std::size_t n,
                                                                    std::size_t m) {
    const std::size_t max_edges = n * (n - 1) / 2;
    if (m + 1 < n || m > max_edges) {
        throw InvalidGraph("cannot build a connected simple graph with n = " +
                           std::to_string(n) + ", m = " + std::to_string(m));
    }
    auto pairs = random_tree_edges(rng, n);
    std::set<std::pair<std::size_t, std::size_t>> present;
    for (auto [u, v] : pairs) {
        present.insert(std::minmax(u, v));
    }
    while (pairs.size() < m) {
        const std::size_t u = rng.index(n);
        const std::size_t v = rng.index(n);
        if (u == v) {
            continue;
        }
        const auto key = std::minmax(u, v);
        if (present.insert(key).second) {
            pairs.emplace_back(key.first, key.second);
        }
    }
    return pairs;
}

} // namespace

GainGraph random_tree(SeededRng& rng, std::size_t n) {
    return graph_from_pairs(random_tree_edges(rng, n), n,
                            [&] { return rng.unit_quaternion(); });
}

GainGraph random_connected_graph(SeededRng& rng, std::size_t n, std::size_t m) {
    return graph_from_pairs(connected_topology(rng, n, m), n,
                            [&] { return rng.unit_quaternion(); });
}

GainGraph random_lipschitz_graph(SeededRng& rng, std::size_t n, std::size_t m) {
    return graph_from_pairs(connected_topology(rng, n, m), n,
                            [&] { return rng.lipschitz_unit(); });
}

GainGraph random_balanced_graph(SeededRng& rng, std::size_t n, std::size_t m) {
    std::vector<Quaternion> theta;
    theta.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        theta.push_back(rng.unit_quaternion());
    }
    const auto pairs = connected_topology(rng, n, m);
    std::vector<OrientedEdge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        edges.push_back(OrientedEdge{"", u, v, theta[u] * conj(theta[v])});
    }
    return GainGraph(default_labels(n), std::move(edges));
}

GainGraph make_cycle_graph(const std::vector<Quaternion>& gains) {
    const std::size_t n = gains.size();
    if (n < 3) {
        throw InvalidGraph("a cycle graph needs at least three edges");
    }
    std::vector<OrientedEdge> edges;
    edges.reserve(n);
    edges.push_back(OrientedEdge{"", n - 1, 0, gains[0]});
    for (std::size_t k = 1; k < n; ++k) {
        edges.push_back(OrientedEdge{"", k - 1, k, gains[k]});
    }
    return GainGraph(default_labels(n), std::move(edges));
}

GainGraph random_cycle_graph(SeededRng& rng, std::size_t n) {
    std::vector<Quaternion> gains;
    gains.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        gains.push_back(rng.unit_quaternion());
    }
    return make_cycle_graph(gains);
}

GainGraph random_unicyclic_graph(SeededRng& rng, std::size_t cycle_len, std::size_t n) {
    if (cycle_len < 3 || n < cycle_len) {
        throw InvalidGraph("bad unicyclic shape");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t k = 0; k < cycle_len; ++k) {
        pairs.emplace_back(k, (k + 1) % cycle_len);
    }
    for (std::size_t v = cycle_len; v < n; ++v) {
        pairs.emplace_back(v, rng.index(v)); // attach below, keeps it unicyclic
    }
    return graph_from_pairs(pairs, n, [&] { return rng.unit_quaternion(); });
}

GainGraph switch_gains(const GainGraph& g, const std::vector<Quaternion>& theta) {
    if (theta.size() != g.vertex_count()) {
        throw DimensionMismatch("one switching potential per vertex required");
    }
    std::vector<OrientedEdge> edges = g.edges();
    for (OrientedEdge& e : edges) {
        e.gain = conj(theta[e.from]) * e.gain * theta[e.to];
    }
    return GainGraph(g.vertex_labels(), std::move(edges));
}

} // namespace qgain
