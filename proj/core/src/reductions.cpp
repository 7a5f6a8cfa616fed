#include "qgain/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "qgain/compensated_sum.hpp"
#include "qgain/determinant.hpp"
#include "qgain/errors.hpp"
#include "qgain/format.hpp"

namespace qgain {

namespace {

bool sorted_unique(const std::vector<std::size_t>& v) {
    return std::is_sorted(v.begin(), v.end()) &&
           std::adjacent_find(v.begin(), v.end()) == v.end();
}

} // namespace

void validate_reduction(const GainGraph& g, const Reduction& r) {
    if (!sorted_unique(r.row_set) || !sorted_unique(r.col_set)) {
        throw InvalidGraph("reduction index sets must be sorted and duplicate-free");
    }
    if (!r.row_set.empty() && r.row_set.back() >= g.vertex_count()) {
        throw IndexOutOfRange("reduction row index out of range");
    }
    if (!r.col_set.empty() && r.col_set.back() >= g.edge_count()) {
        throw IndexOutOfRange("reduction column index out of range");
    }
    std::vector<char> in_rows(g.vertex_count(), 0);
    for (std::size_t v : r.row_set) {
        in_rows[v] = 1;
    }
    for (std::size_t k : r.col_set) {
        const OrientedEdge& e = g.edges()[k];
        if (!in_rows[e.from] && !in_rows[e.to]) {
            throw InvalidGraph("reduction contains the free loop '" + e.id + "'");
        }
    }
}

const char* to_string(ComponentKind kind) {
    switch (kind) {
    case ComponentKind::unicyclic:
        return "unicyclic";
    case ComponentKind::half_edge_tree:
        return "half-edge-tree";
    case ComponentKind::deficient:
        return "deficient";
    case ComponentKind::excessive:
        return "excessive";
    }
    return "?";
}

namespace {

/// Extracts the unique cycle of a unicyclic component by pruning degree-1
/// vertices until only the cycle remains, then reports it from the canonical
/// representative (minimal vertex, toward its smaller-indexed neighbor).
CycleReport extract_cycle(const GainGraph& g, const std::vector<std::size_t>& vertices,
                          const std::vector<std::size_t>& edges) {
    std::vector<char> alive_vertex(g.vertex_count(), 0);
    std::vector<char> alive_edge(g.edge_count(), 0);
    std::vector<std::size_t> deg(g.vertex_count(), 0);
    for (std::size_t v : vertices) {
        alive_vertex[v] = 1;
    }
    for (std::size_t k : edges) {
        alive_edge[k] = 1;
        ++deg[g.edges()[k].from];
        ++deg[g.edges()[k].to];
    }

    // leaf pruning
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k : edges) {
            if (!alive_edge[k]) {
                continue;
            }
            const OrientedEdge& e = g.edges()[k];
            const bool from_leaf = deg[e.from] == 1;
            const bool to_leaf = deg[e.to] == 1;
            if (from_leaf || to_leaf) {
                alive_edge[k] = 0;
                --deg[e.from];
                --deg[e.to];
                if (from_leaf) {
                    alive_vertex[e.from] = 0;
                }
                if (to_leaf) {
                    alive_vertex[e.to] = 0;
                }
                changed = true;
            }
        }
    }

    std::size_t start = SIZE_MAX;
    for (std::size_t v : vertices) {
        if (alive_vertex[v]) {
            start = std::min(start, v);
        }
    }
    if (start == SIZE_MAX) {
        throw Error("no cycle survived pruning a unicyclic component");
    }

    // walk the 2-regular remainder; both neighbors of `start` survive, take
    // the smaller one first
    std::vector<std::size_t> cycle{start};
    std::size_t prev = start;
    std::size_t cur = start;
    do {
        std::size_t next = SIZE_MAX;
        for (std::size_t v : g.neighbors(cur)) {
            const auto k = g.edge_index(cur, v);
            if (!alive_edge[*k] || !alive_vertex[v] || v == prev) {
                continue;
            }
            next = std::min(next, v);
        }
        if (next == SIZE_MAX) {
            throw Error("cycle walk broke during extraction");
        }
        prev = cur;
        cur = next;
        cycle.push_back(cur);
    } while (cur != start);

    CycleReport report;
    report.vertices = std::move(cycle);
    report.gain = walk_gain(g, report.vertices);
    report.contribution = cycle_contribution(report.gain);
    return report;
}

} // namespace

std::vector<ReductionComponent> classify(const Reduction& r, const GainGraph& g) {
    validate_reduction(g, r);

    const std::size_t n = g.vertex_count();
    std::vector<char> in_rows(n, 0);
    for (std::size_t v : r.row_set) {
        in_rows[v] = 1;
    }

    // union-find over selected vertices, connected by fully-anchored edges
    std::vector<std::size_t> parent(n);
    for (std::size_t v = 0; v < n; ++v) {
        parent[v] = v;
    }
    auto find = [&](std::size_t v) {
        while (parent[v] != v) {
            parent[v] = parent[parent[v]];
            v = parent[v];
        }
        return v;
    };

    std::vector<std::size_t> full_edges;
    std::vector<std::size_t> half_edges;
    for (std::size_t k : r.col_set) {
        const OrientedEdge& e = g.edges()[k];
        if (in_rows[e.from] && in_rows[e.to]) {
            full_edges.push_back(k);
            parent[find(e.from)] = find(e.to);
        } else {
            half_edges.push_back(k);
        }
    }

    std::vector<ReductionComponent> components;
    std::vector<std::size_t> comp_of(n, SIZE_MAX);
    for (std::size_t v : r.row_set) {
        const std::size_t root = find(v);
        if (comp_of[root] == SIZE_MAX) {
            comp_of[root] = components.size();
            components.emplace_back();
        }
        components[comp_of[root]].vertices.push_back(v);
    }
    for (std::size_t k : full_edges) {
        components[comp_of[find(g.edges()[k].from)]].edges.push_back(k);
    }
    std::vector<std::size_t> half_in_comp(components.size(), 0);
    for (std::size_t k : half_edges) {
        const OrientedEdge& e = g.edges()[k];
        const std::size_t anchor = in_rows[e.from] ? e.from : e.to;
        const std::size_t c = comp_of[find(anchor)];
        components[c].edges.push_back(k);
        ++half_in_comp[c];
    }

    for (std::size_t c = 0; c < components.size(); ++c) {
        ReductionComponent& comp = components[c];
        std::sort(comp.edges.begin(), comp.edges.end());
        if (comp.vertices.size() > comp.edges.size()) {
            comp.kind = ComponentKind::deficient;
        } else if (comp.vertices.size() < comp.edges.size()) {
            comp.kind = ComponentKind::excessive;
        } else if (half_in_comp[c] == 0) {
            comp.kind = ComponentKind::unicyclic;
            std::vector<std::size_t> full_only = comp.edges;
            comp.cycle = extract_cycle(g, comp.vertices, full_only);
        } else {
            // |V| = |E| with h half-edges leaves |V| - h fully-anchored
            // edges on a connected component, which forces h = 1 and a
            // spanning tree underneath
            comp.kind = ComponentKind::half_edge_tree;
        }
    }
    return components;
}

bool is_unicycle_like(const std::vector<ReductionComponent>& components) {
    return std::all_of(components.begin(), components.end(), [](const ReductionComponent& c) {
        return c.kind == ComponentKind::unicyclic || c.kind == ComponentKind::half_edge_tree;
    });
}

std::vector<Reduction> enumerate_full_vertex_reductions(const GainGraph& g,
                                                        std::size_t budget) {
    const std::size_t n = g.vertex_count();
    const std::size_t m = g.edge_count();
    std::vector<Reduction> out;
    if (m < n) {
        return out;
    }
    const double count = binomial(m, n);
    if (count > static_cast<double>(budget)) {
        throw BudgetExceeded("C(" + std::to_string(m) + ", " + std::to_string(n) + ") = " +
                             format_real(count) + " column subsets exceed the budget of " +
                             std::to_string(budget));
    }

    std::vector<std::size_t> all_rows(n);
    for (std::size_t v = 0; v < n; ++v) {
        all_rows[v] = v;
    }
    for_each_subset(m, n, [&](std::span<const std::size_t> cols) {
        out.push_back(Reduction{all_rows, {cols.begin(), cols.end()}});
    });
    return out;
}

double det_reduction(const Reduction& r, const GainGraph& g, DetRoute route, double tol) {
    validate_reduction(g, r);
    if (route == DetRoute::direct) {
        if (r.row_set.size() != r.col_set.size()) {
            throw DimensionMismatch("direct reduction determinant needs |rows| = |cols|");
        }
        const QMatrix h = incidence_matrix(g).submatrix(r.row_set, r.col_set);
        return det_hermitian(h * h.conjugate_transpose(), tol);
    }

    const auto components = classify(r, g);
    if (!is_unicycle_like(components)) {
        return 0.0;
    }
    double prod = 1.0;
    for (const ReductionComponent& comp : components) {
        if (comp.kind == ComponentKind::unicyclic) {
            prod *= comp.cycle->contribution;
        }
        // half-edge trees contribute a factor of 1
    }
    return prod;
}

double det_laplacian_combinatorial(const GainGraph& g, std::size_t budget, double tol) {
    CompensatedSum sum;
    for (const Reduction& r : enumerate_full_vertex_reductions(g, budget)) {
        sum.add(det_reduction(r, g, DetRoute::combinatorial, tol));
    }
    return sum.value();
}

namespace {

bool is_lipschitz_unit(const Quaternion& q, double tol) {
    const double aw = std::abs(q.w), ax = std::abs(q.x), ay = std::abs(q.y),
                 az = std::abs(q.z);
    const double big = std::max({aw, ax, ay, az});
    const double rest = aw + ax + ay + az - big;
    return std::abs(big - 1.0) <= tol && rest <= tol;
}

} // namespace

double det_laplacian_unit_gains(const GainGraph& g, std::size_t budget, double tol) {
    for (const OrientedEdge& e : g.edges()) {
        if (!is_lipschitz_unit(e.gain, tol)) {
            throw GainsNotInLipschitzUnits("gain of edge '" + e.id +
                                           "' is not one of ±1, ±i, ±j, ±k");
        }
    }

    CompensatedSum sum;
    for (const Reduction& r : enumerate_full_vertex_reductions(g, budget)) {
        const auto components = classify(r, g);
        if (!is_unicycle_like(components)) {
            continue;
        }
        std::size_t real_unbalanced = 0;
        std::size_t imaginary_unbalanced = 0;
        bool has_neutral_cycle = false;
        for (const ReductionComponent& comp : components) {
            if (comp.kind != ComponentKind::unicyclic) {
                continue;
            }
            const Quaternion& gain = comp.cycle->gain;
            if (approx_equal(gain, Quaternion::one(), tol)) {
                has_neutral_cycle = true;
            } else if (approx_equal(gain, -Quaternion::one(), tol)) {
                ++real_unbalanced;
            } else {
                ++imaginary_unbalanced;
            }
        }
        if (has_neutral_cycle) {
            continue;
        }
        sum.add(std::pow(4.0, static_cast<double>(real_unbalanced)) *
                std::pow(2.0, static_cast<double>(imaginary_unbalanced)));
    }
    return sum.value();
}

} // namespace qgain
