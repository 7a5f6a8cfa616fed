#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qgain/qmatrix.hpp"

namespace qgain {

/// Default cap on the number of simple cycles an enumeration may report.
inline constexpr std::size_t kDefaultCycleBudget = 1'000'000;

/// One stored orientation of an edge. The reverse orientation is never
/// stored; its gain is the conjugate of this one.
struct OrientedEdge {
    std::string id;
    std::size_t from = 0;
    std::size_t to = 0;
    Quaternion gain; // unit quaternion, belongs to the from -> to direction
};

/// A simple cycle together with its gain and determinant contribution.
struct CycleReport {
    std::vector<std::size_t> vertices; // closed: front() == back()
    Quaternion gain;                   // phi(C) from the canonical representative
    double contribution = 0.0;         // |1 - phi(C)|^2, in [0, 4]
};

/// A quaternion unit gain graph: a simple undirected graph whose oriented
/// edges carry unit quaternion gains with phi(reverse) = conj(phi).
///
/// Immutable after construction; all queries are safely concurrent.
class GainGraph {
public:
    /// Validates and stores the graph. Throws InvalidGraph for self-loops,
    /// parallel edges, duplicate labels or bad indices, and NonUnitGain when
    /// a gain is not unit within tol. Edges with empty ids are assigned
    /// "e1", "e2", ... by position.
    GainGraph(std::vector<std::string> vertex_labels, std::vector<OrientedEdge> edges,
              double tol = kDefaultTol);

    std::size_t vertex_count() const { return labels_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::string>& vertex_labels() const { return labels_; }
    const std::vector<OrientedEdge>& edges() const { return edges_; }

    std::size_t degree(std::size_t v) const { return neighbors_.at(v).size(); }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return neighbors_.at(v); }

    bool adjacent(std::size_t u, std::size_t v) const;

    /// Oriented gain phi(e_uv) for adjacent u, v; conjugated on the fly when
    /// the stored orientation is v -> u.
    std::optional<Quaternion> gain(std::size_t u, std::size_t v) const;

    /// Index into edges() of the edge joining u and v, if any.
    std::optional<std::size_t> edge_index(std::size_t u, std::size_t v) const;

    std::optional<std::size_t> vertex_index(const std::string& label) const;

private:
    std::vector<std::string> labels_;
    std::vector<OrientedEdge> edges_;
    std::vector<std::vector<std::size_t>> neighbors_; // sorted adjacency lists
    std::vector<std::vector<int>> edge_lookup_;       // n x n, -1 when non-adjacent
};

/// Vertex-edge incidence matrix (n x m): the column of edge e = (u -> v)
/// has entry 1 in row v and -phi(e_uv) in row u.
QMatrix incidence_matrix(const GainGraph& g);

/// Hermitian gain adjacency matrix: a(u, v) = phi(e_uv) when adjacent.
QMatrix adjacency_matrix(const GainGraph& g);

QMatrix degree_matrix(const GainGraph& g);

enum class LaplacianRoute {
    degree_minus_adjacency, // D - A, Hermitian by construction
    incidence_product,      // H H*
};

QMatrix laplacian(const GainGraph& g,
                  LaplacianRoute route = LaplacianRoute::degree_minus_adjacency);

/// Builds the Laplacian along both routes and requires entrywise agreement
/// within tol; throws RouteMismatch otherwise. Returns the D - A form.
QMatrix laplacian_checked(const GainGraph& g, double tol = kDefaultTol);

/// Ordered left-to-right product of oriented gains along a walk given as a
/// vertex index sequence. Throws NotAWalk when consecutive vertices are not
/// adjacent.
Quaternion walk_gain(const GainGraph& g, std::span<const std::size_t> walk);

/// Cycle gain recovered from Laplacian entries alone:
/// (-1)^s l(c1,c2) l(c2,c3) ... l(cs,c1). Throws ZeroEntry when the cycle
/// crosses a zero entry.
Quaternion cycle_gain_from_laplacian(const QMatrix& l, std::span<const std::size_t> cycle,
                                     double tol = kDefaultTol);

/// Balance test by spanning-tree potential propagation: per component,
/// theta(root) = 1 and theta(v) = theta(u) * phi(e_uv) along tree edges; the
/// graph is balanced iff every remaining edge satisfies
/// theta(u) * phi(e_uv) = theta(v) within tol.
bool is_balanced(const GainGraph& g, double tol = kDefaultTol);

/// All simple cycles of length 3..max_len, each reported once up to rotation
/// and reflection. The representative starts at the cycle's minimal vertex
/// index and proceeds toward its smaller-indexed neighbor; gains of other
/// representatives differ only within a similarity class, which the
/// contribution ignores. Throws BudgetExceeded past `budget` cycles.
std::vector<CycleReport> enumerate_cycles(const GainGraph& g,
                                          std::size_t max_len = SIZE_MAX,
                                          std::size_t budget = kDefaultCycleBudget);

/// |1 - phi|^2 evaluated as (1 - phi) * conj(1 - phi).
double cycle_contribution(const Quaternion& gain);

} // namespace qgain
