#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qgain/gain_graph.hpp"

namespace qgain {

/// Cap on the number of column subsets a reduction enumeration may visit.
/// Exceeding it is an error, never a silent truncation.
inline constexpr std::size_t kDefaultReductionBudget = 1'000'000;

/// A reduction selects rows (vertices) and columns (edges) of the incidence
/// matrix. A selected edge keeps its gain; an endpoint outside the row set
/// turns it into a half-edge. Edges with no selected endpoint (free loops)
/// are rejected.
struct Reduction {
    std::vector<std::size_t> row_set; // sorted vertex indices
    std::vector<std::size_t> col_set; // sorted edge indices
};

/// Validates the index ranges, sortedness and the no-free-loop invariant.
void validate_reduction(const GainGraph& g, const Reduction& r);

enum class ComponentKind {
    unicyclic,      // |V| = |E|, no half-edge, exactly one cycle
    half_edge_tree, // |V| = |E|, spanning tree plus one half-edge
    deficient,      // |V| > |E|
    excessive,      // |V| < |E|
};

const char* to_string(ComponentKind kind);

/// One connected component of a reduction, with the unique cycle attached
/// when the component is unicyclic.
struct ReductionComponent {
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> edges;
    ComponentKind kind = ComponentKind::deficient;
    std::optional<CycleReport> cycle;
};

/// Connected-component decomposition of a reduction; components are formed
/// by the fully-anchored edges, half-edges attach to their surviving
/// endpoint. Unicyclic components get their cycle extracted by leaf pruning.
std::vector<ReductionComponent> classify(const Reduction& r, const GainGraph& g);

bool is_unicycle_like(const std::vector<ReductionComponent>& components);

/// All reductions with the full vertex set and exactly n = |V| selected
/// edges, in lexicographic column-set order. Empty when m < n (then
/// det L = 0 by rank). Throws BudgetExceeded when C(m, n) > budget.
std::vector<Reduction> enumerate_full_vertex_reductions(
    const GainGraph& g, std::size_t budget = kDefaultReductionBudget);

enum class DetRoute {
    direct,        // det of H(R) H(R)* through the permutation sum
    combinatorial, // product of cycle contributions, 1 per half-edge tree
};

/// Laplacian determinant of one reduction.
///   direct:        requires |row_set| = |col_set|; builds H(R) from the
///                  incidence matrix and evaluates det(H(R) H(R)*).
///   combinatorial: 0 unless every component is unicyclic or a half-edge
///                  tree; otherwise the product of |1 - phi(C)|^2 over the
///                  unicyclic components (so a neutral cycle kills the
///                  whole product).
double det_reduction(const Reduction& r, const GainGraph& g, DetRoute route,
                     double tol = kDefaultTol);

/// The combinatorial Laplacian determinant: the sum of det_reduction over
/// all full-vertex unicycle-like reductions, in enumeration order with
/// compensated summation. Agrees with det_hermitian(L(G)).
double det_laplacian_combinatorial(const GainGraph& g,
                                   std::size_t budget = kDefaultReductionBudget,
                                   double tol = kDefaultTol);

/// Specialization for gains in {±1, ±i, ±j, ±k}: each reduction contributes
/// 4^(number of cycles with gain -1) * 2^(number with gain ±i, ±j, ±k),
/// and nothing when it contains a neutral cycle. Throws
/// GainsNotInLipschitzUnits when some gain lies outside the eight units.
double det_laplacian_unit_gains(const GainGraph& g,
                                std::size_t budget = kDefaultReductionBudget,
                                double tol = kDefaultTol);

} // namespace qgain
