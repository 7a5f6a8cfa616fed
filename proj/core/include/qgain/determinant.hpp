#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "qgain/qmatrix.hpp"

namespace qgain {

/// Hard cap on the order of matrices accepted by the permutation-sum
/// determinants (n! terms). 10! is about 3.6M terms.
inline constexpr std::size_t kDefaultSizeCap = 10;

/// A permutation written as disjoint index cycles in the canonical order used
/// by the row and column determinants:
///   - cycles[0] starts with the pivot index and follows the orbit;
///   - every other cycle starts with its minimal element;
///   - the non-pivot cycles are sorted by ascending leading element.
/// The sign of the underlying permutation is (-1)^(n - cycle_count()).
struct CycleArrangement {
    std::vector<std::vector<std::size_t>> cycles;

    std::size_t cycle_count() const { return cycles.size(); }

    int sign(std::size_t n) const { return (n - cycles.size()) % 2 == 0 ? 1 : -1; }
};

/// Normalizes `perm` (perm[c] = image of c) into its canonical arrangement
/// for the given pivot. Exactly one arrangement exists per permutation.
CycleArrangement canonical_cycle_arrangement(std::span<const std::size_t> perm,
                                             std::size_t pivot);

/// Left-to-right entry chain of one cycle (c1 c2 ... cl):
///   a(c1,c2) a(c2,c3) ... a(cl,c1).
Quaternion cycle_chain_product(const QMatrix& a, std::span<const std::size_t> cycle);

/// One signed term of rdet: cycle chains multiplied left to right in
/// arrangement order, pivot cycle first.
Quaternion row_arrangement_term(const QMatrix& a, const CycleArrangement& arr);

/// One signed term of cdet: the mirror order — pivot cycle rightmost, the
/// remaining cycles to its left by descending leading element.
Quaternion col_arrangement_term(const QMatrix& a, const CycleArrangement& arr);

/// Row determinant with pivot row `row` (0-based): the signed sum of
/// row_arrangement_term over all n! canonical arrangements, accumulated in
/// lexicographic permutation order with compensated summation.
Quaternion rdet(const QMatrix& a, std::size_t row, std::size_t size_cap = kDefaultSizeCap);

/// Column determinant with pivot column `col` (0-based); mirror of rdet.
Quaternion cdet(const QMatrix& a, std::size_t col, std::size_t size_cap = kDefaultSizeCap);

/// Determinant of a Hermitian matrix: the common real value of all row and
/// column determinants. Computes rdet with pivot 0 and strips the imaginary
/// residue after checking it is below tol.
///
/// Throws NotHermitian when A deviates from A* beyond tol and NotReal when
/// the residue check fails (which would indicate a fault in the arrangement
/// machinery, not in the input).
double det_hermitian(const QMatrix& a, double tol = kDefaultTol,
                     std::size_t size_cap = kDefaultSizeCap);

/// Verification-mode determinant: evaluates all n row and n column
/// determinants and requires pairwise agreement within tol before returning
/// the common value.
double det_hermitian_checked(const QMatrix& a, double tol = kDefaultTol,
                             std::size_t size_cap = kDefaultSizeCap);

/// Coefficients d_1..d_n of the characteristic polynomial of a Hermitian
/// matrix, p(t) = t^n - d_1 t^(n-1) + d_2 t^(n-2) - ... + (-1)^n d_n,
/// where d_s is the sum of all s-th order principal minors and d_n = det.
struct CharPoly {
    std::vector<double> coefficients;

    std::size_t degree() const { return coefficients.size(); }

    /// Evaluates p(t).
    double operator()(double t) const;
};

CharPoly char_poly_hermitian(const QMatrix& a, double tol = kDefaultTol,
                             std::size_t size_cap = kDefaultSizeCap);

/// Sum of the determinants of all s-th order principal submatrices of a
/// Hermitian matrix, accumulated in lexicographic subset order.
double principal_minor_sum(const QMatrix& a, std::size_t s, double tol = kDefaultTol,
                           std::size_t size_cap = kDefaultSizeCap);

/// Invertibility criterion for an arbitrary square quaternion matrix:
/// det(A A*) > tol.
bool is_invertible(const QMatrix& a, double tol = kDefaultTol,
                   std::size_t size_cap = kDefaultSizeCap);

/// Determinantal rank: the largest s for which the s-th principal minor sum
/// of A A* exceeds tol. Computed on both A A* and A* A and cross-checked.
std::size_t rank_determinantal(const QMatrix& a, double tol = kDefaultTol,
                               std::size_t size_cap = kDefaultSizeCap);

/// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(std::span<const std::size_t>)>& fn);

/// Binomial coefficient as double (for budget checks; exact for our sizes).
double binomial(std::size_t n, std::size_t k);

} // namespace qgain
