#include "qgain/determinant.hpp"

#include <algorithm>
#include <numeric>

#include "qgain/compensated_sum.hpp"
#include "qgain/errors.hpp"
#include "qgain/format.hpp"

namespace qgain {

namespace {

void require_square(const QMatrix& a) {
    if (!a.is_square()) {
        throw DimensionMismatch("determinant of a non-square matrix");
    }
}

void require_cap(std::size_t n, std::size_t size_cap) {
    if (n > size_cap) {
        throw SizeCapExceeded("matrix order " + std::to_string(n) +
                              " exceeds the determinant size cap " + std::to_string(size_cap));
    }
}

void require_pivot(std::size_t pivot, std::size_t n) {
    if (pivot >= n) {
        throw IndexOutOfRange("determinant pivot out of range");
    }
}

/// Entry chain a(c, perm[c]) along the orbit of `start`, multiplied left to
/// right, marking orbit members visited. Returns the number of cycles seen
/// through `visited`.
Quaternion orbit_chain(const QMatrix& a, std::span<const std::size_t> perm, std::size_t start,
                       std::vector<char>& visited) {
    visited[start] = 1;
    Quaternion prod = a(start, perm[start]);
    for (std::size_t c = perm[start]; c != start; c = perm[c]) {
        visited[c] = 1;
        prod = prod * a(c, perm[c]);
    }
    return prod;
}

/// Signed rdet term for one permutation: pivot orbit chain first, then the
/// remaining orbit chains by ascending leading (minimal) element.
Quaternion row_term(const QMatrix& a, std::span<const std::size_t> perm, std::size_t pivot,
                    std::vector<char>& visited) {
    std::fill(visited.begin(), visited.end(), 0);
    std::size_t cycles = 1;
    Quaternion prod = orbit_chain(a, perm, pivot, visited);
    for (std::size_t lead = 0; lead < perm.size(); ++lead) {
        if (!visited[lead]) {
            prod = prod * orbit_chain(a, perm, lead, visited);
            ++cycles;
        }
    }
    return (perm.size() - cycles) % 2 == 0 ? prod : -prod;
}

/// Signed cdet term: same chains, mirrored arrangement — non-pivot chains by
/// descending leading element, pivot chain rightmost.
Quaternion col_term(const QMatrix& a, std::span<const std::size_t> perm, std::size_t pivot,
                    std::vector<char>& visited) {
    std::fill(visited.begin(), visited.end(), 0);
    std::size_t cycles = 1;
    Quaternion prod = orbit_chain(a, perm, pivot, visited);
    for (std::size_t lead = 0; lead < perm.size(); ++lead) {
        if (!visited[lead]) {
            prod = orbit_chain(a, perm, lead, visited) * prod;
            ++cycles;
        }
    }
    return (perm.size() - cycles) % 2 == 0 ? prod : -prod;
}

template <typename TermFn>
Quaternion permutation_sum(const QMatrix& a, std::size_t pivot, std::size_t size_cap,
                           TermFn&& term) {
    require_square(a);
    const std::size_t n = a.rows();
    require_cap(n, size_cap);
    require_pivot(pivot, n);
    if (n == 0) {
        return Quaternion::one();
    }

    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::vector<char> visited(n);

    QuaternionSum sum;
    do {
        sum.add(term(a, perm, pivot, visited));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum.value();
}

double strip_real(const Quaternion& value, double tol) {
    const double residue = imag_norm(value);
    if (residue > tol) {
        throw NotReal("determinant imaginary residue " + format_real(residue) +
                      " exceeds tolerance " + format_real(tol));
    }
    return value.w;
}

void require_hermitian(const QMatrix& a, double tol) {
    require_square(a);
    const double dev = a.hermitian_deviation();
    if (dev > tol) {
        throw NotHermitian("matrix deviates from Hermitian by " + format_real(dev));
    }
}

} // namespace

CycleArrangement canonical_cycle_arrangement(std::span<const std::size_t> perm,
                                             std::size_t pivot) {
    const std::size_t n = perm.size();
    require_pivot(pivot, n);

    std::vector<char> visited(n, 0);
    auto walk = [&](std::size_t start) {
        std::vector<std::size_t> cycle{start};
        visited[start] = 1;
        for (std::size_t c = perm[start]; c != start; c = perm[c]) {
            if (c >= n || visited[c]) {
                throw IndexOutOfRange("invalid permutation");
            }
            visited[c] = 1;
            cycle.push_back(c);
        }
        return cycle;
    };

    CycleArrangement arr;
    arr.cycles.push_back(walk(pivot));
    for (std::size_t lead = 0; lead < n; ++lead) {
        if (!visited[lead]) {
            arr.cycles.push_back(walk(lead)); // lead is minimal: smaller ones are visited
        }
    }
    return arr;
}

Quaternion cycle_chain_product(const QMatrix& a, std::span<const std::size_t> cycle) {
    Quaternion prod = a.at(cycle.front(), cycle.size() > 1 ? cycle[1] : cycle.front());
    for (std::size_t t = 1; t < cycle.size(); ++t) {
        prod = prod * a.at(cycle[t], t + 1 < cycle.size() ? cycle[t + 1] : cycle.front());
    }
    return prod;
}

Quaternion row_arrangement_term(const QMatrix& a, const CycleArrangement& arr) {
    Quaternion prod = Quaternion::one();
    std::size_t covered = 0;
    for (const auto& cycle : arr.cycles) {
        prod = prod * cycle_chain_product(a, cycle);
        covered += cycle.size();
    }
    return arr.sign(covered) > 0 ? prod : -prod;
}

Quaternion col_arrangement_term(const QMatrix& a, const CycleArrangement& arr) {
    Quaternion prod = Quaternion::one();
    std::size_t covered = 0;
    for (const auto& cycle : arr.cycles) {
        prod = cycle_chain_product(a, cycle) * prod;
        covered += cycle.size();
    }
    return arr.sign(covered) > 0 ? prod : -prod;
}

Quaternion rdet(const QMatrix& a, std::size_t row, std::size_t size_cap) {
    return permutation_sum(a, row, size_cap,
                           [](const QMatrix& m, std::span<const std::size_t> p, std::size_t piv,
                              std::vector<char>& v) { return row_term(m, p, piv, v); });
}

Quaternion cdet(const QMatrix& a, std::size_t col, std::size_t size_cap) {
    return permutation_sum(a, col, size_cap,
                           [](const QMatrix& m, std::span<const std::size_t> p, std::size_t piv,
                              std::vector<char>& v) { return col_term(m, p, piv, v); });
}

double det_hermitian(const QMatrix& a, double tol, std::size_t size_cap) {
    require_hermitian(a, tol);
    if (a.rows() == 0) {
        return 1.0;
    }
    return strip_real(rdet(a, 0, size_cap), tol);
}

double det_hermitian_checked(const QMatrix& a, double tol, std::size_t size_cap) {
    require_hermitian(a, tol);
    const std::size_t n = a.rows();
    if (n == 0) {
        return 1.0;
    }
    std::vector<Quaternion> values;
    values.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        values.push_back(rdet(a, i, size_cap));
    }
    for (std::size_t j = 0; j < n; ++j) {
        values.push_back(cdet(a, j, size_cap));
    }
    for (const auto& v : values) {
        if (norm(v - values.front()) > tol) {
            throw NotReal("row/column determinants disagree by " +
                          format_real(norm(v - values.front())));
        }
    }
    return strip_real(values.front(), tol);
}

double CharPoly::operator()(double t) const {
    // Horner evaluation of t^n - d1 t^(n-1) + ... + (-1)^n dn.
    double acc = 1.0;
    double sign = -1.0;
    for (double d : coefficients) {
        acc = acc * t + sign * d;
        sign = -sign;
    }
    return acc;
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(std::span<const std::size_t>)>& fn) {
    if (k > n) {
        return;
    }
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        fn(idx);
        // advance to the next k-subset in lexicographic order
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) {
            --pos;
        }
        if (pos == 0) {
            return;
        }
        ++idx[pos - 1];
        for (std::size_t t = pos; t < k; ++t) {
            idx[t] = idx[t - 1] + 1;
        }
    }
}

double binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double acc = 1.0;
    for (std::size_t t = 1; t <= k; ++t) {
        acc = acc * static_cast<double>(n - k + t) / static_cast<double>(t);
    }
    return acc;
}

double principal_minor_sum(const QMatrix& a, std::size_t s, double tol, std::size_t size_cap) {
    require_hermitian(a, tol);
    if (s > a.rows()) {
        throw DimensionMismatch("principal minor order exceeds matrix order");
    }
    require_cap(s, size_cap);
    CompensatedSum sum;
    for_each_subset(a.rows(), s, [&](std::span<const std::size_t> idx) {
        sum.add(det_hermitian(a.principal_submatrix(idx), tol, size_cap));
    });
    return sum.value();
}

CharPoly char_poly_hermitian(const QMatrix& a, double tol, std::size_t size_cap) {
    require_hermitian(a, tol);
    require_cap(a.rows(), size_cap);
    CharPoly p;
    p.coefficients.reserve(a.rows());
    for (std::size_t s = 1; s <= a.rows(); ++s) {
        p.coefficients.push_back(principal_minor_sum(a, s, tol, size_cap));
    }
    return p;
}

bool is_invertible(const QMatrix& a, double tol, std::size_t size_cap) {
    require_square(a);
    return det_hermitian(a * a.conjugate_transpose(), tol, size_cap) > tol;
}

std::size_t rank_determinantal(const QMatrix& a, double tol, std::size_t size_cap) {
    const std::size_t bound = std::min(a.rows(), a.cols());
    require_cap(bound, size_cap);
    const QMatrix gram_rows = a * a.conjugate_transpose();
    const QMatrix gram_cols = a.conjugate_transpose() * a;
    std::size_t rank = 0;
    for (std::size_t s = 1; s <= bound; ++s) {
        const double by_rows = principal_minor_sum(gram_rows, s, tol, size_cap);
        const double by_cols = principal_minor_sum(gram_cols, s, tol, size_cap);
        if (std::abs(by_rows - by_cols) > std::max(tol, tol * std::abs(by_rows))) {
            throw Error("principal minor sums of AA* and A*A disagree: " +
                        format_real(by_rows) + " vs " + format_real(by_cols));
        }
        if (by_rows > tol) {
            rank = s;
        }
    }
    return rank;
}

} // namespace qgain
