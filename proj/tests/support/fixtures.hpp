#pragma once

// Shared fixtures: the 4-vertex diamond example graph (a triangle pair
// sharing an edge, i.e. K4 minus one edge) with unit quaternion gains, and
// its hand-derived golden values.

#include <cmath>
#include <vector>

#include "qgain/gain_graph.hpp"
#include "qgain/qmatrix.hpp"

namespace qgain::testing {

inline const double kSqrt2 = std::sqrt(2.0);
inline const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

/// Gains: e1 = v4->v1 with (i+j)/sqrt2, e2 = v1->v2 with i,
/// e3 = v2->v3 with (i+k)/sqrt2, e4 = v3->v1 with j, e5 = v3->v4 with k.
inline GainGraph diamond_graph() {
    const Quaternion g1(0, kInvSqrt2, kInvSqrt2, 0);
    const Quaternion g3(0, kInvSqrt2, 0, kInvSqrt2);
    return GainGraph({"v1", "v2", "v3", "v4"},
                     {
                         OrientedEdge{"e1", 3, 0, g1},
                         OrientedEdge{"e2", 0, 1, Quaternion::i()},
                         OrientedEdge{"e3", 1, 2, g3},
                         OrientedEdge{"e4", 2, 0, Quaternion::j()},
                         OrientedEdge{"e5", 2, 3, Quaternion::k()},
                     });
}

/// det L = 9 - 4 sqrt(2).
inline double diamond_det() { return 9.0 - 4.0 * kSqrt2; }

/// Per-triangle reduction contribution 2 - sqrt(2).
inline double triangle_contribution() { return 2.0 - kSqrt2; }

/// Gain of the 4-cycle v1 v2 v3 v4.
inline Quaternion diamond_square_gain() { return Quaternion(0.5, 0.5, -0.5, -0.5); }

/// Gain of the triangle v1 v2 v3.
inline Quaternion diamond_triangle12_gain() { return Quaternion(kInvSqrt2, 0, -kInvSqrt2, 0); }

/// Gain of the triangle v1 v3 v4.
inline Quaternion diamond_triangle34_gain() { return Quaternion(kInvSqrt2, 0, 0, -kInvSqrt2); }

inline QMatrix diamond_incidence_expected() {
    const Quaternion z;
    const Quaternion one = Quaternion::one();
    const Quaternion i = Quaternion::i();
    const Quaternion j = Quaternion::j();
    const Quaternion k = Quaternion::k();
    const Quaternion ij(0, kInvSqrt2, kInvSqrt2, 0);
    const Quaternion ik(0, kInvSqrt2, 0, kInvSqrt2);
    return QMatrix{
        {one, -i, z, one, z},
        {z, one, -ik, z, z},
        {z, z, one, -j, -k},
        {-ij, z, z, z, one},
    };
}

inline QMatrix diamond_laplacian_expected() {
    const Quaternion z;
    const Quaternion i = Quaternion::i();
    const Quaternion j = Quaternion::j();
    const Quaternion k = Quaternion::k();
    const Quaternion ij(0, kInvSqrt2, kInvSqrt2, 0);
    const Quaternion ik(0, kInvSqrt2, 0, kInvSqrt2);
    return QMatrix{
        {Quaternion(3), -i, j, ij},
        {i, Quaternion(2), -ik, z},
        {-j, ik, Quaternion(3), -k},
        {-ij, z, k, Quaternion(2)},
    };
}

/// Path graph v1 - v2 - ... - vn with the given gains (all 1 by default).
inline GainGraph path_graph(std::size_t n) {
    std::vector<std::string> labels;
    std::vector<OrientedEdge> edges;
    for (std::size_t v = 1; v <= n; ++v) {
        labels.push_back("v" + std::to_string(v));
    }
    for (std::size_t v = 0; v + 1 < n; ++v) {
        edges.push_back(OrientedEdge{"", v, v + 1, Quaternion::one()});
    }
    return GainGraph(labels, edges);
}

/// Triangle v1 v2 v3 with the three oriented gains.
inline GainGraph triangle_graph(const Quaternion& g12, const Quaternion& g23,
                                const Quaternion& g31) {
    return GainGraph({"v1", "v2", "v3"},
                     {
                         OrientedEdge{"", 0, 1, g12},
                         OrientedEdge{"", 1, 2, g23},
                         OrientedEdge{"", 2, 0, g31},
                     });
}

} // namespace qgain::testing
