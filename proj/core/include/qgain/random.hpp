#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qgain/gain_graph.hpp"
#include "qgain/qmatrix.hpp"

namespace qgain {

/// Seeded generator for test instances. Uniform and normal deviates are
/// derived from raw mt19937_64 output directly, so identical seeds give
/// bit-identical streams on every standard library.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform01();

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);

    /// Standard normal via Box-Muller.
    double normal();

    /// Uniform integer in [0, bound).
    std::size_t index(std::size_t bound);

    /// Quaternion with components uniform in [-scale, scale].
    Quaternion quaternion(double scale = 1.0);

    /// Uniform on the unit 3-sphere (four normals, normalized).
    Quaternion unit_quaternion();

    /// Uniform draw from {±1, ±i, ±j, ±k}.
    Quaternion lipschitz_unit();

private:
    std::mt19937_64 engine_;
    bool has_spare_normal_ = false;
    double spare_normal_ = 0.0;
};

/// Random square matrix with entries from rng.quaternion(scale).
QMatrix random_matrix(SeededRng& rng, std::size_t n, double scale = 1.0);

/// Random Hermitian matrix built as B + B*.
QMatrix random_hermitian(SeededRng& rng, std::size_t n, double scale = 1.0);

QMatrix random_rectangular(SeededRng& rng, std::size_t rows, std::size_t cols,
                           double scale = 1.0);

/// Uniform labeled tree on n vertices (Prüfer decoding), unit quaternion
/// gains, vertex labels "v1".."vn".
GainGraph random_tree(SeededRng& rng, std::size_t n);

/// Random connected simple graph: a uniform spanning tree plus extra random
/// edges up to m edges total, gains uniform on the unit sphere.
GainGraph random_connected_graph(SeededRng& rng, std::size_t n, std::size_t m);

/// As random_connected_graph but with gains from {±1, ±i, ±j, ±k}.
GainGraph random_lipschitz_graph(SeededRng& rng, std::size_t n, std::size_t m);

/// Balanced by construction: gains phi(e_uv) = theta(u) * conj(theta(v)) for
/// random unit potentials theta, over a random connected topology.
GainGraph random_balanced_graph(SeededRng& rng, std::size_t n, std::size_t m);

/// Random cycle graph on n >= 3 vertices with the edge layout whose
/// incidence matrix is diagonal 1s, superdiagonal -gains and a -gain corner:
/// edge 1 joins v_n -> v_1 and edge k joins v_(k-1) -> v_k.
GainGraph random_cycle_graph(SeededRng& rng, std::size_t n);

/// Cycle graph as above with the given oriented gains: gains[0] on
/// v_n -> v_1 and gains[k] on v_k -> v_(k+1).
GainGraph make_cycle_graph(const std::vector<Quaternion>& gains);

/// Unicyclic: a cycle of length cycle_len with pendant tree vertices
/// attached up to n vertices total.
GainGraph random_unicyclic_graph(SeededRng& rng, std::size_t cycle_len, std::size_t n);

/// Gain switching by unit potentials: phi'(e_uv) = conj(theta(u)) *
/// phi(e_uv) * theta(v). Preserves balance and all cycle contributions.
GainGraph switch_gains(const GainGraph& g, const std::vector<Quaternion>& theta);

} // namespace qgain
