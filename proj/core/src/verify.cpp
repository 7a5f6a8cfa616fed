#include "qgain/verify.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "qgain/complex_adjoint.hpp"
#include "qgain/determinant.hpp"
#include "qgain/errors.hpp"
#include "qgain/format.hpp"
#include "qgain/graph_json.hpp"
#include "qgain/random.hpp"
#include "qgain/reductions.hpp"

namespace qgain {

namespace {

using nlohmann::ordered_json;

/// Absolute tolerance for comparisons between permutation-sum routes.
constexpr double kLemmaTol = 1e-9;
/// Relative tolerance (and absolute floor) against the elimination oracle,
/// which accumulates error differently.
constexpr double kOracleTol = 1e-6;
/// A determinant above this certifies an unbalanced graph.
constexpr double kUnbalancedFloor = 1e-6;

ordered_json matrix_json(const QMatrix& a) {
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const Quaternion& q = a(r, c);
            row.push_back({q.w, q.x, q.y, q.z});
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json graph_witness(const GainGraph& g) {
    return ordered_json::parse(graph_document_to_json(document_from_graph(g), -1));
}

std::string describe(const GainGraph& g) {
    return std::to_string(g.vertex_count()) + " vertices, " + std::to_string(g.edge_count()) +
           " edges";
}

struct LemmaOutcome {
    bool ok = true;
    double discrepancy = 0.0;
    ordered_json witness;

    void fail(double disc, ordered_json w) {
        ok = false;
        discrepancy = std::max(discrepancy, disc);
        if (witness.is_null()) {
            witness = std::move(w);
        }
    }

    void observe(double disc) { discrepancy = std::max(discrepancy, disc); }

    void check(bool condition, double disc, const ordered_json& w) {
        observe(disc);
        if (!condition) {
            fail(disc, w);
        }
    }

    void check_close(double got, double want, double tol, const ordered_json& w) {
        check(std::abs(got - want) <= tol, std::abs(got - want), w);
    }
};

// ---- individual lemma checks ---------------------------------------------

/// All 2n row/column determinants of a random Hermitian matrix coincide and
/// are real.
LemmaOutcome check_hermitian_det_agreement(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 2 + t % 4;
    const QMatrix a = random_hermitian(rng, n);
    std::vector<Quaternion> dets;
    for (std::size_t i = 0; i < n; ++i) {
        dets.push_back(rdet(a, i));
    }
    for (std::size_t j = 0; j < n; ++j) {
        dets.push_back(cdet(a, j));
    }
    for (const Quaternion& d : dets) {
        const double disagree = norm(d - dets.front());
        const double residue = imag_norm(d);
        out.check(disagree <= kLemmaTol && residue <= kLemmaTol,
                  std::max(disagree, residue),
                  {{"matrix", matrix_json(a)}, {"determinants", static_cast<int>(dets.size())}});
    }
    return out;
}

/// rdet_i(A*) = conj(cdet_i(A)) for arbitrary square matrices.
LemmaOutcome check_conjugation_duality(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 2 + t % 3;
    const QMatrix a = random_matrix(rng, n);
    const QMatrix a_star = a.conjugate_transpose();
    for (std::size_t i = 0; i < n; ++i) {
        const double disc = norm(rdet(a_star, i) - conj(cdet(a, i)));
        out.check(disc <= kLemmaTol, disc, {{"matrix", matrix_json(a)}, {"pivot", i}});
    }
    return out;
}

/// Adding a left linear combination of other rows to row i leaves rdet_i of
/// a Hermitian matrix unchanged.
LemmaOutcome check_row_combination(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 2 + t % 4;
    const QMatrix a = random_hermitian(rng, n);
    const double det = det_hermitian(a);
    const std::size_t pivot = rng.index(n);
    QMatrix modified = a;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == pivot) {
            continue;
        }
        const Quaternion coeff = rng.quaternion(0.5);
        for (std::size_t c = 0; c < n; ++c) {
            modified(pivot, c) += coeff * a(r, c);
        }
    }
    const Quaternion got = rdet(modified, pivot);
    const double disc = norm(got - Quaternion(det));
    out.check(disc <= kLemmaTol, disc, {{"matrix", matrix_json(a)}, {"pivot", pivot}});
    return out;
}

/// The dual: adding a right linear combination of other columns to column j
/// leaves cdet_j unchanged.
LemmaOutcome check_col_combination(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 2 + t % 4;
    const QMatrix a = random_hermitian(rng, n);
    const double det = det_hermitian(a);
    const std::size_t pivot = rng.index(n);
    QMatrix modified = a;
    for (std::size_t c = 0; c < n; ++c) {
        if (c == pivot) {
            continue;
        }
        const Quaternion coeff = rng.quaternion(0.5);
        for (std::size_t r = 0; r < n; ++r) {
            modified(r, pivot) += a(r, c) * coeff;
        }
    }
    const Quaternion got = cdet(modified, pivot);
    const double disc = norm(got - Quaternion(det));
    out.check(disc <= kLemmaTol, disc, {{"matrix", matrix_json(a)}, {"pivot", pivot}});
    return out;
}

/// The principal minor sums of A*A and AA* agree at every order.
LemmaOutcome check_principal_minor_sums(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t rows = 2 + t % 3;
    const std::size_t cols = 2 + (t + 1) % 3;
    const QMatrix b = random_rectangular(rng, rows, cols);
    const QMatrix left = b.conjugate_transpose() * b;
    const QMatrix right = b * b.conjugate_transpose();
    for (std::size_t s = 1; s <= std::min(rows, cols); ++s) {
        out.check_close(principal_minor_sum(left, s), principal_minor_sum(right, s), kLemmaTol,
                        {{"matrix", matrix_json(b)}, {"order", s}});
    }
    return out;
}

/// det(B B*) >= 0 for arbitrary rectangular B.
LemmaOutcome check_psd(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t rows = 2 + t % 3;
    const std::size_t cols = 1 + (t + 1) % 4;
    const QMatrix b = random_rectangular(rng, rows, cols);
    const double det = det_hermitian(b * b.conjugate_transpose());
    out.check(det >= -kLemmaTol, std::max(0.0, -det), {{"matrix", matrix_json(b)}});
    return out;
}

LemmaOutcome check_tree_det(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const GainGraph g = random_tree(rng, 2 + t % 6);
    out.check_close(det_hermitian(laplacian(g)), 0.0, kLemmaTol, graph_witness(g));
    out.check_close(det_laplacian_combinatorial(g), 0.0, kLemmaTol, graph_witness(g));
    return out;
}

/// det L(C) = |1 - phi(C)|^2 and rdet_1 H(C) = 1 - phi(C) for gain cycles.
LemmaOutcome check_cycle_det(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 3 + t % 5;
    const GainGraph g = random_cycle_graph(rng, n);
    std::vector<std::size_t> closed(n + 1);
    for (std::size_t v = 0; v < n; ++v) {
        closed[v] = v;
    }
    closed[n] = 0;
    const Quaternion phi = walk_gain(g, closed);
    out.check_close(det_hermitian(laplacian(g)), cycle_contribution(phi), kLemmaTol,
                    graph_witness(g));
    const Quaternion expected = Quaternion::one() - phi;
    const double disc = norm(rdet(incidence_matrix(g), 0) - expected);
    out.check(disc <= kLemmaTol, disc, graph_witness(g));
    return out;
}

/// Pendant trees hanging off the cycle do not change det L.
LemmaOutcome check_unicyclic_det(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t cycle_len = 3 + t % 3;
    const GainGraph g = random_unicyclic_graph(rng, cycle_len, cycle_len + 1 + t % 2);
    const auto cycles = enumerate_cycles(g);
    if (cycles.size() != 1) {
        out.fail(1.0, graph_witness(g));
        return out;
    }
    out.check_close(det_hermitian(laplacian(g)), cycles.front().contribution, kLemmaTol,
                    graph_witness(g));
    return out;
}

/// Deleting a pendant vertex of a tree while keeping its edge gives a
/// reduction with determinant 1, whichever pendant is chosen.
LemmaOutcome check_half_edge_tree(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 2 + t % 6;
    const GainGraph g = random_tree(rng, n);
    std::vector<std::size_t> all_cols(g.edge_count());
    for (std::size_t k = 0; k < all_cols.size(); ++k) {
        all_cols[k] = k;
    }
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
        if (g.degree(leaf) != 1) {
            continue;
        }
        Reduction r;
        for (std::size_t v = 0; v < n; ++v) {
            if (v != leaf) {
                r.row_set.push_back(v);
            }
        }
        r.col_set = all_cols;
        out.check_close(det_reduction(r, g, DetRoute::direct), 1.0, kLemmaTol,
                        graph_witness(g));
        out.check_close(det_reduction(r, g, DetRoute::combinatorial), 1.0, 0.0,
                        graph_witness(g));
        const auto comps = classify(r, g);
        bool all_het = !comps.empty();
        for (const auto& comp : comps) {
            all_het = all_het && comp.kind == ComponentKind::half_edge_tree;
        }
        out.check(all_het, all_het ? 0.0 : 1.0, graph_witness(g));
    }
    return out;
}

LemmaOutcome check_balanced_direction(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 3 + t % 4;
    const std::size_t m = std::min(n + 1 + t % 2, n * (n - 1) / 2);
    const GainGraph g = random_balanced_graph(rng, n, m);
    out.check_close(det_hermitian(laplacian(g)), 0.0, kLemmaTol, graph_witness(g));
    out.check_close(det_laplacian_combinatorial(g), 0.0, kLemmaTol, graph_witness(g));
    out.check(is_balanced(g), 0.0, graph_witness(g));
    out.check(balance_oracle(g), 0.0, graph_witness(g));
    return out;
}

LemmaOutcome check_unbalanced_direction(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 3 + t % 4;
    const std::size_t m = std::min(n + t % 2, n * (n - 1) / 2);
    for (int attempt = 0; attempt < 32; ++attempt) {
        const GainGraph g = random_connected_graph(rng, n, m);
        bool certified = false;
        for (const CycleReport& c : enumerate_cycles(g)) {
            if (norm(c.gain - Quaternion::one()) > 1e-3) {
                certified = true;
                break;
            }
        }
        if (!certified) {
            continue; // no clearly non-neutral cycle (or no cycle); resample
        }
        const double det = det_hermitian(laplacian(g));
        out.check(det > kUnbalancedFloor, det > kUnbalancedFloor ? 0.0 : kUnbalancedFloor - det,
                  graph_witness(g));
        out.check(!is_balanced(g), 0.0, graph_witness(g));
        out.check(!balance_oracle(g), 0.0, graph_witness(g));
        return out;
    }
    return out; // vanishingly unlikely; treated as vacuous
}

/// is_balanced must agree with the exhaustive cycle oracle.
LemmaOutcome check_balance_oracle_agreement(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 3 + t % 4;
    const std::size_t m = std::min(n + t % 3, n * (n - 1) / 2);
    const GainGraph g = t % 2 == 0 ? random_connected_graph(rng, n, m)
                                   : random_balanced_graph(rng, n, m);
    out.check(is_balanced(g) == balance_oracle(g), 0.0, graph_witness(g));
    return out;
}

/// Cycle gains from every start vertex and direction stay in one similarity
/// class and share the contribution.
LemmaOutcome check_representative_invariance(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 3 + t % 4;
    const GainGraph g = random_cycle_graph(rng, n);

    std::vector<std::size_t> forward(n);
    for (std::size_t v = 0; v < n; ++v) {
        forward[v] = v;
    }
    std::vector<std::size_t> closed = forward;
    closed.push_back(0);
    const Quaternion reference = walk_gain(g, closed);

    for (std::size_t start = 0; start < n; ++start) {
        for (int dir = 0; dir < 2; ++dir) {
            std::vector<std::size_t> walk;
            for (std::size_t s = 0; s <= n; ++s) {
                const std::size_t off = dir == 0 ? s : n - s;
                walk.push_back((start + off) % n);
            }
            const Quaternion gain = walk_gain(g, walk);
            out.check(similar(gain, reference, kLemmaTol), 0.0, graph_witness(g));
            out.check_close(cycle_contribution(gain), cycle_contribution(reference), kLemmaTol,
                            graph_witness(g));
        }
    }
    return out;
}

/// Switching by unit potentials preserves the balance verdict.
LemmaOutcome check_switching_invariance(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 3 + t % 4;
    const std::size_t m = std::min(n + t % 3, n * (n - 1) / 2);
    const GainGraph g = t % 2 == 0 ? random_connected_graph(rng, n, m)
                                   : random_balanced_graph(rng, n, m);
    std::vector<Quaternion> theta;
    for (std::size_t v = 0; v < n; ++v) {
        theta.push_back(rng.unit_quaternion());
    }
    const GainGraph switched = switch_gains(g, theta);
    out.check(is_balanced(g) == is_balanced(switched), 0.0, graph_witness(g));
    return out;
}

/// The two Laplacian constructions agree entrywise.
LemmaOutcome check_laplacian_routes(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 2 + t % 5;
    const std::size_t m = std::min(n - 1 + t % 3, n * (n - 1) / 2);
    const GainGraph g = random_connected_graph(rng, n, std::max(m, n - 1));
    const double dev = QMatrix::max_abs_diff(laplacian(g, LaplacianRoute::degree_minus_adjacency),
                                             laplacian(g, LaplacianRoute::incidence_product));
    out.check(dev <= kLemmaTol, dev, graph_witness(g));
    return out;
}

/// The combinatorial reduction sum reproduces the Hermitian determinant.
LemmaOutcome check_main_theorem(SeededRng& rng, std::size_t t) {
    LemmaOutcome out;
    const std::size_t n = 3 + t % 3;
    const std::size_t m = std::min(n + t % 3, n * (n - 1) / 2);
    const GainGraph g = random_connected_graph(rng, n, m);
    out.check_close(det_hermitian(laplacian(g)), det_laplacian_combinatorial(g), kLemmaTol,
                    graph_witness(g));
    return out;
}

using LemmaFn = LemmaOutcome (*)(SeededRng&, std::size_t);

struct LemmaEntry {
    const char* name;
    LemmaFn fn;
};

constexpr LemmaEntry kLemmaCatalog[] = {
    {"hermitian-rc-determinants-agree", check_hermitian_det_agreement},
    {"conjugation-duality", check_conjugation_duality},
    {"row-combination-invariance", check_row_combination},
    {"column-combination-invariance", check_col_combination},
    {"principal-minor-sum-equality", check_principal_minor_sums},
    {"psd-nonnegativity", check_psd},
    {"tree-determinant-zero", check_tree_det},
    {"cycle-determinant", check_cycle_det},
    {"unicyclic-determinant", check_unicyclic_det},
    {"half-edge-tree-determinant", check_half_edge_tree},
    {"balance-theorem-balanced", check_balanced_direction},
    {"balance-theorem-unbalanced", check_unbalanced_direction},
    {"balance-oracle-agreement", check_balance_oracle_agreement},
    {"cycle-gain-representative-invariance", check_representative_invariance},
    {"switching-balance-invariance", check_switching_invariance},
    {"laplacian-route-agreement", check_laplacian_routes},
    {"main-theorem-agreement", check_main_theorem},
};

} // namespace

std::string VerificationReport::to_json() const {
    ordered_json root;
    root["graphDescriptor"] = graph_descriptor;
    root["detDirect"] = format_real(det_direct);
    root["detCombinatorial"] = format_real(det_combinatorial);
    root["detOracleSquared"] = format_real(det_oracle_squared);
    root["maxDiscrepancy"] = format_real(max_discrepancy);
    root["lemmaResults"] = ordered_json::array();
    for (const LemmaResult& r : lemma_results) {
        root["lemmaResults"].push_back(
            {{"lemma", r.lemma}, {"pass", r.pass}, {"witness", r.witness}});
    }
    return root.dump(2);
}

VerificationReport cross_check(const GainGraph& g, double tol) {
    VerificationReport report;
    report.graph_descriptor = describe(g);

    const QMatrix l = laplacian_checked(g, tol);
    report.det_direct = det_hermitian(l, tol);
    report.det_combinatorial = det_laplacian_combinatorial(g, kDefaultReductionBudget, tol);
    report.det_oracle_squared = complex_det_lu(complex_adjoint(l)).real();
    const double oracle = std::sqrt(std::max(0.0, report.det_oracle_squared));

    const double routes = std::abs(report.det_direct - report.det_combinatorial);
    const double oracle_vs_direct = std::abs(oracle - report.det_direct);
    const double oracle_vs_comb = std::abs(oracle - report.det_combinatorial);
    report.max_discrepancy = std::max({routes, oracle_vs_direct, oracle_vs_comb});

    const double oracle_tol =
        std::max(kOracleTol, kOracleTol * std::max(std::abs(report.det_direct), oracle));
    report.pass = routes <= tol && oracle_vs_direct <= oracle_tol &&
                  oracle_vs_comb <= oracle_tol;
    return report;
}

VerificationReport run_lemma_suite(std::uint64_t seed, std::size_t trials) {
    VerificationReport report;
    report.graph_descriptor =
        "lemma-suite(seed=" + std::to_string(seed) + ",trials=" + std::to_string(trials) + ")";
    if (trials == 0) {
        return report; // vacuous pass, empty results
    }

    for (const LemmaEntry& entry : kLemmaCatalog) {
        report.lemma_results.push_back(LemmaResult{entry.name, true, ""});
    }

    SeededRng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        for (std::size_t k = 0; k < std::size(kLemmaCatalog); ++k) {
            const LemmaOutcome outcome = kLemmaCatalog[k].fn(rng, t);
            report.max_discrepancy = std::max(report.max_discrepancy, outcome.discrepancy);
            if (!outcome.ok && report.lemma_results[k].pass) {
                report.lemma_results[k].pass = false;
                report.lemma_results[k].witness = outcome.witness.dump();
            }
            report.pass = report.pass && outcome.ok;
        }
    }
    return report;
}

bool balance_oracle(const GainGraph& g, double tol, std::size_t budget) {
    for (const CycleReport& c : enumerate_cycles(g, SIZE_MAX, budget)) {
        if (!approx_equal(c.gain, Quaternion::one(), tol)) {
            return false;
        }
    }
    return true;
}

} // namespace qgain
