#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qgain/gain_graph.hpp"

namespace qgain {

struct LemmaResult {
    std::string lemma;
    bool pass = true;
    std::string witness; // serialized offending input when pass is false
};

/// Outcome of the cross-route determinant check and of the lemma suite.
/// Reals serialize as decimal strings with 12 significant digits.
struct VerificationReport {
    std::string graph_descriptor;
    double det_direct = 0.0;
    double det_combinatorial = 0.0;
    double det_oracle_squared = 0.0; // det of the complex adjoint of L
    double max_discrepancy = 0.0;
    std::vector<LemmaResult> lemma_results;
    bool pass = true;

    std::string to_json() const;
};

/// Evaluates det L(G) by all three routes — the Hermitian permutation sum,
/// the combinatorial reduction sum, and sqrt(det chi(L)) on the nonnegative
/// branch — and requires agreement: the two permutation-level routes within
/// tol absolute, the elimination-based oracle within 1e-6 relative (with a
/// 1e-6 absolute floor for vanishing determinants).
VerificationReport cross_check(const GainGraph& g, double tol = kDefaultTol);

/// Runs the whole lemma catalog on `trials` seeded random instances per
/// lemma. Deterministic: identical seed and trials give an identical report.
/// Failures are report entries with witnesses, never exceptions.
VerificationReport run_lemma_suite(std::uint64_t seed, std::size_t trials);

/// Exhaustive balance test: enumerates every simple cycle and checks each
/// gain against 1. The spanning-tree is_balanced must agree with this on
/// every graph where the enumeration completes.
bool balance_oracle(const GainGraph& g, double tol = kDefaultTol,
                    std::size_t budget = kDefaultCycleBudget);

} // namespace qgain
