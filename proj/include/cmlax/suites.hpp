#pragma once

#include <vector>

#include "cmlax/report.hpp"
#include "cmlax/sim.hpp"

namespace cmlax {

/// Lax equation, sum-to-zero, and the free-particle specialization.
std::vector<CheckResult> suite_classical_lax(std::size_t n, bool flip_m_entry = false);

/// Integrals I_1..I_n: closed forms, Hamilton's equations, pairwise brackets.
std::vector<CheckResult> suite_involution(std::size_t n);

/// Linearity, anticommutativity, Leibniz, and Jacobi on randomized
/// phase-space samples with bounded degree; every counterexample is reported.
std::vector<CheckResult> suite_bracket_axioms(std::size_t n, std::size_t pair_samples = 100,
                                              std::size_t triple_samples = 50,
                                              unsigned seed = 20240817);

/// Quantum Lax equation with g = k(k+1), sum-to-zero, free specialization.
std::vector<CheckResult> suite_quantum_lax(std::size_t n, bool flip_m_entry = false);

/// J_1..J_n: closed forms, leading symbols, pairwise commutators, the
/// derivative-rule corpus, recursion constants.
std::vector<CheckResult> suite_quantum_commute(std::size_t n);

/// Root counts, axioms, crystallographic and Coxeter-order checks, positive
/// decomposition, conjugation law; |W| when enumerable.
std::vector<CheckResult> suite_roots(const std::string& label, bool enumerate_weyl = false);

/// Dunkl commutativity on the monomial basis plus equivariance and the
/// rotation-fiber cancellation.
std::vector<CheckResult> suite_dunkl_commute(const std::string& label, std::uint32_t max_degree);

/// Two-path restriction identity on invariant generators and as operators.
std::vector<CheckResult> suite_dunkl_restrict(const std::string& label);

/// Gauge-shifted restricted square equals the inverse-square potential form.
std::vector<CheckResult> suite_dunkl_gauge(const std::string& label);

/// Classical Dunkl involution, restriction, and gauge substitution.
std::vector<CheckResult> suite_dunkl_classical(const std::string& label);

struct SimSuiteOptions {
    SimConfig config;
    double drift_tolerance = 1e-8;
    double reversal_tolerance = 1e-6;
    double min_observed_order = 3.8;
    std::string csv_path;  // empty = do not write
};

/// Drift, momentum conservation, convergence order, time reversal.
std::vector<CheckResult> suite_simulate(const SimSuiteOptions& options);

/// The curated default matrix: n=3 verifications, root types A2/A3/B2/G2/F4,
/// Dunkl degree cap 5, and the reference simulation.
std::vector<CheckResult> suite_all(bool slow = false);

} // namespace cmlax
