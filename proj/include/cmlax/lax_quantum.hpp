#pragma once

#include <vector>

#include "cmlax/diffop.hpp"

namespace cmlax {

/// Square matrix of differential operators.
struct OpMatrix {
    std::size_t n = 0;
    std::vector<DiffOp> e;

    OpMatrix() = default;
    OpMatrix(std::size_t n_, const VarTablePtr& vars);

    DiffOp& at(std::size_t r, std::size_t s) { return e[r * n + s]; }
    const DiffOp& at(std::size_t r, std::size_t s) const { return e[r * n + s]; }

    OpMatrix operator*(const OpMatrix& o) const;
    OpMatrix operator-(const OpMatrix& o) const;
    bool is_zero() const;
    /// Sum of all entries.
    DiffOp entry_sum() const;
};

OpMatrix op_commutator(const OpMatrix& a, const OpMatrix& b);

/// Quantum Lax pair over position operators q_1..q_n, with momenta realized
/// as -i d/dq_j. The sign of the coupling inside L and M is fixed so that the
/// Lax equation closes against the Hamiltonian with g = k(k+1):
///   L_rs = p_r delta_rs - (1-delta_rs) ik/(q_r-q_s),
///   M_rs = k(1-delta_rs)/(q_r-q_s)^2 - delta_rs sum_{t!=r} k/(q_r-q_t)^2.
/// M satisfies the sum-to-zero condition on rows and columns, validated at
/// construction.
struct LaxPairQuantum {
    std::size_t n;
    VarTablePtr vars;
    OpMatrix L;
    OpMatrix M;
};

LaxPairQuantum build_quantum_lax(std::size_t n, const ParamScalar& k = ParamScalar::k());

/// H = (1/2) sum p_r^2 + g sum_{r<s} (q_r-q_s)^{-2} with g = k(k+1).
DiffOp quantum_hamiltonian(std::size_t n, const ParamScalar& k = ParamScalar::k());

/// Entrywise i[H I, L] - i[L, M] in normal form; zero iff the Lax equation
/// holds. `flip_m_entry` negates M_{01} first (negative control).
OpMatrix quantum_lax_residual(std::size_t n, const ParamScalar& k = ParamScalar::k(),
                              bool flip_m_entry = false);

/// J_m = (1/m) sum_{j,k} (L^m)_{jk}, 1 <= m <= n.
DiffOp quantum_integral(const LaxPairQuantum& lax, std::size_t m);

/// Residual [p_i, f] + i f' of the derivative rule for multiplication
/// operators; the zero operator for every rational f of the positions.
DiffOp key_lemma_residual(const RatFunc& f, std::size_t i);

/// Computes [sum_l q_l, J_m], asserts it is a scalar multiple of J_{m-1} and
/// returns the scalar. Throws NotProportional otherwise.
ParamScalar recursion_constant(std::size_t n, std::size_t m,
                               const ParamScalar& k = ParamScalar::k());

} // namespace cmlax
