#pragma once

#include <vector>

#include "cmlax/phase.hpp"

namespace cmlax {

/// Square matrix of phase-space observables.
struct PhaseMatrix {
    std::size_t n = 0;
    std::vector<PhaseFunction> e;

    PhaseMatrix() = default;
    PhaseMatrix(std::size_t n_, const VarTablePtr& vars);

    PhaseFunction& at(std::size_t r, std::size_t s) { return e[r * n + s]; }
    const PhaseFunction& at(std::size_t r, std::size_t s) const { return e[r * n + s]; }

    PhaseMatrix operator*(const PhaseMatrix& o) const;
    PhaseMatrix operator-(const PhaseMatrix& o) const;
    bool is_zero() const;
    PhaseFunction trace() const;
};

PhaseMatrix matrix_commutator(const PhaseMatrix& a, const PhaseMatrix& b);

/// L_rs = p_r delta_rs + (1-delta_rs) ik/(q_r-q_s),
/// M_rs = -ik(1-delta_rs)/(q_r-q_s)^2 + delta_rs sum_{t!=r} ik/(q_r-q_t)^2.
/// Every row and column of M sums to zero.
struct LaxPairClassical {
    std::size_t n;
    PhaseSpace space;
    PhaseMatrix L;
    PhaseMatrix M;
};

/// Coupling passed symbolically by default; pass a rational to specialize.
LaxPairClassical build_classical_lax(std::size_t n, const ParamScalar& k = ParamScalar::k());

/// H = (1/2) sum p_r^2 + k^2 sum_{r<s} (q_r-q_s)^{-2}; equals I_2 of the pair.
PhaseFunction classical_hamiltonian(const PhaseSpace& space, const ParamScalar& k = ParamScalar::k());

/// Entrywise {H, L_rs} - [L,M]_rs; identically zero when the pair satisfies
/// the Lax equation. `flip_m_entry` negates M_{01} first (negative control).
PhaseMatrix classical_lax_residual(std::size_t n, const ParamScalar& k = ParamScalar::k(),
                                   bool flip_m_entry = false);

/// I_m = (1/m) tr(L^m), 1 <= m <= n.
PhaseFunction classical_integral(const LaxPairClassical& lax, std::size_t m);

} // namespace cmlax
