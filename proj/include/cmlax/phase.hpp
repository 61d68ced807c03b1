#pragma once

#include "cmlax/ratfunc.hpp"

namespace cmlax {

/// Observable on the 2n-dimensional phase space (q_1..q_n, p_1..p_n):
/// a rational function whose denominator forms involve positions only.
using PhaseFunction = RatFunc;

/// Builders over a shared phase-space table.
struct PhaseSpace {
    explicit PhaseSpace(std::size_t n_) : n(n_), vars(phase_vars(n_)) {}

    std::size_t n;
    VarTablePtr vars;

    Poly q(std::size_t j) const { return Poly::variable(vars, j); }
    Poly p(std::size_t j) const { return Poly::variable(vars, n + j); }
    PhaseFunction qf(std::size_t j) const { return PhaseFunction(q(j)); }
    PhaseFunction pf(std::size_t j) const { return PhaseFunction(p(j)); }
    PhaseFunction constant(ParamScalar c) const { return RatFunc::constant(vars, std::move(c)); }
    /// c * (q_r - q_s)^power, power may be negative.
    PhaseFunction q_diff_power(std::size_t r, std::size_t s, int power,
                               ParamScalar c = ParamScalar(1)) const;
};

/// {f, g} = sum_j (df/dp_j dg/dq_j - df/dq_j dg/dp_j).
PhaseFunction poisson_bracket(const PhaseFunction& f, const PhaseFunction& g);

} // namespace cmlax
