#include "cmlax/phase.hpp"

namespace cmlax {

PhaseFunction PhaseSpace::q_diff_power(std::size_t r, std::size_t s, int power,
                                       ParamScalar c) const {
    std::vector<mpq_class> coeffs(vars->size(), 0);
    coeffs[r] = 1;
    coeffs[s] = -1;
    return linear_power(vars, coeffs, power, c);
}

PhaseFunction poisson_bracket(const PhaseFunction& f, const PhaseFunction& g) {
    auto m = unify_vars(f.vars(), g.vars());
    const PhaseFunction& a = m.trivial_a ? f : f.relabeled(m.table, m.map_a);
    const PhaseFunction b = m.trivial_b ? g : g.relabeled(m.table, m.map_b);

    const VarTablePtr& vars = m.table;
    std::size_t n = vars->position_count;
    if (vars->size() != 2 * n)
        throw InvalidArgument("poisson_bracket: not a phase-space variable universe");

    PhaseFunction result{Poly(vars)};
    for (std::size_t j = 0; j < n; ++j) {
        PhaseFunction df_dp = a.partial_derivative(n + j);
        PhaseFunction dg_dp = b.partial_derivative(n + j);
        if (!df_dp.is_zero()) result += df_dp * b.partial_derivative(j);
        if (!dg_dp.is_zero()) result -= a.partial_derivative(j) * dg_dp;
    }
    return result;
}

} // namespace cmlax
