#include "cmlax/lax_classical.hpp"

namespace cmlax {

PhaseMatrix::PhaseMatrix(std::size_t n_, const VarTablePtr& vars)
    : n(n_), e(n_ * n_, PhaseFunction(Poly(vars))) {}

PhaseMatrix PhaseMatrix::operator*(const PhaseMatrix& o) const {
    PhaseMatrix r(n, e.front().vars());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += at(i, k) * o.at(k, j);
            }
        }
    return r;
}

PhaseMatrix PhaseMatrix::operator-(const PhaseMatrix& o) const {
    PhaseMatrix r = *this;
    for (std::size_t j = 0; j < e.size(); ++j) r.e[j] -= o.e[j];
    return r;
}

bool PhaseMatrix::is_zero() const {
    for (const auto& f : e)
        if (!f.is_zero()) return false;
    return true;
}

PhaseFunction PhaseMatrix::trace() const {
    PhaseFunction t{Poly(e.front().vars())};
    for (std::size_t j = 0; j < n; ++j) t += at(j, j);
    return t;
}

PhaseMatrix matrix_commutator(const PhaseMatrix& a, const PhaseMatrix& b) {
    return a * b - b * a;
}

LaxPairClassical build_classical_lax(std::size_t n, const ParamScalar& k) {
    if (n < 2) throw InvalidArgument("build_classical_lax: need n >= 2");
    PhaseSpace space(n);
    LaxPairClassical lax{n, space, PhaseMatrix(n, space.vars), PhaseMatrix(n, space.vars)};
    ParamScalar ik = ParamScalar::i() * k;
    for (std::size_t r = 0; r < n; ++r) {
        lax.L.at(r, r) = space.pf(r);
        for (std::size_t s = 0; s < n; ++s) {
            if (s == r) continue;
            lax.L.at(r, s) = space.q_diff_power(r, s, -1, ik);
            lax.M.at(r, s) = space.q_diff_power(r, s, -2, -ik);
            lax.M.at(r, r) += space.q_diff_power(r, s, -2, ik);
        }
    }
    return lax;
}

PhaseFunction classical_hamiltonian(const PhaseSpace& space, const ParamScalar& k) {
    PhaseFunction h = space.constant(ParamScalar(0));
    GaussianRational half(mpq_class(1, 2));
    ParamScalar k2 = k * k;
    for (std::size_t r = 0; r < space.n; ++r) {
        h += PhaseFunction(space.p(r) * space.p(r)) * ParamScalar(half);
        for (std::size_t s = r + 1; s < space.n; ++s) h += space.q_diff_power(r, s, -2, k2);
    }
    return h;
}

PhaseMatrix classical_lax_residual(std::size_t n, const ParamScalar& k, bool flip_m_entry) {
    LaxPairClassical lax = build_classical_lax(n, k);
    if (flip_m_entry) lax.M.at(0, 1) = -lax.M.at(0, 1);
    PhaseFunction h = classical_hamiltonian(lax.space, k);
    PhaseMatrix lhs(n, lax.space.vars);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) lhs.at(r, s) = poisson_bracket(h, lax.L.at(r, s));
    return lhs - matrix_commutator(lax.L, lax.M);
}

PhaseFunction classical_integral(const LaxPairClassical& lax, std::size_t m) {
    if (m < 1 || m > lax.n) throw InvalidArgument("classical_integral: m out of range");
    PhaseMatrix power = lax.L;
    for (std::size_t j = 1; j < m; ++j) power = power * lax.L;
    return power.trace() / GaussianRational(mpq_class(long(m)));
}

} // namespace cmlax
