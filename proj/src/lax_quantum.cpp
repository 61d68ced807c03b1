#include "cmlax/lax_quantum.hpp"

namespace cmlax {

OpMatrix::OpMatrix(std::size_t n_, const VarTablePtr& vars) : n(n_), e(n_ * n_, DiffOp(vars)) {}

OpMatrix OpMatrix::operator*(const OpMatrix& o) const {
    OpMatrix r(n, e.front().vars());
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

OpMatrix OpMatrix::operator-(const OpMatrix& o) const {
    OpMatrix r = *this;
    for (std::size_t j = 0; j < e.size(); ++j) r.e[j] -= o.e[j];
    return r;
}

bool OpMatrix::is_zero() const {
    for (const auto& f : e)
        if (!f.is_zero()) return false;
    return true;
}

DiffOp OpMatrix::entry_sum() const {
    DiffOp s(e.front().vars());
    for (const auto& f : e) s += f;
    return s;
}

OpMatrix op_commutator(const OpMatrix& a, const OpMatrix& b) { return a * b - b * a; }

namespace {

RatFunc q_diff_power(const VarTablePtr& vars, std::size_t r, std::size_t s, int power,
                     const ParamScalar& c) {
    std::vector<mpq_class> coeffs(vars->size(), 0);
    coeffs[r] = 1;
    coeffs[s] = -1;
    return linear_power(vars, coeffs, power, c);
}

VarTablePtr position_operator_vars(std::size_t n) {
    auto t = std::make_shared<VarTable>();
    for (std::size_t j = 1; j <= n; ++j) t->names.push_back("q" + std::to_string(j));
    t->position_count = n;
    return t;
}

} // namespace

LaxPairQuantum build_quantum_lax(std::size_t n, const ParamScalar& k) {
    if (n < 2) throw InvalidArgument("build_quantum_lax: need n >= 2");
    VarTablePtr vars = position_operator_vars(n);
    LaxPairQuantum lax{n, vars, OpMatrix(n, vars), OpMatrix(n, vars)};
    ParamScalar ik = ParamScalar::i() * k;
    for (std::size_t r = 0; r < n; ++r) {
        lax.L.at(r, r) = DiffOp::momentum(vars, r);
        for (std::size_t s = 0; s < n; ++s) {
            if (s == r) continue;
            lax.L.at(r, s) = DiffOp::mul_op(q_diff_power(vars, r, s, -1, -ik));
            lax.M.at(r, s) = DiffOp::mul_op(q_diff_power(vars, r, s, -2, k));
            lax.M.at(r, r) -= DiffOp::mul_op(q_diff_power(vars, r, s, -2, k));
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        DiffOp row(vars), col(vars);
        for (std::size_t j = 0; j < n; ++j) {
            row += lax.M.at(i, j);
            col += lax.M.at(j, i);
        }
        if (!row.is_zero() || !col.is_zero())
            throw Error("build_quantum_lax: sum-to-zero condition violated");
    }
    return lax;
}

DiffOp quantum_hamiltonian(std::size_t n, const ParamScalar& k) {
    VarTablePtr vars = position_operator_vars(n);
    DiffOp h(vars);
    GaussianRational half(mpq_class(1, 2));
    ParamScalar g = k * k + k;
    for (std::size_t r = 0; r < n; ++r) {
        DiffOp p = DiffOp::momentum(vars, r);
        h += (p * p) * ParamScalar(half);
        for (std::size_t s = r + 1; s < n; ++s)
            h += DiffOp::mul_op(q_diff_power(vars, r, s, -2, g));
    }
    return h;
}

OpMatrix quantum_lax_residual(std::size_t n, const ParamScalar& k, bool flip_m_entry) {
    LaxPairQuantum lax = build_quantum_lax(n, k);
    if (flip_m_entry) lax.M.at(0, 1) = -lax.M.at(0, 1);
    DiffOp h = quantum_hamiltonian(n, k);
    ParamScalar i = ParamScalar::i();
    OpMatrix lhs(n, lax.vars);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) lhs.at(r, s) = commutator(h, lax.L.at(r, s)) * i;
    OpMatrix rhs = op_commutator(lax.L, lax.M);
    for (auto& entry : rhs.e) entry = entry * i;
    return lhs - rhs;
}

DiffOp quantum_integral(const LaxPairQuantum& lax, std::size_t m) {
    if (m < 1 || m > lax.n) throw InvalidArgument("quantum_integral: m out of range");
    OpMatrix power = lax.L;
    for (std::size_t j = 1; j < m; ++j) power = power * lax.L;
    DiffOp s = power.entry_sum();
    return s * ParamScalar(GaussianRational(mpq_class(1, long(m))));
}

DiffOp key_lemma_residual(const RatFunc& f, std::size_t i) {
    const VarTablePtr& vars = f.vars();
    for (std::size_t v = vars->position_count; v < vars->size(); ++v) {
        for (const auto& [e, c] : f.num().terms())
            if (e[v] != 0) throw InvalidArgument("key_lemma_residual: f depends on momenta");
    }
    DiffOp p = DiffOp::momentum(vars, i);
    DiffOp lhs = commutator(p, DiffOp::mul_op(f));
    return lhs + DiffOp::mul_op(f.partial_derivative(i)) * ParamScalar::i();
}

ParamScalar recursion_constant(std::size_t n, std::size_t m, const ParamScalar& k) {
    if (m < 2 || m > n) throw InvalidArgument("recursion_constant: need 2 <= m <= n");
    LaxPairQuantum lax = build_quantum_lax(n, k);
    DiffOp jm = quantum_integral(lax, m);
    DiffOp jprev = quantum_integral(lax, m - 1);

    DiffOp qsum(lax.vars);
    for (std::size_t l = 0; l < n; ++l)
        qsum += DiffOp::mul_op(RatFunc(Poly::variable(lax.vars, l)));
    DiffOp comm = commutator(qsum, jm);

    // candidate scalar from a pair of terms with constant coefficients
    ParamScalar lambda;
    bool found = false;
    for (const auto& [e, coeff] : jprev.terms()) {
        if (!coeff.is_polynomial() || !coeff.as_poly().is_constant()) continue;
        auto it = comm.terms().find(e);
        if (it == comm.terms().end()) break;
        const RatFunc& target = it->second;
        if (!target.is_polynomial() || !target.as_poly().is_constant()) break;
        ParamScalar a = target.as_poly().constant_part();
        ParamScalar b = coeff.as_poly().constant_part();
        if (!b.is_constant() || !a.is_constant()) break;
        lambda = ParamScalar(a.constant_part() / b.constant_part());
        found = true;
        break;
    }
    if (!found) throw NotProportional("recursion_constant: no usable reference term");
    DiffOp residual = comm - jprev * lambda;
    if (!residual.is_zero())
        throw NotProportional("recursion_constant: commutator is not proportional, residual " +
                              residual.str());
    return lambda;
}

} // namespace cmlax
