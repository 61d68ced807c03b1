#include "cmlax/suites.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "cmlax/dunkl_classical.hpp"
#include "cmlax/lax_classical.hpp"
#include "cmlax/lax_quantum.hpp"

namespace cmlax {

namespace {

std::string tag(const std::string& base, std::size_t n) { return base + "-n" + std::to_string(n); }

std::string first_nonzero_entry(const PhaseMatrix& m) {
    for (std::size_t r = 0; r < m.n; ++r)
        for (std::size_t s = 0; s < m.n; ++s)
            if (!m.at(r, s).is_zero())
                return "entry (" + std::to_string(r + 1) + "," + std::to_string(s + 1) +
                       "): " + m.at(r, s).str();
    return {};
}

std::string first_nonzero_entry(const OpMatrix& m) {
    for (std::size_t r = 0; r < m.n; ++r)
        for (std::size_t s = 0; s < m.n; ++s)
            if (!m.at(r, s).is_zero())
                return "entry (" + std::to_string(r + 1) + "," + std::to_string(s + 1) +
                       "): " + m.at(r, s).str();
    return {};
}

} // namespace

std::vector<CheckResult> suite_classical_lax(std::size_t n, bool flip_m_entry) {
    const std::string suite = "classical-lax";
    std::vector<CheckResult> out;

    out.push_back(run_check(suite, tag("m-row-col-sums", n), [&] {
        LaxPairClassical lax = build_classical_lax(n);
        for (std::size_t i = 0; i < n; ++i) {
            PhaseFunction row{Poly(lax.space.vars)}, col{Poly(lax.space.vars)};
            for (std::size_t j = 0; j < n; ++j) {
                row += lax.M.at(i, j);
                col += lax.M.at(j, i);
            }
            if (!row.is_zero()) return "row " + std::to_string(i + 1) + ": " + row.str();
            if (!col.is_zero()) return "column " + std::to_string(i + 1) + ": " + col.str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, tag("lax-residual", n), [&] {
        PhaseMatrix r = classical_lax_residual(n, ParamScalar::k(), flip_m_entry);
        return first_nonzero_entry(r);
    }));

    out.push_back(run_check(suite, tag("lax-residual-k0", n), [&] {
        PhaseMatrix r = classical_lax_residual(n, ParamScalar(0));
        return first_nonzero_entry(r);
    }));

    return out;
}

std::vector<CheckResult> suite_involution(std::size_t n) {
    const std::string suite = "involution";
    std::vector<CheckResult> out;
    LaxPairClassical lax = build_classical_lax(n);
    const PhaseSpace& sp = lax.space;

    out.push_back(run_check(suite, tag("integral-i1-momentum", n), [&] {
        PhaseFunction i1 = classical_integral(lax, 1);
        PhaseFunction total{Poly(sp.vars)};
        for (std::size_t r = 0; r < n; ++r) total += sp.pf(r);
        return i1 == total ? std::string() : (i1 - total).str();
    }));

    out.push_back(run_check(suite, tag("integral-i2-hamiltonian", n), [&] {
        PhaseFunction i2 = classical_integral(lax, 2);
        PhaseFunction h = classical_hamiltonian(sp);
        return i2 == h ? std::string() : (i2 - h).str();
    }));

    if (n == 3) {
        out.push_back(run_check(suite, "integral-i3-closed-form-n3", [&] {
            // (1/3) sum p_r^3 + k^2 sum_r p_r sum_{s != r} (q_r - q_s)^{-2}
            PhaseFunction expect{Poly(sp.vars)};
            GaussianRational third(mpq_class(1, 3));
            ParamScalar k2 = ParamScalar::k() * ParamScalar::k();
            for (std::size_t r = 0; r < n; ++r) {
                expect += PhaseFunction(sp.p(r) * sp.p(r) * sp.p(r)) * ParamScalar(third);
                for (std::size_t s = 0; s < n; ++s) {
                    if (s == r) continue;
                    expect += sp.q_diff_power(r, s, -2, k2) * PhaseFunction(sp.p(r));
                }
            }
            PhaseFunction i3 = classical_integral(lax, 3);
            return i3 == expect ? std::string() : (i3 - expect).str();
        }));
    }

    out.push_back(run_check(suite, tag("hamilton-q-dot", n), [&] {
        PhaseFunction h = classical_hamiltonian(sp);
        for (std::size_t i = 0; i < n; ++i) {
            PhaseFunction lhs = poisson_bracket(h, sp.qf(i));
            if (!(lhs == sp.pf(i)))
                return "coordinate " + std::to_string(i + 1) + ": " + lhs.str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, tag("hamilton-p-dot", n), [&] {
        PhaseFunction h = classical_hamiltonian(sp);
        ParamScalar k2_2 = ParamScalar::k() * ParamScalar::k() * GaussianRational(2);
        for (std::size_t i = 0; i < n; ++i) {
            PhaseFunction lhs = poisson_bracket(h, sp.pf(i));
            PhaseFunction force{Poly(sp.vars)};
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                force += sp.q_diff_power(i, j, -3, k2_2);
            }
            if (!(lhs == force))
                return "momentum " + std::to_string(i + 1) + ": " + (lhs - force).str();
        }
        return std::string();
    }));

    std::vector<PhaseFunction> integrals;
    for (std::size_t m = 1; m <= n; ++m) integrals.push_back(classical_integral(lax, m));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            out.push_back(run_check(
                suite, "poisson-i" + std::to_string(i) + "-i" + std::to_string(j) + "-n" +
                           std::to_string(n),
                [&, i, j] {
                    PhaseFunction b = poisson_bracket(integrals[i - 1], integrals[j - 1]);
                    return b.is_zero() ? std::string() : b.str();
                }));
        }

    for (auto& r : suite_bracket_axioms(n)) out.push_back(std::move(r));
    return out;
}

namespace {

struct SampleRng {
    explicit SampleRng(unsigned seed) : gen(seed) {}
    std::mt19937 gen;
    int small() { return int(gen() % 7) - 3; }
};

PhaseFunction random_phase_function(SampleRng& rng, const PhaseSpace& sp) {
    Poly num(sp.vars);
    std::size_t width = sp.vars->size();
    int terms = 1 + int(rng.gen() % 3);
    for (int t = 0; t < terms; ++t) {
        Exp e(width, 0);
        e[rng.gen() % width] += 1;
        if (rng.gen() % 2) e[rng.gen() % width] += 1;
        ParamScalar c(rng.small());
        if (rng.gen() % 4 == 0) c = c * ParamScalar::k();
        num.add_term(e, c);
    }
    RatFunc::Den den;
    if (rng.gen() % 2 && sp.n >= 2) {
        std::size_t a = rng.gen() % sp.n, b = rng.gen() % sp.n;
        if (a != b) {
            std::vector<mpq_class> coeffs(width, 0);
            coeffs[a] = 1;
            coeffs[b] = -1;
            den[LinearForm::canonicalize(coeffs).first] = 1;
        }
    }
    return RatFunc(std::move(num), std::move(den));
}

} // namespace

std::vector<CheckResult> suite_bracket_axioms(std::size_t n, std::size_t pair_samples,
                                              std::size_t triple_samples, unsigned seed) {
    const std::string suite = "bracket-axioms";
    std::vector<CheckResult> out;
    PhaseSpace sp(n);
    SampleRng rng(seed);

    out.push_back(run_check(suite, tag("linearity", n), [&] {
        for (std::size_t t = 0; t < pair_samples; ++t) {
            PhaseFunction f = random_phase_function(rng, sp);
            PhaseFunction g = random_phase_function(rng, sp);
            PhaseFunction h = random_phase_function(rng, sp);
            ParamScalar lam(rng.small()), mu(rng.small());
            PhaseFunction lhs = poisson_bracket(f * lam + g * mu, h);
            PhaseFunction rhs = poisson_bracket(f, h) * lam + poisson_bracket(g, h) * mu;
            if (!(lhs == rhs)) return "sample " + std::to_string(t) + ": " + (lhs - rhs).str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, tag("anticommutativity", n), [&] {
        for (std::size_t t = 0; t < pair_samples; ++t) {
            PhaseFunction f = random_phase_function(rng, sp);
            PhaseFunction g = random_phase_function(rng, sp);
            PhaseFunction sum = poisson_bracket(f, g) + poisson_bracket(g, f);
            if (!sum.is_zero()) return "sample " + std::to_string(t) + ": " + sum.str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, tag("leibniz", n), [&] {
        for (std::size_t t = 0; t < pair_samples; ++t) {
            PhaseFunction f = random_phase_function(rng, sp);
            PhaseFunction g = random_phase_function(rng, sp);
            PhaseFunction h = random_phase_function(rng, sp);
            PhaseFunction lhs = poisson_bracket(f, g * h);
            PhaseFunction rhs = poisson_bracket(f, g) * h + g * poisson_bracket(f, h);
            if (!(lhs == rhs)) return "sample " + std::to_string(t) + ": " + (lhs - rhs).str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, tag("jacobi", n), [&] {
        for (std::size_t t = 0; t < triple_samples; ++t) {
            PhaseFunction f = random_phase_function(rng, sp);
            PhaseFunction g = random_phase_function(rng, sp);
            PhaseFunction h = random_phase_function(rng, sp);
            PhaseFunction cyc = poisson_bracket(f, poisson_bracket(g, h)) +
                                poisson_bracket(g, poisson_bracket(h, f)) +
                                poisson_bracket(h, poisson_bracket(f, g));
            if (!cyc.is_zero()) return "sample " + std::to_string(t) + ": " + cyc.str();
        }
        return std::string();
    }));

    return out;
}

std::vector<CheckResult> suite_quantum_lax(std::size_t n, bool flip_m_entry) {
    const std::string suite = "quantum-lax";
    std::vector<CheckResult> out;

    out.push_back(run_check(suite, tag("m-sum-to-zero", n), [&] {
        LaxPairQuantum lax = build_quantum_lax(n);
        for (std::size_t i = 0; i < n; ++i) {
            DiffOp row(lax.vars), col(lax.vars);
            for (std::size_t j = 0; j < n; ++j) {
                row += lax.M.at(i, j);
                col += lax.M.at(j, i);
            }
            if (!row.is_zero()) return "row " + std::to_string(i + 1) + ": " + row.str();
            if (!col.is_zero()) return "column " + std::to_string(i + 1) + ": " + col.str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, tag("lax-residual", n), [&] {
        OpMatrix r = quantum_lax_residual(n, ParamScalar::k(), flip_m_entry);
        return first_nonzero_entry(r);
    }));

    out.push_back(run_check(suite, tag("lax-residual-k0", n), [&] {
        OpMatrix r = quantum_lax_residual(n, ParamScalar(0));
        return first_nonzero_entry(r);
    }));

    return out;
}

std::vector<CheckResult> suite_quantum_commute(std::size_t n) {
    const std::string suite = "quantum-commute";
    std::vector<CheckResult> out;
    LaxPairQuantum lax = build_quantum_lax(n);

    out.push_back(run_check(suite, tag("integral-j1-momentum", n), [&] {
        DiffOp j1 = quantum_integral(lax, 1);
        DiffOp total(lax.vars);
        for (std::size_t r = 0; r < n; ++r) total += DiffOp::momentum(lax.vars, r);
        return j1 == total ? std::string() : (j1 - total).str();
    }));

    out.push_back(run_check(suite, tag("integral-j2-hamiltonian", n), [&] {
        DiffOp j2 = quantum_integral(lax, 2);
        DiffOp h = quantum_hamiltonian(n);
        return j2 == h ? std::string() : (j2 - h).str();
    }));

    if (n == 3) {
        out.push_back(run_check(suite, "integral-j3-closed-form-n3", [&] {
            // (1/3) sum p_r^3
            //   + (g/3) sum_{s != r} (p_r u_rs^{-2} + u_rs^{-1} p_r u_rs^{-1} + u_rs^{-2} p_r)
            // with u_rs = q_r - q_s and g = k(k+1)
            const VarTablePtr& vars = lax.vars;
            ParamScalar g = ParamScalar::k() * ParamScalar::k() + ParamScalar::k();
            GaussianRational third(mpq_class(1, 3));
            DiffOp expect(vars);
            for (std::size_t r = 0; r < n; ++r) {
                DiffOp p = DiffOp::momentum(vars, r);
                expect += (p * p * p) * ParamScalar(third);
                for (std::size_t s = 0; s < n; ++s) {
                    if (s == r) continue;
                    std::vector<mpq_class> coeffs(vars->size(), 0);
                    coeffs[r] = 1;
                    coeffs[s] = -1;
                    DiffOp inv1 = DiffOp::mul_op(linear_power(vars, coeffs, -1, ParamScalar(1)));
                    DiffOp inv2 = DiffOp::mul_op(linear_power(vars, coeffs, -2, ParamScalar(1)));
                    DiffOp mid = inv1 * p * inv1;
                    expect += (inv2 * p + mid + p * inv2) * (g * third);
                }
            }
            DiffOp j3 = quantum_integral(lax, 3);
            return j3 == expect ? std::string() : (j3 - expect).str();
        }));
    }

    out.push_back(run_check(suite, tag("leading-symbols", n), [&] {
        // J_m carries (1/m) sum_r p_r^m at top order: the order-m terms are
        // exactly (1/m)(-i)^m d_r^m
        for (std::size_t m = 1; m <= n; ++m) {
            DiffOp jm = quantum_integral(lax, m);
            GaussianRational c(mpq_class(1, long(m)));
            for (std::size_t t = 0; t < m; ++t) c = c * (-GaussianRational::i());
            DiffOp top(lax.vars);
            for (std::size_t r = 0; r < n; ++r) {
                Exp e(n, 0);
                e[r] = static_cast<std::uint32_t>(m);
                top.add_term(e, RatFunc::constant(lax.vars, ParamScalar(c)));
            }
            for (const auto& [e, coeff] : jm.terms()) {
                if (total_degree(e) != m) continue;
                auto it = top.terms().find(e);
                if (it == top.terms().end() || !(it->second == coeff))
                    return "J_" + std::to_string(m) + " top term " + coeff.str();
            }
        }
        return std::string();
    }));

    std::vector<DiffOp> integrals;
    for (std::size_t m = 1; m <= n; ++m) integrals.push_back(quantum_integral(lax, m));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            out.push_back(run_check(
                suite, "commute-j" + std::to_string(i) + "-j" + std::to_string(j) + "-n" +
                           std::to_string(n),
                [&, i, j] {
                    DiffOp c = commutator(integrals[i - 1], integrals[j - 1]);
                    return c.is_zero() ? std::string() : c.str();
                }));
        }

    out.push_back(run_check(suite, tag("derivative-rule-corpus", n), [&] {
        const VarTablePtr& vars = lax.vars;
        std::vector<mpq_class> d01(vars->size(), 0);
        d01[0] = 1;
        d01[1] = -1;
        std::vector<RatFunc> corpus = {
            RatFunc(Poly::variable(vars, 0, 2)),
            RatFunc::constant(vars, ParamScalar(5)),
            linear_power(vars, d01, -1, ParamScalar(1)),
            linear_power(vars, d01, -2, ParamScalar::k()),
            RatFunc(Poly::variable(vars, 0) * Poly::variable(vars, 1)) +
                linear_power(vars, d01, -3, ParamScalar(1)),
        };
        for (const auto& f : corpus)
            for (std::size_t i = 0; i < n; ++i) {
                DiffOp r = key_lemma_residual(f, i);
                if (!r.is_zero()) return "f = " + f.str() + ": " + r.str();
            }
        return std::string();
    }));

    for (std::size_t m = 2; m <= n; ++m) {
        out.push_back(run_check(suite, "recursion-m" + std::to_string(m) + "-n" + std::to_string(n),
                                [&, m] {
                                    recursion_constant(n, m);
                                    return std::string();
                                }));
    }
    return out;
}

std::vector<CheckResult> suite_roots(const std::string& label, bool enumerate_weyl) {
    const std::string suite = "roots";
    std::vector<CheckResult> out;

    static const std::map<std::string, std::size_t> expected_counts = {
        {"A1", 2},  {"A2", 6},  {"A3", 12},  {"B2", 8},   {"B3", 18},  {"C3", 18},
        {"D4", 24}, {"G2", 12}, {"F4", 48},  {"E6", 72},  {"E7", 126}, {"E8", 240},
    };
    static const std::map<std::string, std::size_t> expected_weyl = {
        {"A1", 2},  {"A2", 6},   {"A3", 24}, {"B2", 8},
        {"B3", 48}, {"D4", 192}, {"G2", 12}, {"F4", 1152},
    };

    RootSystem rs = build_root_system(label);

    out.push_back(run_check(suite, "count-" + label, [&] {
        std::size_t closed_form = 0;
        switch (rs.family) {
            case 'A': closed_form = std::size_t(rs.rank) * (rs.rank + 1); break;
            case 'B':
            case 'C': closed_form = 2 * std::size_t(rs.rank) * rs.rank; break;
            case 'D': closed_form = 2 * std::size_t(rs.rank) * (rs.rank - 1); break;
            case 'G': closed_form = 12; break;
            case 'F': closed_form = 48; break;
            case 'E': closed_form = rs.rank == 6 ? 72 : (rs.rank == 7 ? 126 : 240); break;
            default: break;
        }
        auto it = expected_counts.find(label);
        if (it != expected_counts.end() && it->second != closed_form)
            return std::string("closed form disagrees with expectation table");
        if (rs.roots.size() != closed_form)
            return "got " + std::to_string(rs.roots.size()) + ", expected " +
                   std::to_string(closed_form);
        return std::string();
    }));

    out.push_back(run_check(suite, "axioms-" + label, [&] { return check_axioms(rs); }));
    out.push_back(
        run_check(suite, "crystallographic-" + label, [&] { return check_crystallographic(rs); }));
    out.push_back(run_check(suite, "positive-decomposition-" + label,
                            [&] { return check_positive_decomposition(rs); }));

    out.push_back(run_check(suite, "simple-size-" + label, [&] {
        return rs.simple.size() == std::size_t(rs.rank)
                   ? std::string()
                   : "got " + std::to_string(rs.simple.size());
    }));

    out.push_back(run_check(suite, "coxeter-orders-" + label, [&] {
        for (const auto& a : rs.roots)
            for (const auto& b : rs.roots) {
                int m = coxeter_order(a, b);
                bool parallel = m == 1;
                if (parallel) {
                    // only alpha and -alpha coincide as reflections
                    Vec sum = a + b, diff = a - b;
                    if (!is_zero(sum) && !is_zero(diff))
                        return "order 1 for non-parallel pair " + vec_str(a) + ", " + vec_str(b);
                } else if (m != 2 && m != 3 && m != 4 && m != 6) {
                    return "order " + std::to_string(m) + " for " + vec_str(a) + ", " + vec_str(b);
                }
            }
        return std::string();
    }));

    out.push_back(run_check(suite, "reflection-involution-" + label, [&] {
        for (auto i : rs.simple) {
            GroupElem s = GroupElem::reflection(rs.roots[i]);
            if (!(s * s).is_identity()) return "sigma^2 != id for " + vec_str(rs.roots[i]);
            Vec image = s.apply(rs.roots[i]);
            if (!is_zero(image + rs.roots[i])) return std::string("sigma(alpha) != -alpha");
        }
        return std::string();
    }));

    bool small_group = expected_weyl.count(label) > 0;
    if (enumerate_weyl || small_group) {
        out.push_back(run_check(suite, "weyl-order-" + label, [&] {
            auto group = weyl_group_enumerate(rs);
            auto it = expected_weyl.find(label);
            if (it != expected_weyl.end() && group.size() != it->second)
                return "got " + std::to_string(group.size()) + ", expected " +
                       std::to_string(it->second);
            return std::string();
        }));

        out.push_back(run_check(suite, "conjugation-law-" + label, [&] {
            auto group = weyl_group_enumerate(rs);
            std::size_t sampled = 0;
            for (const auto& w : group) {
                if (sampled++ > 8) break;
                for (const auto& alpha : rs.roots) {
                    GroupElem lhs = w * GroupElem::reflection(alpha) * w.inverse();
                    GroupElem rhs = GroupElem::reflection(w.apply(alpha));
                    if (!(lhs == rhs)) return "conjugation law fails at root " + vec_str(alpha);
                }
            }
            return std::string();
        }));
    } else {
        out.push_back(run_check(suite, "conjugation-law-" + label, [&] {
            // generator sample only: the full group is too large to enumerate
            for (auto i : rs.simple) {
                GroupElem w = GroupElem::reflection(rs.roots[i]);
                for (const auto& alpha : rs.roots) {
                    GroupElem lhs = w * GroupElem::reflection(alpha) * w.inverse();
                    GroupElem rhs = GroupElem::reflection(w.apply(alpha));
                    if (!(lhs == rhs)) return "conjugation law fails at root " + vec_str(alpha);
                }
            }
            return std::string();
        }));
    }

    return out;
}

std::vector<CheckResult> suite_dunkl_commute(const std::string& label, std::uint32_t max_degree) {
    const std::string suite = "dunkl-commute";
    std::vector<CheckResult> out;
    RootSystem rs = build_root_system(label);
    MultiplicityAssignment c = MultiplicityAssignment::symbolic(rs);
    VarTablePtr vars = ambient_vars(rs.ambient_dim);
    std::size_t d = rs.ambient_dim;
    std::vector<Poly> basis = monomial_basis(vars, max_degree);

    out.push_back(run_check(suite, "commute-" + label + "-deg" + std::to_string(max_degree), [&] {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                Vec ei(d, 0), ej(d, 0);
                ei[i] = 1;
                ej[j] = 1;
                for (const auto& mono : basis) {
                    Poly r = dunkl_apply(rs, c, ei, dunkl_apply(rs, c, ej, mono)) -
                             dunkl_apply(rs, c, ej, dunkl_apply(rs, c, ei, mono));
                    if (!r.is_zero())
                        return "[D" + std::to_string(i + 1) + ",D" + std::to_string(j + 1) +
                               "] on " + mono.str() + ": " + r.str();
                }
            }
        return std::string();
    }));

    out.push_back(run_check(suite, "degree-drop-" + label, [&] {
        Vec e1(d, 0);
        e1[0] = 1;
        for (const auto& mono : basis) {
            Poly r = dunkl_apply(rs, c, e1, mono);
            if (!r.is_zero() && r.degree() + 1 != mono.degree())
                return "degree " + std::to_string(r.degree()) + " from " + mono.str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, "c0-directional-derivative-" + label, [&] {
        MultiplicityAssignment zero = MultiplicityAssignment::zero(rs);
        Vec e1(d, 0);
        e1[0] = 1;
        for (const auto& mono : basis) {
            Poly lhs = dunkl_apply(rs, zero, e1, mono);
            Poly rhs = mono.partial_derivative(0);
            if (!(lhs == rhs)) return "on " + mono.str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, "equivariance-" + label, [&] {
        std::vector<Poly> sample;
        for (const auto& mono : basis)
            if (mono.degree() <= std::min<std::uint32_t>(max_degree, 4)) sample.push_back(mono);
        for (auto si : rs.simple) {
            GroupElem w = GroupElem::reflection(rs.roots[si]);
            for (std::size_t a = 0; a < d; ++a) {
                Vec ea(d, 0);
                ea[a] = 1;
                Vec wa = w.apply(ea);
                for (const auto& p : sample) {
                    Poly lhs = act_on_poly(w, dunkl_apply(rs, c, ea, p));
                    Poly rhs = dunkl_apply(rs, c, wa, act_on_poly(w, p));
                    if (!(lhs == rhs))
                        return "w = reflection " + vec_str(rs.roots[si]) + ", direction " +
                               std::to_string(a + 1) + ", p = " + p.str();
                }
            }
        }
        return std::string();
    }));

    out.push_back(run_check(suite, "rotation-fiber-cancellation-" + label, [&] {
        auto fibers = rotation_fibers(rs);
        std::uint32_t cap = std::min<std::uint32_t>(max_degree, 4);
        std::vector<Poly> sample;
        for (const auto& mono : basis)
            if (mono.degree() <= cap) sample.push_back(mono);
        for (const auto& [w, pairs] : fibers) {
            if (w.is_identity()) continue;
            for (const auto& p : sample) {
                Poly acc(vars);
                for (const auto& [ia, ib] : pairs) {
                    const Vec& alpha = rs.roots[ia];
                    const Vec& beta = rs.roots[ib];
                    Poly inner = reflection_difference_quotient(rs, vars, beta, p);
                    Poly outer = reflection_difference_quotient(rs, vars, alpha, inner);
                    ParamScalar weight = c.of_root(rs, ia) * c.of_root(rs, ib) *
                                         GaussianRational(dot(alpha, beta));
                    acc += outer * weight;
                }
                if (!acc.is_zero()) return "fiber of size " + std::to_string(pairs.size()) +
                                           " on " + p.str() + ": " + acc.str();
            }
        }
        return std::string();
    }));

    return out;
}

std::vector<CheckResult> suite_dunkl_restrict(const std::string& label) {
    const std::string suite = "dunkl-restrict";
    std::vector<CheckResult> out;
    RootSystem rs = build_root_system(label);
    MultiplicityAssignment c = MultiplicityAssignment::symbolic(rs);
    VarTablePtr vars = ambient_vars(rs.ambient_dim);

    out.push_back(run_check(suite, "operator-identity-" + label, [&] {
        DiffOp lhs = restricted_square(rs, c);
        DiffOp rhs = restricted_square_target(rs, c);
        return lhs == rhs ? std::string() : (lhs - rhs).str();
    }));

    out.push_back(run_check(suite, "two-path-invariants-" + label, [&] {
        std::size_t d = rs.ambient_dim;
        for (const Poly& inv : invariant_generators(rs, 4)) {
            if (!is_invariant(rs, inv)) throw InputNotInvariant("generator " + inv.str());
            // path 1: sum_j D_j^2 acting through the polynomial representation
            Poly path1(vars);
            for (std::size_t j = 0; j < d; ++j) {
                Vec ej(d, 0);
                ej[j] = 1;
                path1 += dunkl_apply(rs, c, ej, dunkl_apply(rs, c, ej, inv));
            }
            // path 2: the restricted operator applied directly
            Poly path2(vars);
            for (std::size_t j = 0; j < d; ++j)
                path2 += inv.partial_derivative(j).partial_derivative(j);
            for (auto idx : rs.positive) {
                const Vec& alpha = rs.roots[idx];
                Vec cv = coroot(alpha);
                Poly dir(vars);
                for (std::size_t j = 0; j < d; ++j) {
                    if (cv[j] == 0) continue;
                    dir += inv.partial_derivative(j) * ParamScalar(GaussianRational(cv[j]));
                }
                auto [form, scale] = root_form(rs, vars, alpha);
                Poly quot = exact_divide(dir, form);
                path2 -= quot * (c.of_root(rs, idx) *
                                 GaussianRational(dot(alpha, alpha) / scale));
            }
            if (!(path1 == path2))
                return "on invariant " + inv.str() + ": " + (path1 - path2).str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, "constants-die-" + label, [&] {
        Poly one = Poly::constant(vars, ParamScalar(1));
        Vec e1(rs.ambient_dim, 0);
        e1[0] = 1;
        Poly r = dunkl_apply(rs, c, e1, dunkl_apply(rs, c, e1, one));
        return r.is_zero() ? std::string() : r.str();
    }));

    out.push_back(run_check(suite, "rejects-noninvariant-" + label, [&] {
        Poly x1 = Poly::variable(vars, 0);
        return is_invariant(rs, x1) ? "x1 claimed invariant" : std::string();
    }));

    return out;
}

std::vector<CheckResult> suite_dunkl_gauge(const std::string& label) {
    const std::string suite = "dunkl-gauge";
    std::vector<CheckResult> out;
    RootSystem rs = build_root_system(label);
    MultiplicityAssignment c = MultiplicityAssignment::symbolic(rs);

    out.push_back(run_check(suite, "shifted-operator-identity-" + label, [&] {
        DiffOp lhs = gauge_shifted_square(rs, c);
        DiffOp rhs = spectral_target(rs, c);
        return lhs == rhs ? std::string() : (lhs - rhs).str();
    }));

    out.push_back(run_check(suite, "no-first-order-terms-" + label, [&] {
        DiffOp op = gauge_shifted_square(rs, c);
        for (const auto& [e, coeff] : op.terms())
            if (total_degree(e) == 1) return "first-order term " + coeff.str();
        return std::string();
    }));

    out.push_back(run_check(suite, "c0-identity-" + label, [&] {
        MultiplicityAssignment zero = MultiplicityAssignment::zero(rs);
        DiffOp lhs = gauge_shifted_square(rs, zero);
        DiffOp rhs = DiffOp::laplacian(ambient_vars(rs.ambient_dim));
        DiffOp target = restricted_square_target(rs, zero);
        if (!(lhs == rhs)) return (lhs - rhs).str();
        if (!(target == rhs)) return (target - rhs).str();
        return std::string();
    }));

    return out;
}

std::vector<CheckResult> suite_dunkl_classical(const std::string& label) {
    const std::string suite = "dunkl-classical";
    std::vector<CheckResult> out;
    RootSystem rs = build_root_system(label);
    MultiplicityAssignment c = MultiplicityAssignment::symbolic(rs);
    std::size_t d = rs.ambient_dim;

    std::vector<ClassicalDunklElem> dunkls;
    for (std::size_t j = 0; j < d; ++j) {
        Vec e(d, 0);
        e[j] = 1;
        dunkls.push_back(classical_dunkl(rs, c, e));
    }

    out.push_back(run_check(suite, "c0-momentum-" + label, [&] {
        MultiplicityAssignment zero = MultiplicityAssignment::zero(rs);
        Vec e1(d, 0);
        e1[0] = 1;
        ClassicalDunklElem elem = classical_dunkl(rs, zero, e1);
        if (elem.comps().size() != 1) return std::string("extra components at c=0");
        const auto& [g, f] = *elem.comps().begin();
        if (!g.is_identity()) return std::string("non-identity component at c=0");
        VarTablePtr vars = f.vars();
        return f == RatFunc(Poly::variable(vars, d)) ? std::string() : f.str();
    }));

    out.push_back(run_check(suite, "poisson-involution-" + label, [&] {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                ClassicalDunklElem br = classical_poisson_bracket(dunkls[i], dunkls[j]);
                if (!br.is_zero())
                    return "{D" + std::to_string(i + 1) + ",D" + std::to_string(j + 1) +
                           "}: " + br.str();
            }
        return std::string();
    }));

    out.push_back(run_check(suite, "equivariance-" + label, [&] {
        for (auto si : rs.simple) {
            GroupElem sigma = GroupElem::reflection(rs.roots[si]);
            GroupElem block = sigma;  // acts blockwise on (x, p)
            for (std::size_t a = 0; a < d; ++a) {
                Vec ea(d, 0);
                ea[a] = 1;
                ClassicalDunklElem lhs_elem, rhs_elem;
                // w D_a: multiply on the left by the pure group element w
                ClassicalDunklElem w_elem(dunkls[a].vars());
                w_elem.add_component(block,
                                     RatFunc::constant(dunkls[a].vars(), ParamScalar(1)));
                lhs_elem = w_elem * dunkls[a];
                rhs_elem = classical_dunkl(rs, c, sigma.apply(ea)) * w_elem;
                if (!(lhs_elem == rhs_elem))
                    return "direction " + std::to_string(a + 1) + " at reflection " +
                           vec_str(rs.roots[si]);
            }
        }
        return std::string();
    }));

    out.push_back(run_check(suite, "restriction-identity-" + label, [&] {
        RatFunc lhs = classical_restricted_square(rs, c);
        RatFunc rhs = classical_restricted_target(rs, c);
        return lhs == rhs ? std::string() : (lhs - rhs).str();
    }));

    out.push_back(run_check(suite, "gauge-substitution-" + label, [&] {
        RatFunc gauged = theta_substitute(rs, c, classical_restricted_target(rs, c));
        RatFunc target = classical_spectral_target(rs, c);
        if (!(gauged == target)) return (gauged - target).str();
        // momentum structure: degree exactly 2, no momentum-linear terms
        for (const auto& [e, coeff] : gauged.num().terms()) {
            std::uint64_t pdeg = 0;
            for (std::size_t j = 0; j < d; ++j) pdeg += e[d + j];
            if (pdeg == 1) return std::string("momentum-linear term survives");
            if (pdeg > 2) return std::string("momentum degree exceeds 2");
        }
        return std::string();
    }));

    out.push_back(run_check(suite, "theta-multiplicative-" + label, [&] {
        VarTablePtr vars = cotangent_vars(d);
        std::vector<RatFunc> samples = {
            RatFunc(Poly::variable(vars, d)),
            RatFunc(Poly::variable(vars, d) * Poly::variable(vars, std::min(d + 1, 2 * d - 1))),
            RatFunc(Poly::variable(vars, 0) * Poly::variable(vars, d)),
            RatFunc(Poly::variable(vars, 0, 2)) + RatFunc(Poly::variable(vars, d, 2)),
        };
        for (const auto& f : samples)
            for (const auto& g : samples) {
                RatFunc lhs = theta_substitute(rs, c, f * g);
                RatFunc rhs = theta_substitute(rs, c, f) * theta_substitute(rs, c, g);
                if (!(lhs == rhs)) return "on " + f.str() + " and " + g.str();
            }
        return std::string();
    }));

    return out;
}

std::vector<CheckResult> suite_simulate(const SimSuiteOptions& options) {
    const std::string suite = "simulate";
    std::vector<CheckResult> out;

    Trajectory traj;
    out.push_back(run_check(suite, "integrate", [&] {
        traj = integrate(options.config);
        if (!options.csv_path.empty()) {
            std::ofstream csv(options.csv_path);
            if (!csv) return "cannot open " + options.csv_path;
            write_trajectory_csv(traj, csv);
        }
        return std::string();
    }));
    if (traj.states.empty()) return out;

    out.push_back(run_check(suite, "invariant-drift", [&] {
        DriftReport rep = drift_report(traj, options.drift_tolerance);
        if (!rep.pass) {
            std::ostringstream msg;
            msg << "max relative drift " << rep.max_drift << " exceeds " << rep.tolerance;
            return msg.str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, "momentum-conservation", [&] {
        double p0 = 0, worst = 0;
        for (double v : traj.states.front().p) p0 += v;
        for (const auto& s : traj.states) {
            double pt = 0;
            for (double v : s.p) pt += v;
            worst = std::max(worst, std::fabs(pt - p0));
        }
        if (worst > 1e-12) {
            std::ostringstream msg;
            msg << "total momentum drift " << worst;
            return msg.str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, "rk4-observed-order", [&] {
        // coarse pair keeps truncation error well above roundoff
        SimConfig coarse = options.config;
        coarse.integrator = Integrator::rk4;
        coarse.dt = 2e-2;
        coarse.t_end = 2.0;
        coarse.diagnostics_stride = 5;
        SimConfig fine = coarse;
        fine.dt = 1e-2;
        double drift_coarse = drift_report(integrate(coarse), 1.0).invariant_drift[1];
        double drift_fine = drift_report(integrate(fine), 1.0).invariant_drift[1];
        if (drift_fine <= 0 || drift_coarse <= 0) return std::string("degenerate drifts");
        double order = std::log2(drift_coarse / drift_fine);
        if (order < options.min_observed_order) {
            std::ostringstream msg;
            msg << "observed order " << order << " below " << options.min_observed_order;
            return msg.str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, "time-reversal", [&] {
        SimConfig back = options.config;
        back.initial = traj.states.back();
        for (auto& v : back.initial.p) v = -v;
        back.initial.t = 0;
        Trajectory ret = integrate(back);
        const SimState& fin = ret.states.back();
        const SimState& start = options.config.initial;
        double worst = 0;
        for (std::size_t j = 0; j < start.q.size(); ++j) {
            worst = std::max(worst, std::fabs(fin.q[j] - start.q[j]));
            worst = std::max(worst, std::fabs(fin.p[j] + start.p[j]));
        }
        if (worst > options.reversal_tolerance) {
            std::ostringstream msg;
            msg << "return error " << worst << " exceeds " << options.reversal_tolerance;
            return msg.str();
        }
        return std::string();
    }));

    out.push_back(run_check(suite, "free-motion-k0", [&] {
        SimConfig free_cfg = options.config;
        free_cfg.k = 0.0;
        free_cfg.t_end = 1.0;
        Trajectory ft = integrate(free_cfg);
        const SimState& fin = ft.states.back();
        const SimState& init = free_cfg.initial;
        double worst = 0;
        for (std::size_t j = 0; j < init.q.size(); ++j) {
            double expect = init.q[j] + init.p[j] * fin.t;
            worst = std::max(worst, std::fabs(fin.q[j] - expect));
            worst = std::max(worst, std::fabs(fin.p[j] - init.p[j]));
        }
        if (worst > 1e-12) {
            std::ostringstream msg;
            msg << "free motion deviation " << worst;
            return msg.str();
        }
        return std::string();
    }));

    return out;
}

std::vector<CheckResult> suite_all(bool slow) {
    std::vector<CheckResult> out;
    auto append = [&out](std::vector<CheckResult> v) {
        for (auto& r : v) out.push_back(std::move(r));
    };

    for (std::size_t n : {2, 3, 4}) append(suite_classical_lax(n));
    append(suite_involution(3));
    if (slow) append(suite_involution(4));
    append(suite_quantum_lax(2));
    append(suite_quantum_lax(3));
    if (slow) append(suite_quantum_lax(4));
    append(suite_quantum_commute(3));
    for (const char* label : {"A2", "A3", "B2", "G2", "F4"}) append(suite_roots(label));
    for (const char* label : {"A2", "A3", "B2", "G2"}) append(suite_dunkl_commute(label, 5));
    for (const char* label : {"A1", "A2", "B2"}) {
        append(suite_dunkl_restrict(label));
        append(suite_dunkl_gauge(label));
    }
    for (const char* label : {"A2", "A3", "B2", "G2"}) append(suite_dunkl_classical(label));

    SimSuiteOptions sim;
    sim.config.initial = reference_initial_state();
    append(suite_simulate(sim));
    return out;
}

} // namespace cmlax
