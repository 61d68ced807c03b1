// Acceptance gate: every criterion below prints one pass/fail line with its
// wall time and the binary exits nonzero if any of them fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "cmlax/dunkl_classical.hpp"
#include "cmlax/lax_classical.hpp"
#include "cmlax/lax_quantum.hpp"
#include "cmlax/suites.hpp"

using namespace cmlax;

namespace {

struct Criterion {
    std::string name;
    double budget_seconds;
    std::function<std::string()> body;  // empty string = pass
};

bool run_all(const std::vector<Criterion>& criteria) {
    bool ok = true;
    int index = 1;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        try {
            detail = c.body();
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (detail.empty() && seconds > c.budget_seconds)
            detail = "time budget exceeded (" + std::to_string(seconds) + "s > " +
                     std::to_string(c.budget_seconds) + "s)";
        bool pass = detail.empty();
        ok = ok && pass;
        std::printf("[%s] criterion %2d: %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", index,
                    c.name.c_str(), seconds, pass ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
        ++index;
    }
    return ok;
}

std::string failures_of(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.status == "fail")
            return r.suite + "/" + r.check_id + ": " + r.residual_witness;
    return {};
}

} // namespace

int main() {
    std::vector<Criterion> criteria;

    criteria.push_back({"classical Lax identity, n=2,3,4, symbolic k", 30.0, [] {
        for (std::size_t n : {2, 3, 4}) {
            auto t0 = std::chrono::steady_clock::now();
            PhaseMatrix r = classical_lax_residual(n);
            double dt =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (!r.is_zero()) return "nonzero residual at n=" + std::to_string(n);
            if (dt > 10.0) return "n=" + std::to_string(n) + " took " + std::to_string(dt) + "s";
        }
        return std::string();
    }});

    criteria.push_back({"classical integrals: closed forms and pairwise involution, n=3", 30.0, [] {
        return failures_of(suite_involution(3));
    }});

    criteria.push_back({"quantum Lax identity, n=3, g=k(k+1) symbolic", 60.0, [] {
        OpMatrix r = quantum_lax_residual(3);
        return r.is_zero() ? std::string() : std::string("nonzero residual");
    }});

    criteria.push_back({"quantum integrals: J1, J2=H, pairwise commutators, n=3", 120.0, [] {
        auto lax = build_quantum_lax(3);
        DiffOp j1 = quantum_integral(lax, 1);
        DiffOp expect(lax.vars);
        for (int r = 0; r < 3; ++r) expect += DiffOp::momentum(lax.vars, r);
        if (!(j1 == expect)) return std::string("J1 != sum of momenta");
        if (!(quantum_integral(lax, 2) == quantum_hamiltonian(3)))
            return std::string("J2 != H");
        DiffOp j2 = quantum_integral(lax, 2), j3 = quantum_integral(lax, 3);
        if (!commutator(j1, j2).is_zero()) return std::string("[J1,J2] != 0");
        if (!commutator(j1, j3).is_zero()) return std::string("[J1,J3] != 0");
        if (!commutator(j2, j3).is_zero()) return std::string("[J2,J3] != 0");
        return std::string();
    }});

    criteria.push_back({"derivative-rule residual vanishes on the rational corpus", 5.0, [] {
        auto lax = build_quantum_lax(3);
        const VarTablePtr& vars = lax.vars;
        std::vector<mpq_class> d12(vars->size(), 0), d23(vars->size(), 0);
        d12[0] = 1;
        d12[1] = -1;
        d23[1] = 1;
        d23[2] = -1;
        std::vector<RatFunc> corpus = {
            RatFunc(Poly::variable(vars, 0, 2)),
            RatFunc::constant(vars, ParamScalar(2)),
            linear_power(vars, d12, -1, ParamScalar(1)),
            linear_power(vars, d12, -2, ParamScalar::k()),
            linear_power(vars, d23, -3, ParamScalar(1)),
            RatFunc(Poly::variable(vars, 0) * Poly::variable(vars, 2)) +
                linear_power(vars, d23, -1, ParamScalar(1)),
        };
        for (const auto& f : corpus)
            for (std::size_t i = 0; i < 3; ++i)
                if (!key_lemma_residual(f, i).is_zero())
                    return "nonzero residual for f = " + f.str();
        return std::string();
    }});

    criteria.push_back({"root counts and axioms: A2,B2,B3,D4,G2,F4,E6,E7,E8", 30.0, [] {
        struct Row {
            const char* label;
            std::size_t count;
        };
        for (Row row : std::initializer_list<Row>{{"A2", 6},
                                                  {"B2", 8},
                                                  {"B3", 18},
                                                  {"D4", 24},
                                                  {"G2", 12},
                                                  {"F4", 48},
                                                  {"E6", 72},
                                                  {"E7", 126},
                                                  {"E8", 240}}) {
            RootSystem rs = build_root_system(row.label);
            if (rs.roots.size() != row.count)
                return std::string(row.label) + ": " + std::to_string(rs.roots.size()) + " roots";
            std::string err = check_axioms(rs);
            if (!err.empty()) return std::string(row.label) + ": " + err;
            err = check_crystallographic(rs);
            if (!err.empty()) return std::string(row.label) + ": " + err;
        }
        return std::string();
    }});

    criteria.push_back({"coxeter orders lie in {2,3,4,6} for all non-parallel pairs", 60.0, [] {
        for (const char* label : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6", "E7", "E8"}) {
            RootSystem rs = build_root_system(label);
            for (const auto& a : rs.roots)
                for (const auto& b : rs.roots) {
                    int m = coxeter_order(a, b);
                    bool parallel = is_zero(a - b) || is_zero(a + b);
                    if (parallel && m != 1)
                        return std::string(label) + ": parallel pair order " + std::to_string(m);
                    if (!parallel && m != 2 && m != 3 && m != 4 && m != 6)
                        return std::string(label) + ": order " + std::to_string(m);
                }
        }
        RootSystem g2 = build_root_system("G2");
        if (coxeter_matrix(g2)[0][1] != 6) return std::string("G2 simple pair order != 6");
        if (coxeter_order(Vec{0, 1, -1}, Vec{0, 0, 1}) != 4)
            return std::string("B-type pair order != 4");
        return std::string();
    }});

    criteria.push_back({"dunkl commutativity, degree <= 5: A2, A3, B2, G2, symbolic", 120.0, [] {
        for (const char* label : {"A2", "A3", "B2", "G2"}) {
            RootSystem rs = build_root_system(label);
            MultiplicityAssignment c = MultiplicityAssignment::symbolic(rs);
            VarTablePtr vars = ambient_vars(rs.ambient_dim);
            std::size_t d = rs.ambient_dim;
            for (const auto& mono : monomial_basis(vars, 5))
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = i + 1; j < d; ++j) {
                        Vec ei(d, 0), ej(d, 0);
                        ei[i] = 1;
                        ej[j] = 1;
                        Poly r = dunkl_apply(rs, c, ei, dunkl_apply(rs, c, ej, mono)) -
                                 dunkl_apply(rs, c, ej, dunkl_apply(rs, c, ei, mono));
                        if (!r.is_zero())
                            return std::string(label) + ": [D,D] != 0 on " + mono.str();
                    }
        }
        return std::string();
    }});

    criteria.push_back({"restriction two-path identity and gauge form: A1, A2, B2", 60.0, [] {
        for (const char* label : {"A1", "A2", "B2"}) {
            std::string err = failures_of(suite_dunkl_restrict(label));
            if (!err.empty()) return err;
            err = failures_of(suite_dunkl_gauge(label));
            if (!err.empty()) return err;
        }
        return std::string();
    }});

    criteria.push_back({"classical dunkl involution and gauge: A2, A3, B2, G2", 60.0, [] {
        for (const char* label : {"A2", "A3", "B2", "G2"}) {
            std::string err = failures_of(suite_dunkl_classical(label));
            if (!err.empty()) return err;
        }
        return std::string();
    }});

    criteria.push_back(
        {"simulator: drift < 1e-8, order >= 3.8, reversal < 1e-6 (n=3, k=1, dt=1e-3)", 30.0, [] {
             SimSuiteOptions options;
             options.config.initial = reference_initial_state();
             options.config.n = 3;
             options.config.k = 1.0;
             options.config.dt = 1e-3;
             options.config.t_end = 10.0;
             options.drift_tolerance = 1e-8;
             options.reversal_tolerance = 1e-6;
             options.min_observed_order = 3.8;
             return failures_of(suite_simulate(options));
         }});

    criteria.push_back({"negative controls: a sign flip in M breaks both Lax suites", 120.0, [] {
        auto classical = suite_classical_lax(3, true);
        bool classical_failed = false;
        for (const auto& r : classical)
            if (r.check_id == "lax-residual-n3") {
                classical_failed = r.status == "fail" && !r.residual_witness.empty();
            }
        if (!classical_failed)
            return std::string("classical suite did not fail with a witness");
        auto quantum = suite_quantum_lax(3, true);
        for (const auto& r : quantum)
            if (r.check_id == "lax-residual-n3")
                return r.status == "fail" && !r.residual_witness.empty()
                           ? std::string()
                           : std::string("quantum suite did not fail with a witness");
        return std::string("quantum residual check missing");
    }});

    bool ok = run_all(criteria);
    std::printf("%s\n", ok ? "ACCEPTANCE: all criteria passed" : "ACCEPTANCE: FAILURES PRESENT");
    return ok ? 0 : 1;
}
