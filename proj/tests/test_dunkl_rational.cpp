#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmlax/dunkl.hpp"
#include "cmlax/suites.hpp"

using namespace cmlax;

namespace {

RatFunc x_inv_power(const VarTablePtr& vars, std::size_t r, std::size_t s, int power,
                    ParamScalar c = ParamScalar(1)) {
    std::vector<mpq_class> coeffs(vars->size(), 0);
    coeffs[r] = 1;
    coeffs[s] = -1;
    return linear_power(vars, coeffs, power, c);
}

} // namespace

TEST_CASE("dunkl operator on the rank-one system") {
    RootSystem a1 = build_root_system("A1");
    auto c = MultiplicityAssignment::symbolic(a1);
    auto vars = ambient_vars(2);
    Poly x1 = Poly::variable(vars, 0);

    CHECK(dunkl_apply(a1, c, Vec{1, 0}, Poly::constant(vars, ParamScalar(9))).is_zero());

    Poly out = dunkl_apply(a1, c, Vec{1, 0}, x1);
    CHECK(out == Poly::constant(vars, ParamScalar(1) - ParamScalar::multiplicity(0)));

    // c = 0 reduces to the directional derivative
    auto zero = MultiplicityAssignment::zero(a1);
    Poly p = x1 * x1 * Poly::variable(vars, 1);
    CHECK(dunkl_apply(a1, zero, Vec{1, 0}, p) == p.partial_derivative(0));
}

TEST_CASE("degree drops by exactly one") {
    RootSystem b2 = build_root_system("B2");
    auto c = MultiplicityAssignment::symbolic(b2);
    auto vars = ambient_vars(2);
    Vec e1{1, 0};
    for (const auto& m : monomial_basis(vars, 5)) {
        Poly r = dunkl_apply(b2, c, e1, m);
        if (!r.is_zero()) CHECK(r.degree() + 1 == m.degree());
    }
}

TEST_CASE("dunkl element splits into identity and reflection components") {
    RootSystem a1 = build_root_system("A1");
    auto c = MultiplicityAssignment::symbolic(a1);
    DunklElem d = dunkl_element(a1, c, Vec{1, 0});
    CHECK(d.comps().size() == 2);

    auto vars = d.vars();
    GroupElem sigma = GroupElem::reflection(Vec{1, -1});
    auto it = d.comps().find(sigma);
    REQUIRE(it != d.comps().end());
    DiffOp expect_sigma =
        DiffOp::mul_op(x_inv_power(vars, 0, 1, -1, ParamScalar::multiplicity(0)));
    CHECK(it->second == expect_sigma);

    auto id = d.comps().find(GroupElem::identity(2));
    REQUIRE(id != d.comps().end());
    DiffOp expect_id = DiffOp::derivative(vars, 0) -
                       DiffOp::mul_op(x_inv_power(vars, 0, 1, -1, ParamScalar::multiplicity(0)));
    CHECK(id->second == expect_id);
}

TEST_CASE("commutativity on the monomial basis with symbolic multiplicities") {
    for (const char* label : {"A2", "B2"}) {
        RootSystem rs = build_root_system(label);
        auto c = MultiplicityAssignment::symbolic(rs);
        auto vars = ambient_vars(rs.ambient_dim);
        std::size_t d = rs.ambient_dim;
        for (const auto& m : monomial_basis(vars, 4)) {
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = i + 1; j < d; ++j) {
                    Vec ei(d, 0), ej(d, 0);
                    ei[i] = 1;
                    ej[j] = 1;
                    Poly r = dunkl_apply(rs, c, ei, dunkl_apply(rs, c, ej, m)) -
                             dunkl_apply(rs, c, ej, dunkl_apply(rs, c, ei, m));
                    INFO(label << " on " << m.str());
                    CHECK(r.is_zero());
                }
        }
    }
}

TEST_CASE("equivariance of the polynomial action") {
    RootSystem a2 = build_root_system("A2");
    auto c = MultiplicityAssignment::symbolic(a2);
    auto vars = ambient_vars(3);
    GroupElem w = GroupElem::reflection(Vec{1, -1, 0});
    Vec e1{1, 0, 0};
    Vec we1 = w.apply(e1);

    GroupElem id = GroupElem::identity(3);
    for (const auto& p : monomial_basis(vars, 3)) {
        CHECK(act_on_poly(id, p) == p);
        Poly lhs = act_on_poly(w, dunkl_apply(a2, c, e1, p));
        Poly rhs = dunkl_apply(a2, c, we1, act_on_poly(w, p));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("rotation fiber sums annihilate polynomials") {
    for (const char* label : {"A2", "B2"}) {
        RootSystem rs = build_root_system(label);
        auto c = MultiplicityAssignment::symbolic(rs);
        auto vars = ambient_vars(rs.ambient_dim);
        auto fibers = rotation_fibers(rs);
        // every product of two distinct positive reflections is a nontrivial
        // rotation here, and fibers come in groups
        for (const auto& [w, pairs] : fibers) {
            CHECK_FALSE(w.is_identity());
            CHECK(pairs.size() >= 2);
        }
        for (const auto& p : monomial_basis(vars, 4)) {
            for (const auto& [w, pairs] : fibers) {
                Poly acc(vars);
                for (const auto& [ia, ib] : pairs) {
                    const Vec& alpha = rs.roots[ia];
                    const Vec& beta = rs.roots[ib];
                    Poly inner = reflection_difference_quotient(rs, vars, beta, p);
                    Poly outer = reflection_difference_quotient(rs, vars, alpha, inner);
                    acc += outer * (c.of_root(rs, ia) * c.of_root(rs, ib) *
                                    GaussianRational(dot(alpha, beta)));
                }
                INFO(label << " on " << p.str());
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("empty fiber sums to zero") {
    RootSystem a2 = build_root_system("A2");
    auto fibers = rotation_fibers(a2);
    // a rotation that is not a product of two distinct positive reflections
    GroupElem id = GroupElem::identity(3);
    CHECK(fibers.find(id) == fibers.end());
}

TEST_CASE("restriction identity in the group algebra and on invariants") {
    for (const char* label : {"A1", "A2", "B2"}) {
        RootSystem rs = build_root_system(label);
        auto c = MultiplicityAssignment::symbolic(rs);
        INFO(label);
        CHECK(restricted_square(rs, c) == restricted_square_target(rs, c));
    }
    for (auto& r : suite_dunkl_restrict("A2")) {
        INFO(r.check_id << ": " << r.residual_witness);
        CHECK(r.status == "pass");
    }
}

TEST_CASE("invariant generators are invariant; coordinates are not") {
    RootSystem a2 = build_root_system("A2");
    for (const auto& g : invariant_generators(a2, 4)) CHECK(is_invariant(a2, g));
    auto vars = ambient_vars(3);
    CHECK_FALSE(is_invariant(a2, Poly::variable(vars, 0)));

    RootSystem b2 = build_root_system("B2");
    auto gens = invariant_generators(b2, 4);
    CHECK(gens.size() == 2);  // even power sums of degree 2 and 4
    for (const auto& g : gens) CHECK(is_invariant(b2, g));
}

TEST_CASE("gauge-shifted operator equals the inverse-square form") {
    // rank one: Delta - 2c(c+1)/(x1-x2)^2, frozen from the single-root
    // computation
    RootSystem a1 = build_root_system("A1");
    auto c = MultiplicityAssignment::symbolic(a1);
    DiffOp shifted = gauge_shifted_square(a1, c);
    auto vars = shifted.vars();
    ParamScalar cc = ParamScalar::multiplicity(0);
    DiffOp expect = DiffOp::laplacian(vars) -
                    DiffOp::mul_op(x_inv_power(vars, 0, 1, -2,
                                               (cc * cc + cc) * GaussianRational(2)));
    CHECK(shifted == expect);
    CHECK(shifted == spectral_target(a1, c));

    for (const char* label : {"A2", "B2"}) {
        RootSystem rs = build_root_system(label);
        auto sym = MultiplicityAssignment::symbolic(rs);
        INFO(label);
        CHECK(gauge_shifted_square(rs, sym) == spectral_target(rs, sym));
        auto zero = MultiplicityAssignment::zero(rs);
        CHECK(gauge_shifted_square(rs, zero) ==
              DiffOp::laplacian(ambient_vars(rs.ambient_dim)));
    }
}

TEST_CASE("A-type potential carries c(c+1) on every pair difference") {
    // the rank-(n-1) operator on R^n: potential sum_{i<j} 2c(c+1)/(x_i-x_j)^2
    RootSystem a2 = build_root_system("A2");
    auto c = MultiplicityAssignment::symbolic(a2);
    DiffOp op = gauge_shifted_square(a2, c);
    auto vars = op.vars();
    ParamScalar cc = ParamScalar::multiplicity(0);
    ParamScalar strength = (cc * cc + cc) * GaussianRational(2);
    DiffOp expect = DiffOp::laplacian(vars);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            expect -= DiffOp::mul_op(x_inv_power(vars, i, j, -2, strength));
    CHECK(op == expect);
}
