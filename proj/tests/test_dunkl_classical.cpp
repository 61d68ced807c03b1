#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cmlax/dunkl_classical.hpp"
#include "cmlax/suites.hpp"

using namespace cmlax;

namespace {

RatFunc x_inv(const VarTablePtr& vars, std::size_t r, std::size_t s, int power,
              ParamScalar c = ParamScalar(1)) {
    std::vector<mpq_class> coeffs(vars->size(), 0);
    coeffs[r] = 1;
    coeffs[s] = -1;
    return linear_power(vars, coeffs, power, c);
}

} // namespace

TEST_CASE("classical dunkl components for the rank-one system") {
    RootSystem a1 = build_root_system("A1");
    auto c = MultiplicityAssignment::symbolic(a1);
    ClassicalDunklElem d = classical_dunkl(a1, c, Vec{1, 0});
    auto vars = d.vars();
    ParamScalar cc = ParamScalar::multiplicity(0);

    auto id = d.comps().find(GroupElem::identity(2));
    REQUIRE(id != d.comps().end());
    RatFunc expect_id = RatFunc(Poly::variable(vars, 2)) - x_inv(vars, 0, 1, -1, cc);
    CHECK(id->second == expect_id);

    auto refl = d.comps().find(GroupElem::reflection(Vec{1, -1}));
    REQUIRE(refl != d.comps().end());
    CHECK(refl->second == x_inv(vars, 0, 1, -1, cc));

    // c = 0 collapses to the bare momentum
    auto zero = MultiplicityAssignment::zero(a1);
    ClassicalDunklElem free_elem = classical_dunkl(a1, zero, Vec{1, 0});
    CHECK(free_elem.comps().size() == 1);
    CHECK(free_elem.comps().begin()->second == RatFunc(Poly::variable(vars, 2)));
}

TEST_CASE("poisson involution componentwise") {
    for (const char* label : {"A2", "B2"}) {
        RootSystem rs = build_root_system(label);
        auto c = MultiplicityAssignment::symbolic(rs);
        std::size_t d = rs.ambient_dim;
        std::vector<ClassicalDunklElem> ops;
        for (std::size_t j = 0; j < d; ++j) {
            Vec e(d, 0);
            e[j] = 1;
            ops.push_back(classical_dunkl(rs, c, e));
        }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) {
                INFO(label << " pair " << i << "," << j);
                CHECK(classical_poisson_bracket(ops[i], ops[j]).is_zero());
            }
    }
}

TEST_CASE("equivariance under simple reflections") {
    RootSystem a2 = build_root_system("A2");
    auto c = MultiplicityAssignment::symbolic(a2);
    std::size_t d = a2.ambient_dim;
    for (auto si : a2.simple) {
        GroupElem sigma = GroupElem::reflection(a2.roots[si]);
        for (std::size_t a = 0; a < d; ++a) {
            Vec ea(d, 0);
            ea[a] = 1;
            ClassicalDunklElem da = classical_dunkl(a2, c, ea);
            ClassicalDunklElem w_elem(da.vars());
            w_elem.add_component(sigma, RatFunc::constant(da.vars(), ParamScalar(1)));
            CHECK(w_elem * da == classical_dunkl(a2, c, sigma.apply(ea)) * w_elem);
        }
    }
}

TEST_CASE("restriction and gauge identities") {
    for (const char* label : {"A1", "A2", "B2"}) {
        RootSystem rs = build_root_system(label);
        auto c = MultiplicityAssignment::symbolic(rs);
        INFO(label);
        RatFunc lhs = classical_restricted_square(rs, c);
        RatFunc target = classical_restricted_target(rs, c);
        CHECK(lhs == target);
        CHECK(theta_substitute(rs, c, target) == classical_spectral_target(rs, c));
    }
}

TEST_CASE("rank-one spectral form is p^2-kinetic minus 2c^2 over the squared difference") {
    RootSystem a1 = build_root_system("A1");
    auto c = MultiplicityAssignment::symbolic(a1);
    RatFunc l_cl = classical_spectral_target(a1, c);
    auto vars = l_cl.vars();
    ParamScalar cc = ParamScalar::multiplicity(0);
    RatFunc expect = RatFunc(Poly::variable(vars, 2, 2)) + RatFunc(Poly::variable(vars, 3, 2)) -
                     x_inv(vars, 0, 1, -2, cc * cc * GaussianRational(2));
    CHECK(l_cl == expect);
}

TEST_CASE("A-type classical potential matches the pair-difference form") {
    RootSystem a2 = build_root_system("A2");
    auto c = MultiplicityAssignment::symbolic(a2);
    RatFunc l_cl = classical_spectral_target(a2, c);
    auto vars = l_cl.vars();
    ParamScalar cc = ParamScalar::multiplicity(0);
    RatFunc expect{Poly(vars)};
    for (std::size_t j = 0; j < 3; ++j) expect += RatFunc(Poly::variable(vars, 3 + j, 2));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
            expect -= x_inv(vars, i, j, -2, cc * cc * GaussianRational(2));
    CHECK(l_cl == expect);
}

TEST_CASE("free multiplicities collapse both operators to the kinetic term") {
    RootSystem b2 = build_root_system("B2");
    auto zero = MultiplicityAssignment::zero(b2);
    auto vars = cotangent_vars(2);
    RatFunc kinetic = RatFunc(Poly::variable(vars, 2, 2)) + RatFunc(Poly::variable(vars, 3, 2));
    CHECK(classical_restricted_target(b2, zero) == kinetic);
    CHECK(classical_spectral_target(b2, zero) == kinetic);
    CHECK(theta_substitute(b2, zero, kinetic) == kinetic);
}

TEST_CASE("theta is multiplicative and fixes positions") {
    RootSystem a2 = build_root_system("A2");
    auto c = MultiplicityAssignment::symbolic(a2);
    auto vars = cotangent_vars(3);
    RatFunc x1{Poly::variable(vars, 0)};
    CHECK(theta_substitute(a2, c, x1) == x1);

    RatFunc p1{Poly::variable(vars, 3)};
    RatFunc p2{Poly::variable(vars, 4)};
    CHECK(theta_substitute(a2, c, p1 * p2) ==
          theta_substitute(a2, c, p1) * theta_substitute(a2, c, p2));
    CHECK(theta_substitute(a2, c, x1 * p1) == x1 * theta_substitute(a2, c, p1));
}

TEST_CASE("full classical suite passes") {
    for (const char* label : {"A2", "B2"}) {
        for (auto& r : suite_dunkl_classical(label)) {
            INFO(label << " " << r.check_id << ": " << r.residual_witness);
            CHECK(r.status == "pass");
        }
    }
}
