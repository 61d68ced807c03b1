#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cmlax/roots.hpp"
#include "cmlax/suites.hpp"

using namespace cmlax;

TEST_CASE("root counts match the closed forms") {
    struct Row {
        const char* label;
        std::size_t count;
    };
    for (Row row : std::initializer_list<Row>{{"A1", 2},
                                              {"A2", 6},
                                              {"A3", 12},
                                              {"B2", 8},
                                              {"B3", 18},
                                              {"C2", 8},
                                              {"C3", 18},
                                              {"D4", 24},
                                              {"D5", 40},
                                              {"G2", 12},
                                              {"F4", 48},
                                              {"E6", 72},
                                              {"E7", 126},
                                              {"E8", 240}}) {
        RootSystem rs = build_root_system(row.label);
        INFO(row.label);
        CHECK(rs.roots.size() == row.count);
        CHECK(rs.positive.size() * 2 == rs.roots.size());
        CHECK(rs.simple.size() == std::size_t(rs.rank));
    }
    CHECK_THROWS_AS(build_root_system("H3"), InvalidArgument);
    CHECK_THROWS_AS(build_root_system("D3"), InvalidArgument);
    CHECK_THROWS_AS(build_root_system("E9"), InvalidArgument);
    CHECK_THROWS_AS(build_root_system("X"), InvalidArgument);
}

TEST_CASE("reflections") {
    // type A reflection swaps the two basis vectors
    Vec alpha{1, -1, 0};
    GroupElem s = GroupElem::reflection(alpha);
    CHECK(s.apply(Vec{1, 0, 0}) == Vec{0, 1, 0});
    CHECK(s.apply(Vec{0, 0, 1}) == Vec{0, 0, 1});
    CHECK(s.apply(alpha) == Vec{-1, 1, 0});
    CHECK((s * s).is_identity());
    CHECK_THROWS_AS(GroupElem::reflection(Vec{0, 0, 0}), InvalidArgument);
}

TEST_CASE("coroot pairing") {
    Vec alpha{1, -1, 0};
    CHECK(dot(alpha, coroot(alpha)) == 2);
    Vec beta{0, 1, -1};
    CHECK(dot(beta, coroot(alpha)) == -1);
}

TEST_CASE("crystallographic condition by enumeration") {
    for (const char* label : {"A2", "G2", "B3", "F4", "E6"}) {
        RootSystem rs = build_root_system(label);
        INFO(label);
        CHECK(check_crystallographic(rs).empty());
    }
}

TEST_CASE("axioms catch corrupted systems") {
    RootSystem rs = build_root_system("A2");
    rs.roots.push_back(Vec{2, -2, 0});  // scalar multiple of a root
    CHECK_FALSE(check_axioms(rs).empty());

    RootSystem rs2 = build_root_system("A2");
    rs2.roots.pop_back();
    CHECK_FALSE(check_axioms(rs2).empty());
}

TEST_CASE("coxeter orders") {
    RootSystem g2 = build_root_system("G2");
    auto cm = coxeter_matrix(g2);
    CHECK(cm[0][1] == 6);

    CHECK(coxeter_order(Vec{0, 1, -1}, Vec{0, 0, 1}) == 4);  // B-type pair
    CHECK(coxeter_order(Vec{1, -1, 0}, Vec{0, 0, 1}) == 2);  // orthogonal pair
    CHECK(coxeter_order(Vec{1, -1, 0}, Vec{1, -1, 0}) == 1);
    CHECK(coxeter_order(Vec{1, -1, 0}, Vec{-1, 1, 0}) == 1);

    // order cap flags non-crystallographic pairs (72 degrees apart)
    Vec a{1, 0};
    // cos(2pi/5) is irrational; approximate by a rational non-crystallographic
    // pairing instead: <a,b> with 4cos^2 = 5/4 has infinite order generically
    Vec b{mpq_class(1, 2), mpq_class(1)};
    CHECK_THROWS_AS(coxeter_order(a, b, 60), CapExceeded);

    for (const char* label : {"A2", "B2", "G2", "D4"}) {
        RootSystem rs = build_root_system(label);
        for (const auto& x : rs.roots)
            for (const auto& y : rs.roots) {
                int m = coxeter_order(x, y);
                bool parallel = is_zero(x - y) || is_zero(x + y);
                if (parallel) {
                    CHECK(m == 1);
                } else {
                    CHECK((m == 2 || m == 3 || m == 4 || m == 6));
                }
            }
    }
}

TEST_CASE("restricted product order agrees with full matrix order") {
    for (const char* label : {"A2", "B2", "G2"}) {
        RootSystem rs = build_root_system(label);
        for (const auto& a : rs.roots)
            for (const auto& b : rs.roots) {
                GroupElem prod = GroupElem::reflection(a) * GroupElem::reflection(b);
                GroupElem power = prod;
                int full_order = 1;
                while (!power.is_identity()) {
                    power = power * prod;
                    ++full_order;
                    REQUIRE(full_order <= 12);
                }
                CHECK(full_order == coxeter_order(a, b));
            }
    }
}

TEST_CASE("simple systems reproduce the standard sets") {
    RootSystem a2 = build_root_system("A2");
    auto simple = a2.simple_roots();
    std::sort(simple.begin(), simple.end());
    std::vector<Vec> expect_a2 = {Vec{0, 1, -1}, Vec{1, -1, 0}};
    CHECK(simple == expect_a2);

    RootSystem b2 = build_root_system("B2");
    auto simple_b2 = b2.simple_roots();
    std::sort(simple_b2.begin(), simple_b2.end());
    std::vector<Vec> expect_b2 = {Vec{0, 1}, Vec{1, -1}};
    CHECK(simple_b2 == expect_b2);

    RootSystem c3 = build_root_system("C3");
    auto simple_c3 = c3.simple_roots();
    CHECK(std::find(simple_c3.begin(), simple_c3.end(), Vec{0, 0, 2}) != simple_c3.end());

    // ordering vector orthogonal to a root is rejected
    RootSystem probe = build_root_system("A2");
    CHECK_THROWS_AS(simple_system(probe, Vec{1, 1, 1}), InvalidArgument);
}

TEST_CASE("positive roots decompose over the simple system") {
    for (const char* label : {"A3", "B3", "G2", "F4", "E6"}) {
        RootSystem rs = build_root_system(label);
        INFO(label);
        CHECK(check_positive_decomposition(rs).empty());
    }
}

TEST_CASE("weyl group enumeration and the conjugation law") {
    CHECK(weyl_group_enumerate(build_root_system("A2")).size() == 6);
    CHECK(weyl_group_enumerate(build_root_system("B2")).size() == 8);
    CHECK(weyl_group_enumerate(build_root_system("G2")).size() == 12);
    CHECK(weyl_group_enumerate(build_root_system("A3")).size() == 24);

    CHECK_THROWS_AS(weyl_group_enumerate(build_root_system("A3"), 10), CapExceeded);

    RootSystem b2 = build_root_system("B2");
    auto group = weyl_group_enumerate(b2);
    for (const auto& w : group)
        for (const auto& alpha : b2.roots) {
            GroupElem lhs = w * GroupElem::reflection(alpha) * w.inverse();
            CHECK(lhs == GroupElem::reflection(w.apply(alpha)));
        }
}

TEST_CASE("length classes") {
    RootSystem b2 = build_root_system("B2");
    CHECK(b2.num_classes == 2);
    for (std::size_t i = 0; i < b2.roots.size(); ++i) {
        mpq_class len = dot(b2.roots[i], b2.roots[i]);
        CHECK(b2.length_class[i] == (len == 1 ? 0 : 1));
    }
    RootSystem a2 = build_root_system("A2");
    CHECK(a2.num_classes == 1);
}

TEST_CASE("roots suite passes for every built-in type") {
    for (const char* label : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"}) {
        for (auto& r : suite_roots(label)) {
            INFO(label << " " << r.check_id << ": " << r.residual_witness);
            CHECK(r.status == "pass");
        }
    }
}
