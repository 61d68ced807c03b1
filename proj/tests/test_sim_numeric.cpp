#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "cmlax/sim.hpp"
#include "cmlax/suites.hpp"

using namespace cmlax;

TEST_CASE("right-hand side") {
    SimState s;
    s.q = {0.0, 1.0};
    s.p = {0.0, 0.0};
    std::vector<double> dq, dp;

    // frozen from the formula: dp_1 = 2k^2/(q1-q2)^3 = 2/(-1)^3 = -2
    rhs(s, 1.0, 1e-8, dq, dp);
    CHECK(dq == std::vector<double>{0.0, 0.0});
    CHECK(dp[0] == doctest::Approx(-2.0));
    CHECK(dp[1] == doctest::Approx(2.0));

    // k = 0: free motion
    s.p = {0.5, -0.25};
    rhs(s, 0.0, 1e-8, dq, dp);
    CHECK(dq == s.p);
    CHECK(dp == std::vector<double>{0.0, 0.0});

    // forces sum to zero
    SimState s3;
    s3.q = {-1.0, 0.2, 0.9};
    s3.p = {0.0, 0.0, 0.0};
    rhs(s3, 1.7, 1e-8, dq, dp);
    CHECK(std::fabs(dp[0] + dp[1] + dp[2]) < 1e-14);

    // collision guard
    SimState close;
    close.q = {0.0, 1e-10};
    close.p = {0.0, 0.0};
    CHECK_THROWS_AS(rhs(close, 1.0, 1e-8, dq, dp), SimulationFault);
}

TEST_CASE("config validation") {
    SimConfig cfg;
    cfg.initial = reference_initial_state();
    cfg.dt = 0.0;
    CHECK_THROWS_AS(integrate(cfg), InvalidArgument);
    cfg.dt = 1e-3;
    cfg.n = 1;
    CHECK_THROWS_AS(integrate(cfg), InvalidArgument);
    cfg.n = 4;  // mismatched initial data
    CHECK_THROWS_AS(integrate(cfg), InvalidArgument);
}

TEST_CASE("free particles move on straight lines") {
    SimConfig cfg;
    cfg.n = 3;
    cfg.k = 0.0;
    cfg.dt = 1e-3;
    cfg.t_end = 2.0;
    cfg.initial = reference_initial_state();
    Trajectory traj = integrate(cfg);
    const SimState& fin = traj.states.back();
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(fin.q[j] == doctest::Approx(cfg.initial.q[j] + cfg.initial.p[j] * fin.t).epsilon(1e-12));
        CHECK(fin.p[j] == doctest::Approx(cfg.initial.p[j]).epsilon(1e-14));
    }
}

TEST_CASE("static free configuration has exactly zero drift") {
    SimConfig cfg;
    cfg.n = 2;
    cfg.k = 0.0;
    cfg.dt = 1e-2;
    cfg.t_end = 1.0;
    cfg.initial.q = {0.0, 1.0};
    cfg.initial.p = {0.0, 0.0};
    Trajectory traj = integrate(cfg);
    DriftReport rep = drift_report(traj, 1e-300);
    CHECK(rep.max_drift == 0.0);
}

TEST_CASE("lax power traces are conserved along the flow") {
    SimConfig cfg;
    cfg.initial = reference_initial_state();
    Trajectory traj = integrate(cfg);
    DriftReport rep = drift_report(traj, 1e-8);
    INFO("max drift " << rep.max_drift);
    CHECK(rep.pass);
    CHECK(rep.invariant_drift.size() == 3);
    for (double d : rep.trace_drift) CHECK(d < 1e-8);
}

TEST_CASE("halving dt reduces the rk4 drift roughly sixteen-fold") {
    SimConfig coarse;
    coarse.initial = reference_initial_state();
    coarse.dt = 2e-2;
    coarse.t_end = 2.0;
    coarse.diagnostics_stride = 5;
    SimConfig fine = coarse;
    fine.dt = 1e-2;
    double dc = drift_report(integrate(coarse), 1.0).invariant_drift[1];
    double df = drift_report(integrate(fine), 1.0).invariant_drift[1];
    double order = std::log2(dc / df);
    INFO("observed order " << order);
    CHECK(order >= 3.8);
}

TEST_CASE("leapfrog conserves energy to second order") {
    SimConfig cfg;
    cfg.initial = reference_initial_state();
    cfg.integrator = Integrator::leapfrog;
    cfg.dt = 1e-3;
    cfg.t_end = 2.0;
    Trajectory traj = integrate(cfg);
    DriftReport rep = drift_report(traj, 1e-4);
    CHECK(rep.pass);
}

TEST_CASE("time reversal returns to the start") {
    SimConfig cfg;
    cfg.initial = reference_initial_state();
    Trajectory traj = integrate(cfg);
    SimConfig back = cfg;
    back.initial = traj.states.back();
    for (auto& v : back.initial.p) v = -v;
    back.initial.t = 0;
    Trajectory ret = integrate(back);
    const SimState& fin = ret.states.back();
    for (std::size_t j = 0; j < 3; ++j) {
        CHECK(std::fabs(fin.q[j] - cfg.initial.q[j]) < 1e-6);
        CHECK(std::fabs(fin.p[j] + cfg.initial.p[j]) < 1e-6);
    }
}

TEST_CASE("csv output has the fixed column order") {
    SimConfig cfg;
    cfg.initial = reference_initial_state();
    cfg.t_end = 0.1;
    cfg.dt = 1e-2;
    cfg.diagnostics_stride = 2;
    Trajectory traj = integrate(cfg);
    std::ostringstream out;
    write_trajectory_csv(traj, out);
    std::string text = out.str();
    CHECK(text.rfind("t,q1,q2,q3,p1,p2,p3,I1,I2,I3\n", 0) == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') >= 3);
}

TEST_CASE("simulation suite passes on the reference configuration") {
    SimSuiteOptions options;
    options.config.initial = reference_initial_state();
    for (auto& r : suite_simulate(options)) {
        INFO(r.check_id << ": " << r.residual_witness);
        CHECK(r.status == "pass");
    }
}
