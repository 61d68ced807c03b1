#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "cmlax/errors.hpp"

namespace cmlax {

struct SimState {
    double t = 0.0;
    std::vector<double> q;
    std::vector<double> p;
};

enum class Integrator { rk4, leapfrog };

struct SimConfig {
    std::size_t n = 3;
    double k = 1.0;
    double dt = 1e-3;
    double t_end = 10.0;
    SimState initial;
    Integrator integrator = Integrator::rk4;
    /// Record diagnostics every this many steps (and always at the ends).
    std::size_t diagnostics_stride = 10;
    double collision_threshold = 1e-8;

    void validate() const;
};

/// Reference initial condition used by the verification suite: a spread-out
/// repulsive three-body configuration with nonzero total momentum.
SimState reference_initial_state();

/// q_i' = p_i, p_i' = sum_{j != i} 2 k^2 / (q_i - q_j)^3.
/// Throws SimulationFault past the collision threshold.
void rhs(const SimState& s, double k, double collision_threshold, std::vector<double>& dq,
         std::vector<double>& dp);

struct DiagnosticsRow {
    double t = 0.0;
    /// I_m = (1/m) tr L^m for m = 1..n.
    std::vector<double> invariants;
    /// tr L^m for m = 1..n.
    std::vector<double> power_traces;
};

struct Trajectory {
    SimConfig config;
    std::vector<SimState> states;
    std::vector<DiagnosticsRow> diagnostics;
};

Trajectory integrate(const SimConfig& config);

/// Max |I_m(t) - I_m(0)| / max(1, |I_m(0)|) over the recorded diagnostics.
struct DriftReport {
    std::vector<double> invariant_drift;
    std::vector<double> trace_drift;
    double max_drift = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

DriftReport drift_report(const Trajectory& trajectory, double tolerance);

/// Fixed column order: t, q1..qn, p1..pn, I_1..I_n.
void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out);

} // namespace cmlax
