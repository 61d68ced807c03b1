#include "cmlax/sim.hpp"

#include <cmath>
#include <complex>
#include <ostream>

namespace cmlax {

void SimConfig::validate() const {
    if (n < 2) throw InvalidArgument("SimConfig: need n >= 2");
    if (!(dt > 0)) throw InvalidArgument("SimConfig: need dt > 0");
    if (!(t_end > 0)) throw InvalidArgument("SimConfig: need t_end > 0");
    if (initial.q.size() != n || initial.p.size() != n)
        throw InvalidArgument("SimConfig: initial state size mismatch");
}

SimState reference_initial_state() {
    SimState s;
    s.q = {-1.0, 0.1, 1.2};
    s.p = {0.3, -0.1, 0.05};
    return s;
}

void rhs(const SimState& s, double k, double collision_threshold, std::vector<double>& dq,
         std::vector<double>& dp) {
    std::size_t n = s.q.size();
    dq = s.p;
    dp.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double sep = s.q[i] - s.q[j];
            if (std::fabs(sep) < collision_threshold)
                throw SimulationFault("near-collision between particles " + std::to_string(i) +
                                      " and " + std::to_string(j) + " at t=" + std::to_string(s.t));
            double f = 2.0 * k * k / (sep * sep * sep);
            dp[i] += f;
            dp[j] -= f;
        }
    }
}

namespace {

using Cplx = std::complex<double>;

DiagnosticsRow diagnostics_at(const SimState& s, double k) {
    std::size_t n = s.q.size();
    std::vector<Cplx> lax(n * n, Cplx(0, 0));
    for (std::size_t r = 0; r < n; ++r) {
        lax[r * n + r] = Cplx(s.p[r], 0);
        for (std::size_t c = 0; c < n; ++c) {
            if (c == r) continue;
            lax[r * n + c] = Cplx(0, k / (s.q[r] - s.q[c]));
        }
    }
    DiagnosticsRow row;
    row.t = s.t;
    std::vector<Cplx> power = lax, scratch(n * n);
    for (std::size_t m = 1; m <= n; ++m) {
        if (m > 1) {
            for (auto& v : scratch) v = Cplx(0, 0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t l = 0; l < n; ++l) {
                    Cplx v = power[i * n + l];
                    if (v == Cplx(0, 0)) continue;
                    for (std::size_t j = 0; j < n; ++j) scratch[i * n + j] += v * lax[l * n + j];
                }
            power.swap(scratch);
        }
        Cplx tr(0, 0);
        for (std::size_t i = 0; i < n; ++i) tr += power[i * n + i];
        // L is Hermitian, so the traces are real up to rounding
        row.power_traces.push_back(tr.real());
        row.invariants.push_back(tr.real() / double(m));
    }
    return row;
}

void step_rk4(SimState& s, double dt, double k, double threshold) {
    std::size_t n = s.q.size();
    std::vector<double> k1q, k1p, k2q, k2p, k3q, k3p, k4q, k4p;
    SimState tmp = s;
    rhs(s, k, threshold, k1q, k1p);
    for (std::size_t i = 0; i < n; ++i) {
        tmp.q[i] = s.q[i] + 0.5 * dt * k1q[i];
        tmp.p[i] = s.p[i] + 0.5 * dt * k1p[i];
    }
    tmp.t = s.t + 0.5 * dt;
    rhs(tmp, k, threshold, k2q, k2p);
    for (std::size_t i = 0; i < n; ++i) {
        tmp.q[i] = s.q[i] + 0.5 * dt * k2q[i];
        tmp.p[i] = s.p[i] + 0.5 * dt * k2p[i];
    }
    rhs(tmp, k, threshold, k3q, k3p);
    for (std::size_t i = 0; i < n; ++i) {
        tmp.q[i] = s.q[i] + dt * k3q[i];
        tmp.p[i] = s.p[i] + dt * k3p[i];
    }
    tmp.t = s.t + dt;
    rhs(tmp, k, threshold, k4q, k4p);
    for (std::size_t i = 0; i < n; ++i) {
        s.q[i] += dt / 6.0 * (k1q[i] + 2.0 * (k2q[i] + k3q[i]) + k4q[i]);
        s.p[i] += dt / 6.0 * (k1p[i] + 2.0 * (k2p[i] + k3p[i]) + k4p[i]);
    }
    s.t += dt;
}

void step_leapfrog(SimState& s, double dt, double k, double threshold) {
    std::size_t n = s.q.size();
    std::vector<double> dq, dp;
    rhs(s, k, threshold, dq, dp);
    for (std::size_t i = 0; i < n; ++i) s.p[i] += 0.5 * dt * dp[i];
    for (std::size_t i = 0; i < n; ++i) s.q[i] += dt * s.p[i];
    s.t += dt;
    rhs(s, k, threshold, dq, dp);
    for (std::size_t i = 0; i < n; ++i) s.p[i] += 0.5 * dt * dp[i];
}

} // namespace

Trajectory integrate(const SimConfig& config) {
    config.validate();
    Trajectory traj;
    traj.config = config;
    SimState s = config.initial;
    s.t = 0.0;

    std::size_t steps = static_cast<std::size_t>(std::llround(config.t_end / config.dt));
    traj.states.reserve(steps + 1);
    traj.states.push_back(s);
    traj.diagnostics.push_back(diagnostics_at(s, config.k));

    for (std::size_t step = 1; step <= steps; ++step) {
        if (config.integrator == Integrator::rk4)
            step_rk4(s, config.dt, config.k, config.collision_threshold);
        else
            step_leapfrog(s, config.dt, config.k, config.collision_threshold);
        for (double v : s.q)
            if (!std::isfinite(v)) throw SimulationFault("non-finite position");
        for (double v : s.p)
            if (!std::isfinite(v)) throw SimulationFault("non-finite momentum");
        traj.states.push_back(s);
        if (step % config.diagnostics_stride == 0 || step == steps)
            traj.diagnostics.push_back(diagnostics_at(s, config.k));
    }
    return traj;
}

DriftReport drift_report(const Trajectory& trajectory, double tolerance) {
    if (trajectory.diagnostics.empty()) throw InvalidArgument("drift_report: empty trajectory");
    const DiagnosticsRow& first = trajectory.diagnostics.front();
    std::size_t n = first.invariants.size();
    DriftReport rep;
    rep.invariant_drift.assign(n, 0.0);
    rep.trace_drift.assign(n, 0.0);
    rep.tolerance = tolerance;
    for (const auto& row : trajectory.diagnostics) {
        for (std::size_t m = 0; m < n; ++m) {
            double scale_i = std::max(1.0, std::fabs(first.invariants[m]));
            double scale_t = std::max(1.0, std::fabs(first.power_traces[m]));
            rep.invariant_drift[m] = std::max(
                rep.invariant_drift[m], std::fabs(row.invariants[m] - first.invariants[m]) / scale_i);
            rep.trace_drift[m] = std::max(
                rep.trace_drift[m],
                std::fabs(row.power_traces[m] - first.power_traces[m]) / scale_t);
        }
    }
    for (double v : rep.invariant_drift) rep.max_drift = std::max(rep.max_drift, v);
    for (double v : rep.trace_drift) rep.max_drift = std::max(rep.max_drift, v);
    rep.pass = rep.max_drift < tolerance;
    return rep;
}

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
    std::size_t n = trajectory.config.n;
    out << "t";
    for (std::size_t j = 1; j <= n; ++j) out << ",q" << j;
    for (std::size_t j = 1; j <= n; ++j) out << ",p" << j;
    for (std::size_t m = 1; m <= n; ++m) out << ",I" << m;
    out << "\n";
    out.precision(17);
    std::size_t d = 0;
    std::size_t stride = trajectory.config.diagnostics_stride;
    for (std::size_t idx = 0; idx < trajectory.states.size(); ++idx) {
        bool has_diag = idx % stride == 0 || idx + 1 == trajectory.states.size();
        if (!has_diag) continue;
        const SimState& s = trajectory.states[idx];
        out << s.t;
        for (double v : s.q) out << "," << v;
        for (double v : s.p) out << "," << v;
        if (d < trajectory.diagnostics.size()) {
            for (double v : trajectory.diagnostics[d].invariants) out << "," << v;
        }
        ++d;
        out << "\n";
    }
}

} // namespace cmlax
