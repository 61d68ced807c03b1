// Command-line front end: every subcommand runs a verification suite and
// emits one JSON report with a stable layout. Exit code 0 iff every executed
// check passed, 1 on a failed check, 2 on a usage error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmlax/json_io.hpp"
#include "cmlax/roots.hpp"
#include "cmlax/suites.hpp"

using namespace cmlax;

namespace {

struct Output {
    std::string report_path;
    bool quiet = false;

    int finish(std::vector<CheckResult> results, nlohmann::json artifacts = {}) const {
        nlohmann::json j = report_json(results);
        if (!artifacts.is_null() && !artifacts.empty()) j["artifacts"] = std::move(artifacts);
        std::string text = j.dump(2);
        if (!report_path.empty()) {
            std::ofstream out(report_path);
            if (!out) {
                std::cerr << "cannot write report to " << report_path << "\n";
                return 2;
            }
            out << text << "\n";
            if (!quiet) std::cout << "report written to " << report_path << "\n";
        }
        if (report_path.empty() || !quiet) {
            if (report_path.empty()) std::cout << text << "\n";
        }
        return all_passed(results) ? 0 : 1;
    }
};

nlohmann::json root_system_dump(const RootSystem& rs) {
    nlohmann::json j;
    j["label"] = rs.label;
    j["rank"] = rs.rank;
    j["ambient_dim"] = rs.ambient_dim;
    auto vec_to_json = [](const Vec& v) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : v) a.push_back(c.get_str());
        return a;
    };
    j["roots"] = nlohmann::json::array();
    for (const auto& r : rs.roots) j["roots"].push_back(vec_to_json(r));
    j["positive"] = rs.positive;
    j["simple"] = nlohmann::json::array();
    for (const auto& r : rs.simple_roots()) j["simple"].push_back(vec_to_json(r));
    j["length_class"] = rs.length_class;
    j["orbit_multiplicity"] = nlohmann::json::array();
    for (std::size_t c = 0; c < rs.num_classes; ++c)
        j["orbit_multiplicity"].push_back(std::string("c") + std::to_string(c + 1));
    j["coxeter_matrix"] = coxeter_matrix(rs);
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification suites for the rational Calogero-Moser system"};
    app.require_subcommand(1);
    app.fallthrough();

    Output output;
    app.add_option("--report", output.report_path, "write the JSON report to this file")
        ->configurable(false);
    app.add_flag("--quiet", output.quiet, "suppress stdout report echo");

    // verify <target>
    auto* verify = app.add_subcommand("verify", "symbolic verification suites");
    verify->require_subcommand(1);

    std::size_t n = 3;
    bool flip = false;
    auto* vcl = verify->add_subcommand("classical-lax", "classical Lax equation residual");
    vcl->add_option("--n", n, "particle count")->check(CLI::Range(2, 6));
    vcl->add_flag("--inject-m-sign-flip", flip, "negate one M entry (negative control)");

    auto* vql = verify->add_subcommand("quantum-lax", "quantum Lax equation residual");
    vql->add_option("--n", n, "particle count")->check(CLI::Range(2, 4));
    vql->add_flag("--inject-m-sign-flip", flip, "negate one M entry (negative control)");

    auto* vin = verify->add_subcommand("involution", "classical integrals in involution");
    vin->add_option("--n", n, "particle count")->check(CLI::Range(2, 5));

    auto* vqc = verify->add_subcommand("quantum-commute", "quantum integrals commute");
    vqc->add_option("--n", n, "particle count")->check(CLI::Range(2, 3));

    // roots build
    auto* roots = app.add_subcommand("roots", "root system construction");
    auto* rbuild = roots->add_subcommand("build", "build a root system and check its axioms");
    std::string type_label = "A2";
    bool do_check = false, enumerate_weyl = false;
    std::string emit;
    rbuild->add_option("--type", type_label, "system label, e.g. A2, B3, D4, G2, F4, E8")
        ->required();
    rbuild->add_flag("--check", do_check, "run the full axiom/crystallographic checks");
    rbuild->add_flag("--enumerate-weyl", enumerate_weyl, "force Weyl group enumeration");
    rbuild->add_option("--emit", emit, "emit artifacts (json)")
        ->check(CLI::IsMember({"json"}));

    // dunkl <target>
    auto* dunkl = app.add_subcommand("dunkl", "Dunkl operator verification suites");
    dunkl->require_subcommand(1);
    std::uint32_t max_degree = 5;
    std::string dunkl_type = "A2";

    auto* dcomm = dunkl->add_subcommand("commute", "commutativity on the monomial basis");
    dcomm->add_option("--type", dunkl_type, "root system label")->required();
    dcomm->add_option("--max-degree", max_degree, "monomial degree cap")->check(CLI::Range(1, 8));

    auto* drest = dunkl->add_subcommand("restrict", "restriction identity");
    drest->add_option("--type", dunkl_type, "root system label")->required();

    auto* dgauge = dunkl->add_subcommand("gauge", "gauge conjugation identity");
    dgauge->add_option("--type", dunkl_type, "root system label")->required();

    auto* dclass = dunkl->add_subcommand("classical", "classical Dunkl suite");
    dclass->add_option("--type", dunkl_type, "root system label")->required();

    // simulate
    auto* sim = app.add_subcommand("simulate", "numerical flow with conservation diagnostics");
    SimSuiteOptions sim_options;
    sim_options.config.initial = reference_initial_state();
    std::string integrator = "rk4";
    std::size_t sim_n = 3;
    sim->add_option("--n", sim_n, "particle count (reference initial data exists for n=3)")
        ->check(CLI::Range(2, 16));
    sim->add_option("--k", sim_options.config.k, "coupling");
    sim->add_option("--dt", sim_options.config.dt, "time step")
        ->check(CLI::PositiveNumber);
    sim->add_option("--t-end", sim_options.config.t_end, "integration time")
        ->check(CLI::PositiveNumber);
    sim->add_option("--integrator", integrator, "rk4 or leapfrog")
        ->check(CLI::IsMember({"rk4", "leapfrog"}));
    sim->add_option("--tolerance", sim_options.drift_tolerance, "relative drift tolerance");
    sim->add_option("--csv", sim_options.csv_path, "write the trajectory CSV here");
    std::vector<double> q0, p0;
    sim->add_option("--q0", q0, "initial positions (space separated)")->expected(-1);
    sim->add_option("--p0", p0, "initial momenta (space separated)")->expected(-1);

    // all
    auto* all = app.add_subcommand("all", "run the curated default matrix");
    bool slow = false;
    all->add_flag("--slow", slow, "include the slow n=4 checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (vcl->parsed()) return output.finish(suite_classical_lax(n, flip));
        if (vql->parsed()) return output.finish(suite_quantum_lax(n, flip));
        if (vin->parsed()) return output.finish(suite_involution(n));
        if (vqc->parsed()) return output.finish(suite_quantum_commute(n));

        if (rbuild->parsed()) {
            std::vector<CheckResult> results;
            nlohmann::json artifacts;
            if (do_check || emit.empty()) {
                results = suite_roots(type_label, enumerate_weyl);
            } else {
                results.push_back(run_check("roots", "build-" + type_label, [&] {
                    build_root_system(type_label);
                    return std::string();
                }));
            }
            if (emit == "json") artifacts = root_system_dump(build_root_system(type_label));
            return output.finish(std::move(results), std::move(artifacts));
        }

        if (dcomm->parsed()) return output.finish(suite_dunkl_commute(dunkl_type, max_degree));
        if (drest->parsed()) return output.finish(suite_dunkl_restrict(dunkl_type));
        if (dgauge->parsed()) return output.finish(suite_dunkl_gauge(dunkl_type));
        if (dclass->parsed()) return output.finish(suite_dunkl_classical(dunkl_type));

        if (sim->parsed()) {
            SimConfig& cfg = sim_options.config;
            cfg.n = sim_n;
            if (integrator == "leapfrog") cfg.integrator = Integrator::leapfrog;
            if (!q0.empty() || !p0.empty()) {
                if (q0.size() != cfg.n || p0.size() != cfg.n) {
                    std::cerr << "need exactly n values for --q0 and --p0\n";
                    return 2;
                }
                cfg.initial.q = q0;
                cfg.initial.p = p0;
            } else if (cfg.n != 3) {
                std::cerr << "no reference initial data for n=" << cfg.n
                          << "; pass --q0 and --p0\n";
                return 2;
            }
            return output.finish(suite_simulate(sim_options));
        }

        if (all->parsed()) return output.finish(suite_all(slow));
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    return 2;
}
