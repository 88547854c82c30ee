#include "screenlab/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "screenlab/acceptance.hpp"
#include "screenlab/commitment.hpp"
#include "screenlab/config.hpp"
#include "screenlab/extensions.hpp"
#include "screenlab/numerics.hpp"
#include "screenlab/oracle.hpp"
#include "screenlab/parallel.hpp"
#include "screenlab/report.hpp"

namespace screenlab {

namespace {

struct Common {
    std::string config;
    std::string out;
    std::string svg;
    std::optional<double> sigma, rho;
    std::string n = "1000000";
    std::optional<std::uint64_t> seed;
    std::string rho_grid;
    double ebar = 1.0, ckappa = 8.0, omega = 1.0;
};

RunConfig load(const Common& c) {
    RunConfig cfg = c.config.empty() ? RunConfig{} : load_config(c.config);
    if (c.seed) cfg.seed = *c.seed;
    return cfg;
}

double chosen_sigma(const Common& c) {
    if (c.sigma.has_value() == c.rho.has_value()) throw std::invalid_argument("give exactly one of --sigma, --rho");
    const double s = c.sigma ? *c.sigma : 1.0 / *c.rho;
    if (!(s > 0) || !std::isfinite(s)) throw std::invalid_argument("noise scale must be positive and finite");
    return s;
}

std::vector<double> grid_for(const Common& c, const RunConfig& cfg, const Model& m) {
    if (!c.rho_grid.empty()) {
        auto g = parse_rho_grid(c.rho_grid);
        return g.log_spaced ? num::logspace(g.min, g.max, g.points) : num::linspace(g.min, g.max, g.points);
    }
    return precision_grid(sigma_tilde(m).rho, cfg.grid.min_multiple, cfg.grid.max_multiple, cfg.grid.points,
                          cfg.grid.log_spaced);
}

std::vector<double> ext_grid(const Common& c, double lo, double hi, int points) {
    if (c.rho_grid.empty()) return num::logspace(lo, hi, points);
    auto g = parse_rho_grid(c.rho_grid);
    return g.log_spaced ? num::logspace(g.min, g.max, g.points) : num::linspace(g.min, g.max, g.points);
}

// Writes to path, or to out when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

std::uint64_t draws(const std::string& s) {
    std::size_t used = 0;
    double x = 0;
    try {
        x = std::stod(s, &used);
    } catch (const std::logic_error&) {
        used = 0;
    }
    if (used != s.size() || !(x >= 1e4) || x != std::floor(x) || x > 1e12)
        throw std::invalid_argument("--n must be an integer >= 1e4, got '" + s + "'");
    return static_cast<std::uint64_t>(x);
}

void add_common(CLI::App* sub, Common& c, bool scale, bool grid) {
    sub->add_option("--config", c.config, "configuration file")->check(CLI::ExistingFile);
    if (scale) {
        auto* s = sub->add_option("--sigma", c.sigma, "noise scale");
        auto* r = sub->add_option("--rho", c.rho, "precision 1/sigma");
        s->excludes(r);
    }
    if (grid) {
        sub->add_option("--out", c.out, "output CSV (default: config out.csv, else stdout)");
        sub->add_option("--rho-grid", c.rho_grid, "min:max:points:log|linear");
    }
}

int cmd_validate(const Common& c, std::ostream& out) {
    auto cfg = load(c);
    auto m = cfg.model();
    int rc = validate_report(m.noise, m.env, out);
    if (m.env.has_theta_dagger() && rc == 0) {
        auto st = sigma_tilde(m);
        out << "sigma_tilde=" << fmt(st.sigma) << "\nrho_tilde=" << fmt(st.rho) << "\nsigma_tilde_crossings="
            << st.crossings.size() << '\n';
    }
    return rc;
}

int cmd_solve(const Common& c, std::ostream& out) {
    auto cfg = load(c);
    auto m = cfg.model();
    const double s = chosen_sigma(c);
    auto eq = solve(m, s, cfg.solver_tol);
    const bool semi = eq.kind == EquilibriumKind::semi_separating;
    out << "kind,sigma,rho,tau,tau_hat,theta_hat,q_residual,pbr_residual,fixed_point_residual\n";
    out << (semi ? "semi_separating" : "pooling") << ',' << fmt(s) << ',' << fmt(1.0 / s) << ','
        << eq.tau.str() << ',' << eq.tau_hat.str() << ',';
    if (semi)
        out << fmt(eq.theta_hat) << ',' << fmt(eq.q_residual) << ',' << fmt(eq.pbr_residual) << ','
            << fmt(eq.fixed_point_residual);
    else
        out << ",,,";
    out << '\n';
    return 0;
}

int cmd_sweep(const Common& c, std::ostream& out, bool with_commit) {
    auto cfg = load(c);
    auto m = cfg.model();
    auto s = sweep(m, grid_for(c, cfg, m), 0, {cfg.quad_tol, cfg.solver_tol});
    std::ostringstream csv;
    if (with_commit) {
        std::vector<std::optional<CommitmentSolution>> col(s.rows.size());
        parallel_for(s.rows.size(), [&](std::size_t i) {
            if (s.rows[i].exists) col[i] = solve_commitment(m, s.rows[i].sigma);
        });
        write_commit_sweep_csv(csv, s, col);
    } else {
        write_sweep_csv(csv, s);
    }
    emit(c.out.empty() ? cfg.out_csv : c.out, csv.str(), out);
    const std::string svg = c.svg.empty() ? cfg.out_svg : c.svg;
    if (!svg.empty()) {
        std::ostringstream os;
        write_sweep_svg(os, s, m.noise.name() + " noise: V, AR, U against rho");
        write_file(svg, os.str());
    }
    return 0;
}

int cmd_commit(const Common& c, std::ostream& out) {
    auto cfg = load(c);
    auto m = cfg.model();
    const double s = chosen_sigma(c);
    auto sol = solve_commitment(m, s);
    auto eq = solve(m, s, cfg.solver_tol);
    const double V = evaluate(m, eq, cfg.quad_tol).V;
    out << "sigma=" << fmt(s) << "\ntau_hat_star=" << fmt(sol.tau_hat_star) << "\ntheta_hat_star="
        << fmt(sol.theta_hat_star) << "\nVbar=" << fmt(sol.Vbar) << "\nV=" << fmt(V) << "\ngap=" << fmt(sol.Vbar - V)
        << "\nfoc_residual=" << fmt(sol.foc_residual) << "\ninterior=" << (sol.interior ? 1 : 0) << '\n';
    return 0;
}

int cmd_oracle(const Common& c, std::ostream& out) {
    auto cfg = load(c);
    auto m = cfg.model();
    const double s = chosen_sigma(c);
    auto eq = solve(m, s, cfg.solver_tol);
    auto w = evaluate(m, eq, cfg.quad_tol);
    auto r = run_oracle(m, eq, draws(c.n), cfg.seed);
    out << "sigma=" << fmt(s) << "\nkind=" << (eq.kind == EquilibriumKind::pooling ? "pooling" : "semi_separating")
        << "\nseed=" << r.seed << "\nn=" << r.n << "\nbest_response_violation=" << fmt(r.max_violation)
        << "\nposterior_residual=" << (r.posterior_residual ? fmt(*r.posterior_residual) : std::string("nan")) << '\n';
    const char* names[5] = {"V", "AR", "U", "alpha", "beta"};
    double WelfareReport::*f[5] = {&WelfareReport::V, &WelfareReport::AR, &WelfareReport::U, &WelfareReport::alpha,
                                   &WelfareReport::beta};
    for (int k = 0; k < 5; ++k) {
        const double se = r.std_error.*f[k];
        const double z = se > 0 ? (r.estimate.*f[k] - w.*f[k]) / se : 0.0;
        out << names[k] << "_quad=" << fmt(w.*f[k]) << '\n'
            << names[k] << "_mc=" << fmt(r.estimate.*f[k]) << '\n'
            << names[k] << "_se=" << fmt(se) << '\n'
            << names[k] << "_z=" << fmt(z) << '\n';
    }
    return 0;
}

int cmd_ext(const std::string& which, const Common& c, std::ostream& out) {
    auto cfg = load(c);
    std::ostringstream csv;
    if (which == "quadratic") {
        auto m = cfg.model();
        auto cost = ConvexCost::quadratic();
        auto g = ext_grid(c, 0.5, 32.0, 16);
        std::vector<std::optional<GeneralCostEquilibrium>> eqs(g.size());
        parallel_for(g.size(), [&](std::size_t i) { eqs[i] = solve_convex_cost_equilibrium(m, g[i], cost); });
        csv << "rho,exists,tau,theta_hat,V,residual\n";
        for (std::size_t i = 0; i < g.size(); ++i) {
            csv << fmt(g[i]) << ',' << (eqs[i] ? 1 : 0);
            if (eqs[i])
                csv << ',' << fmt(eqs[i]->tau) << ',' << fmt(eqs[i]->theta_hat) << ',' << fmt(eqs[i]->V) << ','
                    << fmt(eqs[i]->residual);
            else
                csv << ",,,,";
            csv << '\n';
        }
    } else if (which == "binary") {
        auto m = cfg.model();
        if (!(c.ebar > 0) || !(c.ckappa > 0)) throw std::invalid_argument("--ebar and --ckappa must be positive");
        auto g = ext_grid(c, 2.0, 12.0, 12);
        std::vector<std::optional<BinaryEffortEquilibrium>> eqs(g.size());
        parallel_for(g.size(), [&](std::size_t i) { eqs[i] = binary_effort_equilibrium(m, g[i], c.ebar, c.ckappa); });
        csv << "rho,exists,tau,theta_hat,delta,V,residual\n";
        for (std::size_t i = 0; i < g.size(); ++i) {
            csv << fmt(g[i]) << ',' << (eqs[i] ? 1 : 0);
            if (eqs[i])
                csv << ',' << fmt(eqs[i]->tau) << ',' << fmt(eqs[i]->theta_hat) << ',' << fmt(eqs[i]->delta) << ','
                    << fmt(eqs[i]->V) << ',' << fmt(eqs[i]->residual);
            else
                csv << ",,,,,";
            csv << '\n';
        }
    } else {
        auto g = ext_grid(c, 0.1, 10.0, 25);
        csv << "rho,k,q\n";
        for (double rho : g) {
            auto r = linear_reputation(rho, 0.0, c.omega);
            csv << fmt(rho) << ',' << fmt(r.k) << ',' << fmt(r.q) << '\n';
        }
    }
    emit(c.out, csv.str(), out);
    return 0;
}

int cmd_repro(const Common& c, std::ostream& out) {
    auto cfg = load(c);
    const std::string dir = c.out.empty() ? "repro" : c.out;
    std::filesystem::create_directories(dir);
    for (const auto& f : write_repro_artifacts(cfg, dir)) out << "wrote " << f << '\n';
    bool ok = true;
    for (const auto& r : run_acceptance(cfg)) {
        print_criterion(out, r);
        ok = ok && r.pass;
    }
    out << (ok ? "all criteria passed" : "some criteria failed") << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int validate_report(const NoiseModel& noise, const Environment& env, std::ostream& out) {
    bool ok = true;
    auto show = [&](const CheckResult& r) {
        out << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.pass) out << " at=" << fmt(r.at);
        if (!r.detail.empty()) out << " (" << r.detail << ')';
        out << '\n';
        ok = ok && r.pass;
    };
    out << "noise=" << noise.name() << '\n';
    for (const auto& r : validate_noise(noise)) show(r);
    auto er = validate_environment(env);
    out << "environment=" << env.label() << '\n';
    for (const auto& r : er.checks) show(r);
    out << "mean_v=" << fmt(er.mean_v) << "\nmean_v_good=" << fmt(er.mean_v_good) << "\ntheta_tilde="
        << fmt(env.theta_tilde()) << '\n';
    if (env.has_theta_dagger()) out << "theta_dagger=" << fmt(env.theta_dagger()) << '\n';
    return ok ? 0 : 1;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"screenlab: screening under noisy tests"};
    app.require_subcommand(1, 1);
    Common c;
    std::string ext_kind;

    auto* validate = app.add_subcommand("validate", "check the noise model and environment");
    add_common(validate, c, false, false);
    auto* solve_cmd = app.add_subcommand("solve", "solve one equilibrium");
    add_common(solve_cmd, c, true, false);
    auto* sweep_cmd = app.add_subcommand("sweep", "equilibrium and welfare over a precision grid");
    add_common(sweep_cmd, c, false, true);
    sweep_cmd->add_option("--svg", c.svg, "SVG plot of V, AR, U");
    auto* commit = app.add_subcommand("commit", "optimal committed standard at one precision");
    add_common(commit, c, true, false);
    auto* csweep = app.add_subcommand("commit-sweep", "sweep with the committed standard appended");
    add_common(csweep, c, false, true);
    csweep->add_option("--svg", c.svg, "SVG plot of V, AR, U");
    auto* ext = app.add_subcommand("ext", "model extensions");
    add_common(ext, c, false, true);
    ext->add_option("kind", ext_kind, "quadratic | binary | reputation")
        ->required()
        ->check(CLI::IsMember({"quadratic", "binary", "reputation"}));
    ext->add_option("--ebar", c.ebar, "binary effort level");
    ext->add_option("--ckappa", c.ckappa, "binary cost scale (cost ckappa/theta)");
    ext->add_option("--omega", c.omega, "reputation signal weight");
    auto* oracle = app.add_subcommand("oracle", "independent checks and simulation");
    add_common(oracle, c, true, false);
    oracle->add_option("--n", c.n, "simulation draws");
    oracle->add_option("--seed", c.seed, "simulation seed");
    auto* repro = app.add_subcommand("repro", "write figure data and run the acceptance suite");
    repro->add_option("--config", c.config, "configuration file")->check(CLI::ExistingFile);
    repro->add_option("--out", c.out, "output directory (default: repro)");
    repro->add_option("--seed", c.seed, "simulation seed");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    try {
        if (*validate) return cmd_validate(c, out);
        if (*solve_cmd) return cmd_solve(c, out);
        if (*sweep_cmd) return cmd_sweep(c, out, false);
        if (*csweep) return cmd_sweep(c, out, true);
        if (*commit) return cmd_commit(c, out);
        if (*ext) return cmd_ext(ext_kind, c, out);
        if (*oracle) return cmd_oracle(c, out);
        if (*repro) return cmd_repro(c, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace screenlab
