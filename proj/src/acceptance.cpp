#include "screenlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include <unistd.h>

#include "screenlab/commitment.hpp"
#include "screenlab/extensions.hpp"
#include "screenlab/numerics.hpp"
#include "screenlab/oracle.hpp"
#include "screenlab/parallel.hpp"
#include "screenlab/philox.hpp"
#include "screenlab/report.hpp"
#include "screenlab/welfare.hpp"

namespace fs = std::filesystem;

namespace screenlab {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string show_num(double x, int digits = 6) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

Tolerances tolerances(const RunConfig& cfg) { return {cfg.quad_tol, cfg.solver_tol}; }

std::vector<double> config_grid(const RunConfig& cfg, const Model& m) {
    const double rt = sigma_tilde(m).rho;
    return precision_grid(rt, cfg.grid.min_multiple, cfg.grid.max_multiple, cfg.grid.points, cfg.grid.log_spaced);
}

std::vector<std::optional<CommitmentSolution>> commit_column(const Model& m, const SweepResult& s, unsigned workers) {
    std::vector<std::optional<CommitmentSolution>> out(s.rows.size());
    parallel_for(s.rows.size(), [&](std::size_t i) {
        if (s.rows[i].exists) out[i] = solve_commitment(m, s.rows[i].sigma);
    }, workers);
    return out;
}

// dy/dx at i: central inside, one-sided at the ends.
double slope(const std::vector<double>& x, const std::vector<double>& y, std::size_t i) {
    const std::size_t n = x.size();
    const std::size_t a = i == 0 ? 0 : i - 1, b = i + 1 == n ? i : i + 1;
    return (y[b] - y[a]) / (x[b] - x[a]);
}

// Grid used by the criteria: [rho_tilde, 100 rho_tilde], 60 log points.
constexpr int kPoints = 60;
constexpr double kTopMultiple = 100.0;
constexpr int kTail = 6;  // top decile of the grid

struct Family {
    std::string name;
    Model model;
    double rho_tilde;
    std::vector<double> rho;
    SweepResult sweep;
    double seconds;

    std::vector<double> column(double WelfareReport::*f) const {
        std::vector<double> y;
        for (const auto& r : sweep.rows) y.push_back(r.welfare.*f);
        return y;
    }
};

class Check {
public:
    explicit Check(CriterionResult& r) : r_(r) {}
    void require(bool ok, const std::string& what) {
        if (!ok) r_.pass = false;
        r_.notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
    }
    void info(const std::string& what) { r_.notes.push_back("info " + what); }

private:
    CriterionResult& r_;
};

CriterionResult begin(int id, const std::string& title) {
    CriterionResult r;
    r.id = id;
    r.title = title;
    r.pass = true;
    return r;
}

// ---- criterion bodies ----

void welfare_shape(Check& c, const Family& f) {
    auto V = f.column(&WelfareReport::V);
    const auto& x = f.rho;
    for (std::size_t i = 1; i <= 3; ++i) {
        double d = slope(x, V, i);
        c.require(d > 0, f.name + ": dV/drho at point " + std::to_string(i) + " = " + show_num(d) + " > 0");
    }
    for (std::size_t i = x.size() - kTail; i < x.size(); ++i) {
        double d = slope(x, V, i);
        c.require(d < 0, f.name + ": dV/drho at point " + std::to_string(i) + " = " + show_num(d) + " < 0");
    }
    // where the rise actually is: fine grid just above rho_tilde
    auto fine = num::linspace(f.rho_tilde, 1.3 * f.rho_tilde, 31);
    auto fs = sweep(f.model, fine);
    std::size_t peak = 0;
    for (std::size_t i = 1; i < fine.size(); ++i)
        if (fs.rows[i].welfare.V > fs.rows[peak].welfare.V) peak = i;
    c.info(f.name + ": fine grid peak of V at rho = " + show_num(fine[peak] / f.rho_tilde, 4) + " rho_tilde (V = " +
           show_num(fs.rows[peak].welfare.V, 8) + "), coarse grid step ratio " + show_num(x[1] / x[0], 4));
}

CriterionResult criterion1(const std::vector<Family>& fams) {
    auto r = begin(1, "V rises above rho_tilde and falls in the grid tail; sweep under 30 s");
    Check c(r);
    double total = 0;
    for (const auto& f : fams) {
        welfare_shape(c, f);
        total += f.seconds;
    }
    c.require(total < 30.0, "both 60-point sweeps took " + show_num(total, 3) + " s < 30 s");
    return r;
}

CriterionResult criterion2(const std::vector<Family>& fams) {
    auto r = begin(2, "AR and U increase in the grid tail; U <= AR");
    Check c(r);
    for (const auto& f : fams) {
        auto AR = f.column(&WelfareReport::AR), U = f.column(&WelfareReport::U);
        for (std::size_t i = f.rho.size() - kTail; i < f.rho.size(); ++i) {
            double da = slope(f.rho, AR, i), du = slope(f.rho, U, i);
            c.require(da > 0, f.name + ": dAR/drho at point " + std::to_string(i) + " = " + show_num(da) + " > 0");
            c.require(du > 0, f.name + ": dU/drho at point " + std::to_string(i) + " = " + show_num(du) + " > 0");
        }
        int bad = 0;
        for (std::size_t i = 0; i < f.rho.size(); ++i)
            if (!(U[i] <= AR[i])) ++bad;
        c.require(bad == 0, f.name + ": U <= AR at all " + std::to_string(f.rho.size()) + " points (" +
                                std::to_string(bad) + " violations)");
    }
    return r;
}

CriterionResult criterion3(const std::vector<Family>& fams) {
    auto r = begin(3, "alpha decreasing, beta increasing in the tail, error identity");
    Check c(r);
    for (const auto& f : fams) {
        auto a = f.column(&WelfareReport::alpha), b = f.column(&WelfareReport::beta);
        int bad = 0;
        for (std::size_t i = 1; i < a.size(); ++i)
            if (!(a[i] < a[i - 1])) ++bad;
        c.require(bad == 0, f.name + ": alpha strictly decreasing over the grid (" + std::to_string(bad) +
                                " violations)");
        for (std::size_t i = f.rho.size() - kTail; i < f.rho.size(); ++i) {
            double d = slope(f.rho, b, i);
            c.require(d > 0, f.name + ": dbeta/drho at point " + std::to_string(i) + " = " + show_num(d) + " > 0");
        }
        double worst = 0;
        const double pg = f.model.env.prob_good();
        for (const auto& row : f.sweep.rows)
            worst = std::max(worst, std::abs(row.welfare.beta + pg - row.welfare.alpha - row.welfare.AR));
        c.require(worst <= 1e-10, f.name + ": max |beta + P(good) - alpha - AR| = " + show_num(worst, 3) + " <= 1e-10");
    }
    return r;
}

CriterionResult criterion4(const std::vector<Family>& fams) {
    auto r = begin(4, "theta_hat and tau converge to theta_dagger; monotone standards");
    Check c(r);
    for (const auto& f : fams) {
        const double d = f.model.env.theta_dagger();
        const auto& rows = f.sweep.rows;
        const auto& top = rows.back().eq;
        c.require(std::abs(top.theta_hat - d) < 0.05, f.name + ": |theta_hat - dagger| at 100 rho_tilde = " +
                                                          show_num(std::abs(top.theta_hat - d), 3) + " (log gap " +
                                                          show_num(top.log_gap, 8) + ") < 0.05");
        const double tau = top.tau.value();
        c.require(std::abs(tau - d) < 0.05,
                  f.name + ": |tau - dagger| at 100 rho_tilde = " + show_num(std::abs(tau - d), 4) + " < 0.05");
        int tail_bad = 0, gap_bad = 0, std_bad = 0, missing = 0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (!rows[i].exists || !rows[i - 1].exists) {
                ++missing;
                continue;
            }
            bool gap_down = rows[i].eq.log_gap < rows[i - 1].eq.log_gap;
            if (!gap_down) ++gap_bad;
            if (i >= rows.size() - kTail && !gap_down) ++tail_bad;
            if (!(rows[i].eq.tau_hat.value() > rows[i - 1].eq.tau_hat.value())) ++std_bad;
        }
        c.require(missing == 0, f.name + ": equilibrium exists at every grid point");
        c.require(tail_bad == 0, f.name + ": theta_hat strictly decreasing over the grid tail");
        c.require(gap_bad == 0, f.name + ": theta_hat strictly decreasing at every step (" + std::to_string(gap_bad) +
                                    " violations)");
        c.require(std_bad == 0, f.name + ": tau_hat strictly increasing at every step (" + std::to_string(std_bad) +
                                    " violations)");
    }
    return r;
}

CriterionResult criterion5(const std::vector<Family>& fams) {
    auto r = begin(5, "equilibrium residuals and oracle checks at 10 grid points");
    Check c(r);
    for (const auto& f : fams) {
        double q = 0, pbr = 0, viol = 0, post = 0;
        for (int k = 0; k < 10; ++k) {
            const auto idx = static_cast<std::size_t>(std::lround(k * (kPoints - 1) / 9.0));
            const auto& eq = f.sweep.rows[idx].eq;
            q = std::max(q, std::abs(eq.q_residual));
            pbr = std::max(pbr, std::abs(eq.pbr_residual));
            viol = std::max(viol, verify_agent_best_response(f.model, eq));
            post = std::max(post, std::abs(verify_principal_indifference(f.model, eq).value_or(1e300)));
        }
        c.require(q < 1e-8, f.name + ": max |Q| = " + show_num(q, 3) + " < 1e-8");
        c.require(pbr < 1e-8, f.name + ": max principal best-response residual = " + show_num(pbr, 3) + " < 1e-8");
        c.require(viol < 1e-5, f.name + ": max grid best-response violation = " + show_num(viol, 3) + " < 1e-5");
        c.require(post < 1e-6, f.name + ": max |posterior residual| = " + show_num(post, 3) + " < 1e-6");
    }
    return r;
}

CriterionResult criterion6(const Family& f, std::uint64_t seed) {
    auto r = begin(6, "Monte Carlo welfare agrees with quadrature within 3 SE");
    Check c(r);
    const auto t0 = Clock::now();
    const char* names[5] = {"V", "AR", "U", "alpha", "beta"};
    double WelfareReport::*fields[5] = {&WelfareReport::V, &WelfareReport::AR, &WelfareReport::U,
                                        &WelfareReport::alpha, &WelfareReport::beta};
    for (std::size_t idx : {5u, 20u, 40u}) {
        const auto& row = f.sweep.rows[idx];
        auto mc = monte_carlo_welfare(f.model, row.eq, 1000000, seed);
        for (int k = 0; k < 5; ++k) {
            double z = (mc.estimate.*fields[k] - row.welfare.*fields[k]) / mc.std_error.*fields[k];
            c.require(std::abs(z) <= 3.0, f.name + " point " + std::to_string(idx) + ": " + names[k] + " z = " +
                                              show_num(z, 3) + " (|z| <= 3)");
        }
    }
    const double t = since(t0);
    c.require(t < 60.0, "3 x 1e6 draws took " + show_num(t, 3) + " s < 60 s");
    return r;
}

CriterionResult criterion7(const Family& f, std::uint64_t seed) {
    auto r = begin(7, "accuracy ordering of two precisions in both type regimes");
    Check c(r);
    const auto& m = f.model;
    const auto& hi_prec = f.sweep.rows[20];  // sigma
    const auto& lo_prec = f.sweep.rows[12];  // sigma' > sigma
    c.info(f.name + ": sigma = 1/" + show_num(hi_prec.rho, 5) + ", sigma' = 1/" + show_num(lo_prec.rho, 5));
    std::vector<double> p;
    for (int k = 1; k <= 33; ++k) p.push_back(k / 34.0);
    const double lo = m.env.lo(), hi = m.env.hi(), tt = m.env.theta_tilde(), th = hi_prec.eq.theta_hat;
    CounterStream rng(seed, 7);
    std::uint64_t draw = 0;
    auto uniform = [&](double a, double b) { return a + (b - a) * rng.uniforms(draw++)[0]; };
    for (int regime = 0; regime < 2; ++regime) {
        const Accuracy want = regime == 0 ? Accuracy::more_accurate : Accuracy::less_accurate;
        for (int k = 0; k < 5; ++k) {
            double theta = regime == 0 ? uniform(lo, th) : uniform(th, tt);
            double theta_p = uniform(tt, hi);
            auto res = accuracy_compare(m, theta, theta_p, hi_prec.eq, lo_prec.eq, p);
            c.require(res.order == want && res.violations == 0,
                      f.name + ": theta = " + show_num(theta, 5) + ", theta' = " + show_num(theta_p, 5) + " -> " +
                          to_string(res.order) + " (want " + to_string(want) + ")");
        }
    }
    return r;
}

CriterionResult criterion8(const std::vector<Family>& fams, unsigned workers) {
    auto r = begin(8, "commitment raises the standard and the payoff; V not maximal at top precision");
    Check c(r);
    const auto& f = fams.front();
    const double tt = f.model.env.theta_tilde();
    const std::vector<std::size_t> idx = {5, 17, 29, 41, 53};
    std::vector<CommitmentSolution> sol(idx.size());
    parallel_for(idx.size(), [&](std::size_t k) { sol[k] = solve_commitment(f.model, f.sweep.rows[idx[k]].sigma); },
                 workers);
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto& row = f.sweep.rows[idx[k]];
        const auto& s = sol[k];
        const std::string at = f.name + " point " + std::to_string(idx[k]) + ": ";
        c.require(s.tau_hat_star > row.eq.tau_hat.value(),
                  at + "tau_hat* = " + show_num(s.tau_hat_star, 8) + " > tau_hat = " + show_num(row.eq.tau_hat.value(), 8));
        // the gap is of order f(tau_hat*); it is carried as its log
        const bool above = s.theta_hat_star > tt || std::isfinite(s.log_gap);
        c.require(above, at + "theta_hat* - theta_tilde = exp(" + show_num(s.log_gap, 8) + ") > 0");
        c.require(s.Vbar >= row.welfare.V, at + "Vbar = " + show_num(s.Vbar, 8) + " >= V = " + show_num(row.welfare.V, 8));
        if (k > 0)
            c.require(s.Vbar > sol[k - 1].Vbar, at + "Vbar increasing (" + show_num(sol[k - 1].Vbar, 10) + " -> " +
                                                    show_num(s.Vbar, 10) + ")");
    }
    for (const auto& g : fams) {
        auto V = g.column(&WelfareReport::V);
        const double vmax = *std::max_element(V.begin(), V.end());
        c.require(V.back() < vmax, g.name + ": V(rho_max) = " + show_num(V.back(), 10) + " < max V = " + show_num(vmax, 10));
    }
    return r;
}

CriterionResult criterion9(const RunConfig& cfg) {
    auto r = begin(9, "extensions: convex cost, binary effort, linear reputation");
    Check c(r);
    const Model m = cfg.model("normal");
    const auto cost = ConvexCost::quadratic();
    auto qgrid = num::logspace(0.5, 32.0, 16);
    std::vector<std::optional<GeneralCostEquilibrium>> qs(qgrid.size());
    parallel_for(qgrid.size(), [&](std::size_t i) { qs[i] = solve_convex_cost_equilibrium(m, qgrid[i], cost); });
    std::vector<double> qv;
    bool all = true;
    for (auto& e : qs) {
        all = all && e.has_value();
        qv.push_back(e ? e->V : std::numeric_limits<double>::quiet_NaN());
    }
    c.require(all, "quadratic cost: equilibrium at all 16 points of [0.5, 32]");
    if (all) {
        auto peak = std::max_element(qv.begin(), qv.end()) - qv.begin();
        c.require(peak > 0 && peak + 1 < static_cast<long>(qv.size()),
                  "quadratic cost: V peaks inside the grid at rho = " + show_num(qgrid[peak], 4) + " (V = " +
                      show_num(qv[peak], 6) + ", ends " + show_num(qv.front(), 6) + ", " + show_num(qv.back(), 6) + ")");
    }

    auto bgrid = num::logspace(2.0, 12.0, 12);
    std::vector<std::optional<BinaryEffortEquilibrium>> bs(bgrid.size());
    parallel_for(bgrid.size(), [&](std::size_t i) { bs[i] = binary_effort_equilibrium(m, bgrid[i], 1.0, 8.0); });
    all = true;
    std::vector<double> bv;
    for (auto& e : bs) {
        all = all && e.has_value();
        bv.push_back(e ? e->V : std::numeric_limits<double>::quiet_NaN());
    }
    c.require(all, "binary effort: equilibrium at all 12 points of [2, 12]");
    if (all) {
        auto peak = std::max_element(bv.begin(), bv.end()) - bv.begin();
        c.require(peak > 0 && peak + 1 < static_cast<long>(bv.size()),
                  "binary effort: V peaks inside the grid at rho = " + show_num(bgrid[peak], 4) + " (V = " +
                      show_num(bv[peak], 6) + ")");
        c.require(std::abs(bs.back()->theta_hat - 8.0) < 0.1,
                  "binary effort: theta_hat at rho = 12 is " + show_num(bs.back()->theta_hat, 8) + " (|. - 8| < 0.1)");
    }

    const double omega = 1.5;
    auto rgrid = num::logspace(0.1, 10.0, 25);
    bool inc = true, exact = true;
    double prev = -1;
    for (double rho : rgrid) {
        auto rep = linear_reputation(rho, 0.0, omega);
        inc = inc && rep.k > prev;
        exact = exact && rep.q == rep.k * (omega * omega);
        prev = rep.k;
    }
    c.require(inc, "reputation: k strictly increasing in rho over [0.1, 10]");
    c.require(exact, "reputation: q == k omega^2 at every point");
    return r;
}

// F(x) - F(x') for x > x', without cancellation in either tail.
double mass_between(const NoiseModel& n, double x, double xp) {
    if (xp >= 0) return n.cdf(-xp) - n.cdf(-x);
    return n.cdf(x) - n.cdf(xp);
}

CriterionResult criterion10(const std::vector<Family>& fams, std::uint64_t seed) {
    auto r = begin(10, "noise density: score bounds, asymptotic residuals, tail regularity");
    Check c(r);
    const double eps = std::numeric_limits<double>::epsilon();
    for (const auto& f : fams) {
        const auto& n = f.model.noise;
        CounterStream rng(seed, 10);
        int bad = 0, tested = 0;
        for (std::uint64_t k = 0; tested < 100; ++k) {
            auto u = rng.uniforms(k);
            double x = -6 + 12 * u[0], xp = -6 + 12 * u[1];
            if (x == xp) continue;
            if (x < xp) std::swap(x, xp);
            ++tested;
            const double mid = (n.pdf(x) - n.pdf(xp)) / mass_between(n, x, xp);
            const double sp = n.score(xp), s = n.score(x);
            // rounding slack only: the Laplace bounds hold with equality on a half-line
            const double slack = 64 * eps * std::max({std::abs(sp), std::abs(s), std::abs(mid), 1.0});
            if (!(sp + slack >= mid && mid + slack >= s)) ++bad;
        }
        c.require(bad == 0, f.name + ": f'(x')/f(x') >= [f(x)-f(x')]/[F(x)-F(x')] >= f'(x)/f(x) on 100 pairs (" +
                                std::to_string(bad) + " violations)");

        // residuals at p = 1e-2 .. 1e-6; values below the floor count as converged
        const double floor = 1e-12;
        auto decreasing = [&](const std::vector<double>& v) {
            for (std::size_t i = 1; i < v.size(); ++i)
                if (!(v[i] < v[i - 1] || v[i] <= floor)) return false;
            return true;
        };
        auto show = [&](const std::vector<double>& v) {
            std::string s;
            for (double y : v) s += (s.empty() ? "" : " ") + show_num(y, 3);
            return s;
        };
        for (double cc : {0.5, 2.0}) {
            std::vector<double> r1, r2;
            for (int e = 2; e <= 6; ++e) {
                const double p = std::pow(10.0, -e);
                r1.push_back(std::abs(n.b(cc * p) / n.b(p) - 1.0));
                r2.push_back(std::abs(n.inv_pdf_upper(cc * p).value() - n.inv_pdf_upper(p).value() +
                                      n.b(p) * std::log(cc)));
            }
            c.require(decreasing(r1), f.name + ": |b(cp)/b(p) - 1|, c = " + show_num(cc) + ": " + show(r1));
            c.require(decreasing(r2), f.name + ": |f^-1(cp) - f^-1(p) + b(p) ln c|, c = " + show_num(cc) + ": " + show(r2));
        }
        std::vector<double> r3;
        for (int e = 2; e <= 6; ++e) {
            const double p = std::pow(10.0, -e);
            r3.push_back(n.log_pdf(1.0 / p) - 2 * std::log(p) - std::log(n.b(p)));
        }
        bool strict = true;
        for (std::size_t i = 1; i < r3.size(); ++i) strict = strict && r3[i] < r3[i - 1];
        c.require(strict, f.name + ": ln[f(t/p) / (p^2 b(p))], t = 1, decreasing: " + show(r3));
        const double tr = n.tail_regularity(30.0);
        c.require(std::abs(tr - 1.0) < 0.01, f.name + ": tail regularity at z = 30 is " + show_num(tr, 8));
    }
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CriterionResult criterion11(const RunConfig& cfg) {
    auto r = begin(11, "repro outputs are byte-identical across runs and thread counts");
    Check c(r);
    const fs::path base = fs::temp_directory_path() / ("screenlab-acceptance-" + std::to_string(::getpid()));
    fs::remove_all(base);
    const unsigned runs[3] = {0, 0, 1};
    std::vector<std::vector<std::string>> files;
    for (int k = 0; k < 3; ++k) {
        fs::path dir = base / std::to_string(k);
        fs::create_directories(dir);
        files.push_back(write_repro_artifacts(cfg, dir.string(), runs[k]));
    }
    for (std::size_t i = 0; i < files[0].size(); ++i) {
        const auto name = fs::path(files[0][i]).filename();
        const auto a = slurp(base / "0" / name);
        const bool same = !a.empty() && a == slurp(base / "1" / name) && a == slurp(base / "2" / name);
        c.require(same, name.string() + " identical in 3 runs (default workers twice, then 1 worker)");
    }
    fs::remove_all(base);
    return r;
}

}  // namespace

std::vector<std::string> write_repro_artifacts(const RunConfig& cfg, const std::string& dir, unsigned workers) {
    std::vector<std::string> written;
    for (const char* fam : {"normal", "laplace"}) {
        const Model m = cfg.model(fam);
        auto s = sweep(m, config_grid(cfg, m), workers, tolerances(cfg));
        const std::string stem = (fs::path(dir) / (std::string("fig1-") + fam)).string();
        std::ostringstream csv, svg, c2;
        write_sweep_csv(csv, s);
        write_sweep_svg(svg, s, std::string(fam) + " noise: V, AR, U against rho");
        write_file(stem + ".csv", csv.str());
        write_file(stem + ".svg", svg.str());
        write_commit_sweep_csv(c2, s, commit_column(m, s, workers));
        const std::string fig2 = (fs::path(dir) / (std::string("fig2-") + fam + ".csv")).string();
        write_file(fig2, c2.str());
        written.insert(written.end(), {stem + ".csv", stem + ".svg", fig2});
    }
    return written;
}

std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, std::ostream* log) {
    auto note = [&](const std::string& s) {
        if (log) *log << s << std::endl;
    };
    std::vector<Family> fams;
    for (const char* name : {"normal", "laplace"}) {
        Family f{name, cfg.model(name), 0.0, {}, {}, 0.0};
        const auto t0 = Clock::now();
        f.rho_tilde = sigma_tilde(f.model).rho;
        f.rho = num::logspace(f.rho_tilde, kTopMultiple * f.rho_tilde, kPoints);
        f.sweep = sweep(f.model, f.rho, 0, tolerances(cfg));
        f.seconds = since(t0);
        note("swept " + f.name + " noise in " + show_num(f.seconds, 3) + " s");
        fams.push_back(std::move(f));
    }
    std::vector<CriterionResult> out;
    auto run = [&](auto&& fn) {
        const auto t0 = Clock::now();
        out.push_back(fn());
        out.back().seconds = since(t0);
        note("criterion " + std::to_string(out.back().id) + " done in " + show_num(out.back().seconds, 3) + " s");
    };
    run([&] { return criterion1(fams); });
    run([&] { return criterion2(fams); });
    run([&] { return criterion3(fams); });
    run([&] { return criterion4(fams); });
    run([&] { return criterion5(fams); });
    run([&] { return criterion6(fams[0], cfg.seed); });
    run([&] { return criterion7(fams[0], cfg.seed); });
    run([&] { return criterion8(fams, 0); });
    run([&] { return criterion9(cfg); });
    run([&] { return criterion10(fams, cfg.seed); });
    run([&] { return criterion11(cfg); });
    return out;
}

void print_criterion(std::ostream& out, const CriterionResult& r, bool with_notes) {
    out << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (" << show_num(r.seconds, 3) << " s)\n";
    if (with_notes)
        for (const auto& n : r.notes) out << "    " << n << '\n';
}

}  // namespace screenlab
