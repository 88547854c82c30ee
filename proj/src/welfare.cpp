#include "screenlab/welfare.hpp"
#include "screenlab/numerics.hpp"
#include "screenlab/parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace screenlab {

namespace {

bool pooled(const Equilibrium& eq) { return eq.kind == EquilibriumKind::pooling; }

// F(f^-1(sigma/theta)): approval probability of a participating type
double pass_prob(const Model& m, double theta, double sigma) {
    return m.noise.cdf(m.noise.inv_pdf_upper(sigma / theta).value());
}

double fail_prob(const Model& m, double theta, double sigma) {
    return m.noise.cdf(-m.noise.inv_pdf_upper(sigma / theta).value());
}

double lucky(const Model& m, const Equilibrium& eq) { return m.noise.cdf(-eq.tau_hat.value()); }

// type below which sigma/theta exceeds the peak density
double kink(const Model& m, const Equilibrium& eq) { return eq.sigma / m.noise.peak(); }

}  // namespace

double approval_probability(const Model& m, const Equilibrium& eq, double theta) {
    if (pooled(eq)) return 0.0;
    return theta < eq.theta_hat ? lucky(m, eq) : pass_prob(m, theta, eq.sigma);
}

double principal_payoff(const Model& m, const Equilibrium& eq, double tol) {
    if (pooled(eq)) return 0.0;
    const auto& env = m.env;
    double upper = num::quad_split([&](double t) { return env.v(t) * env.g(t) * pass_prob(m, t, eq.sigma); },
                             eq.theta_hat, env.hi(), {kink(m, eq)}, tol);
    return env.I(eq.theta_hat) * lucky(m, eq) + upper;
}

double approval_rate(const Model& m, const Equilibrium& eq, double tol) {
    if (pooled(eq)) return 0.0;
    const auto& env = m.env;
    double upper = num::quad_split([&](double t) { return env.g(t) * pass_prob(m, t, eq.sigma); }, eq.theta_hat,
                                   env.hi(), {kink(m, eq)}, tol);
    return env.G(eq.theta_hat) * lucky(m, eq) + upper;
}

double agent_payoff(const Model& m, const Equilibrium& eq, double tol) {
    if (pooled(eq)) return 0.0;
    const auto& env = m.env;
    const double s = eq.sigma, th = eq.tau_hat.value();
    double cost = num::quad_split(
        [&](double t) { return env.g(t) * (s / t) * (th + m.noise.inv_pdf_upper(s / t).value()); },
        eq.theta_hat, env.hi(), {kink(m, eq)}, tol);
    return approval_rate(m, eq, tol) - cost;
}

std::pair<double, double> type_errors(const Model& m, const Equilibrium& eq, double tol) {
    const auto& env = m.env;
    const double tt = env.theta_tilde();
    if (pooled(eq)) return {env.prob_good(), 0.0};
    const double s = eq.sigma;
    const double F0 = lucky(m, eq);
    // types in [tilde, theta_hat) exert no effort; empty for semi-separating outcomes
    double alpha = 0.0, beta = 0.0;
    if (eq.theta_hat > tt) alpha += (env.G(eq.theta_hat) - env.G(tt)) * (1.0 - F0);
    alpha += num::quad_split([&](double t) { return env.g(t) * fail_prob(m, t, s); }, std::max(tt, eq.theta_hat),
                             env.hi(), {kink(m, eq)}, tol);
    beta = env.G(std::min(eq.theta_hat, tt)) * F0;
    if (eq.theta_hat < tt)
        beta += num::quad_split([&](double t) { return env.g(t) * pass_prob(m, t, s); }, eq.theta_hat, tt, {kink(m, eq)}, tol);
    return {alpha, beta};
}

WelfareReport evaluate(const Model& m, const Equilibrium& eq, double tol) {
    WelfareReport w;
    w.V = principal_payoff(m, eq, tol);
    w.AR = approval_rate(m, eq, tol);
    w.U = agent_payoff(m, eq, tol);
    std::tie(w.alpha, w.beta) = type_errors(m, eq, tol);
    return w;
}

const char* to_string(Accuracy a) {
    switch (a) {
        case Accuracy::more_accurate: return "MoreAccurate";
        case Accuracy::less_accurate: return "LessAccurate";
        case Accuracy::equivalent: return "Equivalent";
        default: return "Incomparable";
    }
}

AccuracyResult accuracy_compare(const Model& m, double theta, double theta_prime, const Equilibrium& a,
                                const Equilibrium& b, const std::vector<double>& p_grid) {
    if (!(theta < theta_prime)) throw std::domain_error("accuracy_compare: need theta < theta'");
    auto shift = [&](const Equilibrium& eq) {
        return (effort(m, eq, theta) - effort(m, eq, theta_prime)) / eq.sigma;
    };
    const double sa = shift(a), sb = shift(b);
    AccuracyResult r;
    int below = 0, above = 0;
    for (double p : p_grid) {
        double q = m.noise.quantile(p);
        double ha = m.noise.cdf(q + sa), hb = m.noise.cdf(q + sb);
        r.h_sigma.push_back(ha);
        r.h_sigma_prime.push_back(hb);
        if (ha < hb) ++below;
        if (ha > hb) ++above;
    }
    if (below == 0 && above == 0)
        r.order = Accuracy::equivalent;
    else if (above == 0)
        r.order = Accuracy::more_accurate;
    else if (below == 0)
        r.order = Accuracy::less_accurate;
    else
        r.order = Accuracy::incomparable;
    r.violations = r.order == Accuracy::incomparable ? std::min(below, above) : 0;
    return r;
}

AccuracyResult accuracy_compare(const Model& m, double theta, double theta_prime, double sigma,
                                double sigma_prime, const std::vector<double>& p_grid) {
    return accuracy_compare(m, theta, theta_prime, solve(m, sigma), solve(m, sigma_prime), p_grid);
}

SweepRow sweep_point(const Model& m, double rho, const Tolerances& tol) {
    SweepRow row;
    row.rho = rho;
    row.sigma = 1.0 / rho;
    auto eq = solve_semiseparating(m, row.sigma, tol.existence);
    row.exists = eq.has_value();
    row.eq = eq ? *eq : pooling_equilibrium(m, row.sigma);
    row.welfare = evaluate(m, row.eq, tol.quad);
    return row;
}

SweepResult sweep(const Model& m, const std::vector<double>& rho_grid, unsigned workers, const Tolerances& tol) {
    for (std::size_t i = 1; i < rho_grid.size(); ++i)
        if (!(rho_grid[i] > rho_grid[i - 1])) throw std::invalid_argument("sweep: grid must be increasing");
    SweepResult out;
    out.rows.resize(rho_grid.size());
    parallel_for(rho_grid.size(), [&](std::size_t i) { out.rows[i] = sweep_point(m, rho_grid[i], tol); }, workers);
    return out;
}

std::vector<double> precision_grid(double rho_tilde, double lo_mult, double hi_mult, int points, bool log_spaced) {
    if (points < 2) throw std::invalid_argument("precision grid needs at least 2 points");
    return log_spaced ? num::logspace(lo_mult * rho_tilde, hi_mult * rho_tilde, points)
                      : num::linspace(lo_mult * rho_tilde, hi_mult * rho_tilde, points);
}

}  // namespace screenlab
