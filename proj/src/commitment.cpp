#include "screenlab/commitment.hpp"
#include "screenlab/numerics.hpp"

#include <cmath>

namespace screenlab {

double committed_value(const Model& m, ExtendedReal tau_hat, double sigma, double tol) {
    if (tau_hat.is_plus_infinity()) return 0.0;
    const auto& env = m.env;
    const double t = agent_threshold(m, tau_hat, sigma);
    const double lucky = m.noise.cdf(-tau_hat.as_double());
    double upper = num::quad_split(
        [&](double s) { return env.v(s) * env.g(s) * m.noise.cdf(m.noise.inv_pdf_upper(sigma / s).value()); }, t,
        env.hi(), {sigma / m.noise.peak()}, tol);
    return env.I(t) * lucky + upper;
}

double commitment_foc(const Model& m, double tau_hat, double sigma) {
    const auto& env = m.env;
    const double t = agent_threshold(m, tau_hat, sigma);
    const double x = m.noise.inv_pdf_upper(sigma / t).value();
    const double dq_dt = (tau_hat + x) * sigma / (t * t);
    const double dq_dtau = m.noise.pdf(tau_hat) - sigma / t;
    const double dtheta = (t > env.lo() && t < env.hi()) ? -dq_dtau / dq_dt : 0.0;
    return -env.I(t) * m.noise.pdf(tau_hat) +
           env.v(t) * env.g(t) * (m.noise.cdf(-tau_hat) - m.noise.cdf(x)) * dtheta;
}

namespace {

// ln v(theta_tilde + exp(u)); linearised once the gap is below what the sum resolves
double log_v_above_tilde(const Environment& env, double u) {
    const double tt = env.theta_tilde(), h = std::exp(u);
    if (h > 1e-4) return std::log(env.v(tt + h));
    const double d = 1e-3;
    const double slope = (env.v(tt + d) - env.v(tt - d)) / (2 * d);
    return u + std::log(slope);
}

}  // namespace

double commitment_foc_log_gap(const Model& m, double u, double sigma) {
    const auto& env = m.env;
    const double t = env.theta_tilde() + std::exp(u);
    const double tau_hat = agent_standard(m, t, sigma);
    const double x = m.noise.inv_pdf_upper(sigma / t).value();
    // d tau_hat / d theta_hat along the agent indifference
    const double slope = (tau_hat + x) * sigma / (t * t) / (sigma / t - m.noise.pdf(tau_hat));
    const double rhs = std::log(-env.I(t)) + m.noise.log_pdf(tau_hat) + std::log(slope);
    const double lhs = log_v_above_tilde(env, u) + std::log(env.g(t)) + std::log(m.noise.cdf(x) - m.noise.cdf(-tau_hat));
    return lhs - rhs;
}

CommitmentSolution solve_commitment(const Model& m, double sigma) {
    CommitmentSolution out;
    out.sigma = sigma;
    const double hi = agent_standard(m, m.env.hi(), sigma);
    auto value = [&](double th) { return committed_value(m, th, sigma); };

    const int n = 65;
    auto grid = num::linspace(0.0, hi, n);
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = value(grid[i]);
    int best = 0;
    for (int i = 1; i < n; ++i)
        if (vals[i] > vals[best]) best = i;
    if (vals[best] <= 0) {
        out.degenerate = true;
        out.tau_hat_star = grid[best];
        out.theta_hat_star = agent_threshold(m, grid[best], sigma);
        out.Vbar = vals[best];
        return out;
    }
    double a = grid[std::max(best - 1, 0)], b = grid[std::min(best + 1, n - 1)];
    auto g = num::golden_max(value, a, b, 1e-8);
    out.tau_hat_star = g.x;
    out.Vbar = g.fx;
    out.theta_hat_star = agent_threshold(m, g.x, sigma);
    out.interior = g.x > 1e-6 && g.x < hi - 1e-6;

    // near theta_tilde the optimal gap is of order f(tau_hat): solve for it in logs
    const double tt = m.env.theta_tilde();
    if (out.interior && std::abs(out.theta_hat_star - tt) < 1e-3) {
        auto foc = [&](double u) { return commitment_foc_log_gap(m, u, sigma); };
        double u_hi = std::log(1e-2), u_lo = -1.0;
        while (foc(u_lo) > 0 && u_lo > -1e7) u_lo *= 2;
        if (foc(u_hi) > 0 && foc(u_lo) < 0) {
            const double u = num::bisect(foc, u_lo, u_hi, 0.0);
            const double t = tt + std::exp(u);
            const double th = agent_standard(m, t, sigma);
            const double v = value(th);
            if (v >= out.Vbar - 1e-13) {
                out.tau_hat_star = th;
                out.theta_hat_star = t;
                out.Vbar = v;
                out.log_gap = u;
            }
        }
    } else if (out.theta_hat_star > tt) {
        out.log_gap = std::log(out.theta_hat_star - tt);
    }
    out.foc_residual = commitment_foc(m, out.tau_hat_star, sigma);

    for (int i = 0; i < n; ++i) {
        if (i == best) continue;
        bool left = i == 0 || vals[i] >= vals[i - 1];
        bool right = i == n - 1 || vals[i] >= vals[i + 1];
        if (left && right && vals[i] >= out.Vbar - 1e-6) out.near_optimal.push_back(grid[i]);
    }
    return out;
}

}  // namespace screenlab
