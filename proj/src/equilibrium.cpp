#include "screenlab/equilibrium.hpp"
#include "screenlab/numerics.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace screenlab {

namespace {

// f^-1(sigma/theta), zero above the peak
double interior_offset(const Model& m, double theta, double sigma) {
    return m.noise.inv_pdf_upper(sigma / theta).value();
}

// ln(-sigma R(dagger + h)) from the log gap; both integrals anchored to avoid cancellation
double log_neg_sigma_R(const Model& m, double log_gap, double sigma) {
    const double t = m.env.theta_dagger() + std::exp(log_gap);
    return std::log(sigma) + m.env.log_J_above_dagger(log_gap) - std::log(-m.env.I(t));
}

}  // namespace

Equilibrium pooling_equilibrium(const Model& m, double sigma) {
    Equilibrium eq;
    eq.kind = EquilibriumKind::pooling;
    eq.sigma = sigma;
    eq.rho = 1.0 / sigma;
    eq.theta_hat = m.env.hi();
    eq.log_gap = std::log(m.env.hi() - m.env.theta_dagger());
    return eq;
}

double optimal_positive_effort(const Model& m, double theta, double tau, double sigma) {
    return std::max(tau + sigma * interior_offset(m, theta, sigma), 0.0);
}

double indifference_Q(const Model& m, double theta_hat, double tau_hat, double sigma) {
    const double x = interior_offset(m, theta_hat, sigma);
    return m.noise.cdf(x) - (tau_hat + x) * sigma / theta_hat - m.noise.cdf(-tau_hat);
}

double agent_threshold(const Model& m, ExtendedReal tau_hat, double sigma) {
    const double lo = m.env.lo(), hi = m.env.hi();
    if (tau_hat.is_plus_infinity()) return hi;
    if (tau_hat.is_minus_infinity()) return lo;
    const double th = tau_hat.value();
    if (th < 0) return std::clamp(sigma / m.noise.pdf(-th), lo, hi);
    auto q = [&](double t) { return indifference_Q(m, t, th, sigma); };
    if (q(lo) >= 0) return lo;
    if (q(hi) <= 0) return hi;
    return num::bisect(q, lo, hi, 0.0, 200);
}

double agent_standard(const Model& m, double theta_hat, double sigma) {
    const double x = interior_offset(m, theta_hat, sigma);
    if (x == 0.0) return 0.0;
    // Q(theta_hat, .) rises on [0, x] and falls on [x, inf); the relevant root is on the falling side
    auto q = [&](double t) { return indifference_Q(m, theta_hat, t, sigma); };
    double b = x + theta_hat / sigma + 1.0;
    return num::bisect(q, x, b, 0.0, 400);
}

ExtendedReal principal_standard(const Model& m, double theta_hat, double sigma) {
    const double d = m.env.theta_dagger();
    if (theta_hat < d) throw std::domain_error("principal_standard: R > 0 below theta_dagger");
    if (theta_hat == d) return ExtendedReal::plus_infinity();
    if (theta_hat - d < 0.5) return principal_standard_log_gap(m, std::log(theta_hat - d), sigma);
    double lp;
    {
        double r = m.env.ratio_R(theta_hat);
        if (r > 0) throw std::domain_error("principal_standard: R > 0");
        lp = std::log(-sigma * r);
    }
    if (lp > std::log(m.noise.peak()) + 1e-15) throw std::domain_error("principal_standard: noise too large");
    return m.noise.inv_pdf_upper_log(lp);
}

ExtendedReal principal_standard_log_gap(const Model& m, double log_gap, double sigma) {
    if (log_gap == -std::numeric_limits<double>::infinity()) return ExtendedReal::plus_infinity();
    const double lp = log_neg_sigma_R(m, log_gap, sigma);
    if (lp > std::log(m.noise.peak()) + 1e-15) throw std::domain_error("principal_standard: noise too large");
    return m.noise.inv_pdf_upper_log(lp);
}

double fixed_point_map(const Model& m, double theta_hat, double sigma) {
    return agent_threshold(m, principal_standard(m, theta_hat, sigma), sigma) - theta_hat;
}

std::optional<Equilibrium> solve_semiseparating(const Model& m, double sigma, double existence_slack) {
    const double d = m.env.theta_dagger(), tt = m.env.theta_tilde();
    // r(L) = ln(-sigma R) - ln f(tau_hat_A) with L = ln(theta_hat - dagger); increasing in L
    auto r = [&](double L) {
        double t = std::min(d + std::exp(L), tt);
        double ta = agent_standard(m, t, sigma);
        return log_neg_sigma_R(m, L, sigma) - m.noise.log_pdf(ta);
    };
    const double L_hi = std::log(tt - d);
    const double r_hi = r(L_hi);
    if (r_hi < -existence_slack) return std::nullopt;

    double L;
    if (r_hi <= 0) {
        L = L_hi;
    } else {
        double L_lo = L_hi - 20.0;
        while (r(L_lo) >= 0) {
            L_lo = L_hi - 2.0 * (L_hi - L_lo);
            if (L_lo < -1e12) throw SolverInconsistency("solve_semiseparating: lower bracket not found");
        }
        L = num::bisect(r, L_lo, L_hi, 0.0, 400);
    }

    Equilibrium eq;
    eq.kind = EquilibriumKind::semi_separating;
    eq.sigma = sigma;
    eq.rho = 1.0 / sigma;
    eq.log_gap = L;
    eq.theta_hat = std::min(d + std::exp(L), tt);
    const double th = agent_standard(m, eq.theta_hat, sigma);
    eq.tau_hat = th;
    eq.tau = th * sigma;
    eq.q_residual = indifference_Q(m, eq.theta_hat, th, sigma);
    eq.pbr_residual = m.noise.pdf(th) * m.env.I(eq.theta_hat) + sigma * m.env.J(eq.theta_hat);
    eq.fixed_point_residual =
        agent_threshold(m, principal_standard_log_gap(m, L, sigma), sigma) - eq.theta_hat;
    if (!(eq.theta_hat >= d) || !(th >= 0))
        throw SolverInconsistency("solve_semiseparating: solution outside (dagger, tilde]");
    return eq;
}

Equilibrium solve(const Model& m, double sigma, double existence_slack) {
    auto eq = solve_semiseparating(m, sigma, existence_slack);
    return eq ? *eq : pooling_equilibrium(m, sigma);
}

double effort(const Model& m, const Equilibrium& eq, double theta) {
    if (eq.kind == EquilibriumKind::pooling || theta < eq.theta_hat) return 0.0;
    return optimal_positive_effort(m, theta, eq.tau.value(), eq.sigma);
}

double sigma_tilde_residual(const Model& m, double sigma) {
    const double tt = m.env.theta_tilde();
    const double x = interior_offset(m, tt, sigma);
    const double y = m.noise.inv_pdf_upper(-sigma * m.env.ratio_R(tt)).value();
    return (sigma / tt) * (x + y) - (m.noise.cdf(x) - m.noise.cdf(-y));
}

SigmaTilde sigma_tilde(const Model& m, int scan_points) {
    const double tt = m.env.theta_tilde();
    const double smax = tt * m.noise.peak() * 0.999;
    auto fn = [&](double s) { return sigma_tilde_residual(m, s); };
    auto brackets = num::sign_changes(fn, smax / scan_points, smax, scan_points);
    if (brackets.empty()) throw std::runtime_error("sigma_tilde: threshold not found");
    SigmaTilde out;
    for (auto [a, b] : brackets) out.crossings.push_back(num::bisect(fn, a, b, 0.0, 400));
    out.sigma = out.crossings.front();
    out.rho = 1.0 / out.sigma;
    out.residual = fn(out.sigma);
    return out;
}

}  // namespace screenlab
