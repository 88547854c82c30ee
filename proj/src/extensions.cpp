#include "screenlab/extensions.hpp"
#include "screenlab/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace screenlab {

ConvexCost ConvexCost::quadratic() {
    return {"quadratic", [](double e, double t) { return e * e / (2 * t); }, [](double e, double t) { return e / t; }};
}

namespace {

double effort_payoff(const NoiseModel& noise, double e, double theta, double tau, double rho, const ConvexCost& c) {
    return 1.0 - noise.cdf(rho * (tau - e)) - c.cost(e, theta);
}

// Type nodes for fixed-order integration over a branch piece
const double kNodes[8] = {-0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
                          0.1834346424956498,  0.5255324099163290,  0.7966664774136267,  0.9602898564975363};
const double kWeights[8] = {0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
                            0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};

template <class Fn>
double piece_integral(Fn fn, double a, double b, int panels) {
    double s = 0.0;
    for (int k = 0; k < panels; ++k) {
        double lo = a + (b - a) * k / panels, hi = a + (b - a) * (k + 1) / panels;
        double c = 0.5 * (lo + hi), h = 0.5 * (hi - lo);
        for (int i = 0; i < 8; ++i) s += kWeights[i] * h * fn(c + h * kNodes[i]);
    }
    return s;
}

}  // namespace

ConvexBestResponse convex_cost_best_response(const NoiseModel& noise, double theta, double tau, double rho,
                                             const ConvexCost& cost, int grid_points) {
    const double sigma = 1.0 / rho;
    const double top = std::max(tau + 6 * sigma, 1e-9);
    auto foc = [&](double e) { return rho * noise.pdf(rho * (tau - e)) - cost.marginal(e, theta); };
    auto pay = [&](double e) { return effort_payoff(noise, e, theta, tau, rho, cost); };

    ConvexBestResponse br;
    auto grid = num::linspace(0.0, top, grid_points);
    double prev = foc(grid[0]);
    if (prev <= 0) br.local_maxima.push_back(0.0);
    for (int i = 1; i < grid_points; ++i) {
        double cur = foc(grid[i]);
        if (prev > 0 && cur <= 0) br.local_maxima.push_back(num::bisect(foc, grid[i - 1], grid[i], 1e-13, 100));
        prev = cur;
    }
    if (prev > 0) br.local_maxima.push_back(top);
    double best = -INFINITY;
    for (double e : br.local_maxima) {
        double p = pay(e);
        if (p >= best) {  // ties go to the larger effort
            best = p;
            br.effort = e;
        }
    }
    br.payoff = best;
    br.branch = br.effort >= tau ? Branch::high : Branch::low;
    return br;
}

namespace {

double argmax_effort(const Model& m, double theta, double tau, double rho, const ConvexCost& c) {
    return convex_cost_best_response(m.noise, theta, tau, rho, c).effort;
}

// Type where the argmax jumps to the high branch; theta_low when it never jumps.
double switch_type(const Model& m, double tau, double rho, const ConvexCost& c) {
    const int n = 33;
    auto types = num::linspace(m.env.lo(), m.env.hi(), n);
    std::vector<double> e(n);
    for (int i = 0; i < n; ++i) e[i] = argmax_effort(m, types[i], tau, rho, c);
    int at = -1;
    double jump = 0.0;
    for (int i = 1; i < n; ++i)
        if (e[i] - e[i - 1] > jump) {
            jump = e[i] - e[i - 1];
            at = i;
        }
    const double step = (tau + 6.0 / rho) / 2047.0;
    if (at < 0 || jump < 32 * step) return m.env.lo();
    const double mid = 0.5 * (e[at - 1] + e[at]);
    auto side = [&](double t) { return argmax_effort(m, t, tau, rho, c) >= mid ? 1.0 : -1.0; };
    return num::bisect(side, types[at - 1], types[at], 1e-11, 100);
}

}  // namespace

double convex_cost_residual(const Model& m, double tau, double rho, const ConvexCost& c, double* theta_hat,
                            double* value) {
    const auto& env = m.env;
    const double th = switch_type(m, tau, rho, c);
    auto density = [&](double t) {
        return env.v(t) * env.g(t) * rho * m.noise.pdf(rho * (tau - argmax_effort(m, t, tau, rho, c)));
    };
    double r = 0.0;
    if (th > env.lo()) r += piece_integral(density, env.lo(), th, 4);
    if (th < env.hi()) r += piece_integral(density, th, env.hi(), 4);
    if (theta_hat) *theta_hat = th;
    if (value) {
        auto approve = [&](double t) {
            return env.v(t) * env.g(t) * m.noise.cdf(-rho * (tau - argmax_effort(m, t, tau, rho, c)));
        };
        double v = 0.0;
        if (th > env.lo()) v += piece_integral(approve, env.lo(), th, 4);
        if (th < env.hi()) v += piece_integral(approve, th, env.hi(), 4);
        *value = v;
    }
    return r;
}

std::optional<GeneralCostEquilibrium> solve_convex_cost_equilibrium(const Model& m, double rho, const ConvexCost& c,
                                                                    int tau_scan) {
    // efforts never exceed the level where cost alone eats the whole prize
    double emax = 0.0;
    for (double e = 0.0; c.cost(e, m.env.hi()) < 1.0; e += 0.01) emax = e;
    const double tau_hi = emax + 6.0 / rho;
    auto resid = [&](double tau) { return convex_cost_residual(m, tau, rho, c); };

    std::vector<double> roots;
    auto grid = num::linspace(tau_hi / tau_scan, tau_hi, tau_scan);
    double prev = resid(grid[0]);
    for (int i = 1; i < tau_scan; ++i) {
        double cur = resid(grid[i]);
        // approve above tau: residual crosses from negative to positive
        if (prev < 0 && cur >= 0) roots.push_back(num::bisect(resid, grid[i - 1], grid[i], 1e-12, 100));
        prev = cur;
    }
    if (roots.empty()) return std::nullopt;

    GeneralCostEquilibrium best;
    double best_v = -INFINITY;
    for (double tau : roots) {
        double th = 0.0, v = 0.0;
        double r = convex_cost_residual(m, tau, rho, c, &th, &v);
        if (v > best_v) {
            if (best_v > -INFINITY) best.other_roots.push_back(best.tau);
            best_v = v;
            best.tau = tau;
            best.theta_hat = th;
            best.residual = r;
            best.V = v;
        } else {
            best.other_roots.push_back(tau);
        }
    }
    best.rho = rho;
    best.types = num::linspace(m.env.lo(), m.env.hi(), 41);
    for (double t : best.types) {
        auto br = convex_cost_best_response(m.noise, t, best.tau, rho, c);
        best.e_low.push_back(br.local_maxima.front());
        best.e_high.push_back(br.local_maxima.back());
    }
    return best;
}

double binary_delta(const NoiseModel& noise, double tau, double rho, double ebar) {
    return noise.cdf(rho * tau) - noise.cdf(rho * (tau - ebar));
}

std::optional<BinaryEffortEquilibrium> binary_effort_equilibrium(const Model& m, double rho, double ebar,
                                                                 double ckappa, int tau_scan) {
    const auto& env = m.env;
    const double Ev = env.mean_v();
    auto threshold = [&](double tau) {
        double d = binary_delta(m.noise, tau, rho, ebar);
        return d > 0 ? std::clamp(ckappa / d, env.lo(), env.hi()) : env.hi();
    };
    // f_rho(tau) I(th) + f_rho(tau - ebar) (E v - I(th)), common factor rho dropped
    auto resid = [&](double tau) {
        double I = env.I(threshold(tau));
        return m.noise.pdf(rho * tau) * I + m.noise.pdf(rho * (tau - ebar)) * (Ev - I);
    };
    auto value = [&](double tau, double th) {
        double I = env.I(th);
        return I * m.noise.cdf(-rho * tau) + (Ev - I) * m.noise.cdf(-rho * (tau - ebar));
    };
    auto brackets = num::sign_changes(resid, ebar / tau_scan, ebar * (1.0 - 1.0 / tau_scan), tau_scan - 1);
    if (brackets.empty()) return std::nullopt;

    BinaryEffortEquilibrium best;
    double best_v = -INFINITY;
    for (auto [a, b] : brackets) {
        double tau = num::bisect(resid, a, b, 1e-14, 200);
        double th = threshold(tau);
        double v = value(tau, th);
        if (v > best_v) {
            if (best_v > -INFINITY) best.other_roots.push_back(best.tau);
            best_v = v;
            best.tau = tau;
            best.theta_hat = th;
            best.V = v;
            best.residual = rho * resid(tau);
        } else {
            best.other_roots.push_back(tau);
        }
    }
    best.rho = rho;
    best.ebar = ebar;
    best.delta = binary_delta(m.noise, best.tau, rho, ebar);
    return best;
}

Reputation linear_reputation(double rho, double /*mu*/, double omega) {
    if (!(rho > 0) || !(omega > 0)) throw std::domain_error("linear_reputation: need rho, omega > 0");
    Reputation r;
    const double w2 = omega * omega;
    r.k = w2 / (w2 + 1.0 / (rho * rho));
    r.q = r.k * w2;
    return r;
}

}  // namespace screenlab
