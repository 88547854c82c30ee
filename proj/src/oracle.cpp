#include "screenlab/oracle.hpp"
#include "screenlab/numerics.hpp"
#include "screenlab/parallel.hpp"
#include "screenlab/philox.hpp"

#include <cmath>
#include <stdexcept>

namespace screenlab {

double verify_agent_best_response(const Model& m, const Equilibrium& eq, const std::vector<double>& types,
                                  int effort_points) {
    if (eq.kind == EquilibriumKind::pooling) return 0.0;  // zero effort, never approved
    const double s = eq.sigma, tau = eq.tau.value();
    const double top = optimal_positive_effort(m, m.env.hi(), tau, s) + 6 * s;
    auto grid = num::linspace(0.0, top, effort_points);
    double worst = -INFINITY;
    for (double t : types) {
        auto payoff = [&](double e) { return m.noise.cdf((e - tau) / s) - e / t; };
        const double chosen = payoff(effort(m, eq, t));
        for (double e : grid) worst = std::max(worst, payoff(e) - chosen);
    }
    return std::max(worst, 0.0);
}

double verify_agent_best_response(const Model& m, const Equilibrium& eq, int type_points, int effort_points) {
    return verify_agent_best_response(m, eq, num::linspace(m.env.lo(), m.env.hi(), type_points), effort_points);
}

std::optional<double> verify_principal_indifference(const Model& m, const Equilibrium& eq) {
    if (eq.kind == EquilibriumKind::pooling) return std::nullopt;
    return verify_principal_indifference(m, eq, eq.tau.value());
}

double verify_principal_indifference(const Model& m, const Equilibrium& eq, double tau) {
    if (eq.kind == EquilibriumKind::pooling) throw std::invalid_argument("posterior check needs an effort schedule");
    const auto& env = m.env;
    const double s = eq.sigma;
    auto integrand = [&](double t) {
        return env.v(t) * env.g(t) * m.noise.pdf((tau - effort(m, eq, t)) / s) / s;
    };
    return num::quad_split(integrand, env.lo(), env.hi(), {eq.theta_hat, s / m.noise.peak()}, 1e-13);
}

double verify_convex_best_response(const Model& m, const GeneralCostEquilibrium& eq, const ConvexCost& cost,
                                   int type_points, int effort_points) {
    const double rho = eq.rho, tau = eq.tau;
    auto grid = num::linspace(0.0, tau + 6.0 / rho, effort_points);
    double worst = 0.0;
    for (double t : num::linspace(m.env.lo(), m.env.hi(), type_points)) {
        auto payoff = [&](double e) { return 1.0 - m.noise.cdf(rho * (tau - e)) - cost.cost(e, t); };
        const double chosen = convex_cost_best_response(m.noise, t, tau, rho, cost).payoff;
        for (double e : grid) worst = std::max(worst, payoff(e) - chosen);
    }
    return worst;
}

namespace {

struct Moments {
    double sum[5] = {0, 0, 0, 0, 0};
    double sq[5] = {0, 0, 0, 0, 0};
    void add(const double (&x)[5]) {
        for (int k = 0; k < 5; ++k) {
            sum[k] += x[k];
            sq[k] += x[k] * x[k];
        }
    }
};

constexpr std::uint32_t kStreams = 64;

}  // namespace

OracleReport monte_carlo_welfare(const Model& m, const Equilibrium& eq, std::uint64_t n, std::uint64_t seed,
                                 unsigned workers) {
    if (n < 10000) throw std::invalid_argument("monte_carlo_welfare: need n >= 1e4");
    const auto& env = m.env;
    const double tt = env.theta_tilde();
    const bool pooled = eq.kind == EquilibriumKind::pooling;
    std::vector<Moments> shard(kStreams);

    parallel_for(kStreams, [&](std::size_t k) {
        const std::uint64_t begin = n * k / kStreams, end = n * (k + 1) / kStreams;
        CounterStream rng(seed, static_cast<std::uint32_t>(k));
        Moments mom;
        for (std::uint64_t i = begin; i < end; ++i) {
            auto u = rng.uniforms(i);
            const double t = env.quantile(u[0]);
            const double e = effort(m, eq, t);
            bool approved = false;
            if (!pooled) {
                const double signal = e + eq.sigma * m.noise.quantile(u[1]);
                approved = signal > eq.tau.value();
            }
            const double a = approved ? 1.0 : 0.0;
            const double x[5] = {env.v(t) * a, a, a - e / t, (t >= tt) ? 1.0 - a : 0.0, (t < tt) ? a : 0.0};
            mom.add(x);
        }
        shard[k] = mom;
    }, workers);

    Moments total;
    for (const auto& s : shard)  // fixed order keeps the sum independent of scheduling
        for (int k = 0; k < 5; ++k) {
            total.sum[k] += s.sum[k];
            total.sq[k] += s.sq[k];
        }
    OracleReport r;
    r.seed = seed;
    r.n = n;
    double mean[5], se[5];
    for (int k = 0; k < 5; ++k) {
        mean[k] = total.sum[k] / n;
        double var = std::max(total.sq[k] / n - mean[k] * mean[k], 0.0) * n / (n - 1);
        se[k] = std::sqrt(var / n);
    }
    r.estimate = {mean[0], mean[1], mean[2], mean[3], mean[4]};
    r.std_error = {se[0], se[1], se[2], se[3], se[4]};
    return r;
}

OracleReport run_oracle(const Model& m, const Equilibrium& eq, std::uint64_t n, std::uint64_t seed,
                        unsigned workers) {
    OracleReport r = monte_carlo_welfare(m, eq, n, seed, workers);
    r.max_violation = verify_agent_best_response(m, eq);
    r.posterior_residual = verify_principal_indifference(m, eq);
    return r;
}

}  // namespace screenlab
