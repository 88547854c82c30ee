#include "screenlab/environment.hpp"
#include "screenlab/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace screenlab {

Environment Environment::uniform_affine(double theta_low, double theta_high, double kappa) {
    if (!(theta_low > 0) || !(theta_low < theta_high))
        throw std::invalid_argument("environment: need 0 < theta_low < theta_high");
    EnvironmentSpec s;
    s.theta_low = theta_low;
    s.theta_high = theta_high;
    const double d = 1.0 / (theta_high - theta_low);
    s.g = [d](double) { return d; };
    s.v = [kappa](double t) { return t - kappa; };
    s.quantile = [theta_low, theta_high](double u) { return theta_low + (theta_high - theta_low) * u; };
    s.label = "uniform/affine";
    return Environment(std::move(s));
}

Environment::Environment(EnvironmentSpec spec) : spec_(std::move(spec)) {
    lo_ = spec_.theta_low;
    hi_ = spec_.theta_high;
    if (!(lo_ > 0) || !(lo_ < hi_)) throw std::invalid_argument("environment: need 0 < theta_low < theta_high");
    if (!spec_.g || !spec_.v) throw std::invalid_argument("environment: g and v are required");

    const double h = table_step();
    g_table_.assign(kCells + 1, 0.0);
    vg_table_.assign(kCells + 1, 0.0);
    k_table_.assign(kCells + 1, 0.0);
    for (int k = 0; k < kCells; ++k) {
        double a = lo_ + k * h, b = (k + 1 == kCells) ? hi_ : lo_ + (k + 1) * h;
        g_table_[k + 1] = g_table_[k] + num::gauss8([&](double t) { return kernel(Kernel::g, t); }, a, b);
        vg_table_[k + 1] = vg_table_[k] + num::gauss8([&](double t) { return kernel(Kernel::vg, t); }, a, b);
        k_table_[k + 1] = k_table_[k] + num::gauss8([&](double t) { return kernel(Kernel::vg_over_t, t); }, a, b);
    }
    if (std::abs(g_table_.back() - 1.0) > 1e-8) throw std::invalid_argument("environment: g does not integrate to 1");
    theta_tilde_ = find_theta_tilde();

    auto j = [this](double t) { return k_table_.back() - cumulative(k_table_, Kernel::vg_over_t, t); };
    const double a = lo_ + 1e-12;
    if (j(a) < 0 && theta_tilde_ > a) {
        // bisect to stagnation; 1e-10 is a floor, not a target
        theta_dagger_ = num::bisect(j, a, theta_tilde_, 0.0, 400);
        has_dagger_ = true;
    }
}

double Environment::kernel(Kernel k, double t) const {
    switch (k) {
        case Kernel::g: return spec_.g(t);
        case Kernel::vg: return spec_.v(t) * spec_.g(t);
        default: return spec_.v(t) * spec_.g(t) / t;
    }
}

double Environment::cumulative(const std::vector<double>& table, Kernel kind, double t) const {
    if (t <= lo_) return 0.0;
    if (t >= hi_) return table.back();
    const double h = table_step();
    int k = static_cast<int>((t - lo_) / h);
    if (k >= kCells) k = kCells - 1;
    double a = lo_ + k * h;
    auto fn = [&](double s) { return kernel(kind, s); };
    return table[k] + (t > a ? num::gauss8(fn, a, t) : -num::gauss8(fn, t, a));
}

double Environment::theta_dagger() const {
    if (!has_dagger_) throw std::domain_error("theta_dagger: J(theta_low) >= 0, prior not pessimistic");
    return theta_dagger_;
}

double Environment::G(double t) const { return cumulative(g_table_, Kernel::g, t); }

double Environment::I(double t) const { return cumulative(vg_table_, Kernel::vg, t); }

double Environment::J(double t) const {
    if (has_dagger_ && std::abs(t - theta_dagger_) < 0.5) {
        // anchored at the dagger, where J vanishes, so no cancellation
        return num::gauss8_composite([&](double s) { return kernel(Kernel::vg_over_t, s); }, t, theta_dagger_, 4);
    }
    return k_table_.back() - cumulative(k_table_, Kernel::vg_over_t, t);
}

double Environment::log_J_above_dagger(double log_h) const {
    const double d = theta_dagger();
    const double h = std::exp(log_h);
    // h * int_0^1 (-v g / theta)(d + h s) ds; h may underflow, and d + h is never formed
    auto neg = [&](double s) { return -kernel(Kernel::vg_over_t, d + h * s); };
    return log_h + std::log(num::gauss8_composite(neg, 0.0, 1.0, log_h < -30.0 ? 1 : 16));
}

double Environment::ratio_R(double t) const {
    if (t <= lo_) throw std::domain_error("ratio_R: zero denominator at theta_low");
    return J(t) / I(t);
}

double Environment::quantile(double u) const {
    if (u <= 0) return lo_;
    if (u >= 1) return hi_;
    if (spec_.quantile) return spec_.quantile(u);
    return num::bisect([&](double t) { return G(t) - u; }, lo_, hi_, 1e-14);
}

double Environment::find_theta_tilde() const {
    if (spec_.v(lo_) >= 0) return lo_;
    if (spec_.v(hi_) < 0) throw std::domain_error("theta_tilde: v < 0 everywhere");
    return num::bisect(spec_.v, lo_, hi_, 0.0, 400);
}

bool EnvironmentReport::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

EnvironmentReport validate_environment(const Environment& env, int resolution) {
    EnvironmentReport r;
    r.mean_v = env.mean_v();
    const double pg = env.prob_good();
    r.mean_v_good = pg > 0 ? (env.I(env.hi()) - env.I(env.theta_tilde())) / pg : 0.0;
    auto grid = num::linspace(env.lo(), env.hi(), resolution);

    CheckResult gpos{"g positive", true, 0.0, {}};
    for (double t : grid)
        if (!(env.g(t) > 0)) {
            gpos.pass = false;
            gpos.at = t;
            break;
        }
    r.checks.push_back(gpos);

    CheckResult vmono{"v non-decreasing", true, 0.0, {}};
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (env.v(grid[i]) < env.v(grid[i - 1])) {
            vmono.pass = false;
            vmono.at = grid[i];
            break;
        }
    r.checks.push_back(vmono);

    CheckResult pess{"pessimistic prior", true, 0.0, {}};
    if (r.mean_v > 0) {
        pess.pass = false;
        pess.detail = "E[v] = " + std::to_string(r.mean_v);
    }
    r.checks.push_back(pess);

    CheckResult good{"good types valuable", true, 0.0, {}};
    if (!(r.mean_v_good > 0)) good.pass = false;
    r.checks.push_back(good);

    CheckResult dag{"dagger inside (lo, tilde)", true, 0.0, {}};
    if (!env.has_theta_dagger() || !(env.theta_dagger() > env.lo() && env.theta_dagger() < env.theta_tilde()))
        dag.pass = false;
    r.checks.push_back(dag);
    return r;
}

}  // namespace screenlab
