#pragma once
#include <functional>
#include <string>
#include <vector>

#include "screenlab/noise.hpp"

namespace screenlab {

struct EnvironmentSpec {
    double theta_low = 5.0;
    double theta_high = 15.0;
    std::function<double(double)> g;  // type density
    std::function<double(double)> v;  // payoff from approving
    std::function<double(double)> quantile;  // optional closed-form inverse of G
    std::string label = "custom";
};

class Environment {
public:
    static Environment uniform_affine(double theta_low, double theta_high, double kappa);
    explicit Environment(EnvironmentSpec spec);

    double lo() const { return lo_; }
    double hi() const { return hi_; }
    double g(double t) const { return spec_.g(t); }
    double v(double t) const { return spec_.v(t); }
    const std::string& label() const { return spec_.label; }

    double theta_tilde() const { return theta_tilde_; }
    double theta_dagger() const;  // throws if the prior is not pessimistic
    bool has_theta_dagger() const { return has_dagger_; }

    double G(double t) const;  // Pr(theta <= t)
    double I(double t) const;  // int_lo^t v g
    double J(double t) const;  // int_t^hi v g / theta
    // log of int_{dagger}^{dagger+h} (-v g / theta), h = exp(log_h); exact near the dagger.
    double log_J_above_dagger(double log_h) const;
    double ratio_R(double t) const;
    double mean_v() const { return I(hi_); }
    double prob_good() const { return 1.0 - G(theta_tilde_); }
    double quantile(double u) const;  // inverse of G

    double table_step() const { return (hi_ - lo_) / kCells; }

    static constexpr int kCells = 4096;

private:
    enum class Kernel { g, vg, vg_over_t };
    double kernel(Kernel k, double t) const;
    double cumulative(const std::vector<double>& table, Kernel k, double t) const;
    double find_theta_tilde() const;

    EnvironmentSpec spec_;
    double lo_, hi_;
    std::vector<double> g_table_, vg_table_, k_table_;
    double theta_tilde_ = 0.0, theta_dagger_ = 0.0;
    bool has_dagger_ = false;
};

struct EnvironmentReport {
    std::vector<CheckResult> checks;
    double mean_v = 0.0;
    double mean_v_good = 0.0;  // E[v | theta >= theta_tilde]
    bool ok() const;
};

EnvironmentReport validate_environment(const Environment& env, int resolution = 2001);

}  // namespace screenlab
