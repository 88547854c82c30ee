#pragma once
#include <optional>
#include <vector>

#include "screenlab/environment.hpp"
#include "screenlab/extended.hpp"
#include "screenlab/noise.hpp"

namespace screenlab {

struct Model {
    NoiseModel noise;
    Environment env;
};

struct SolverInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class EquilibriumKind { semi_separating, pooling };

struct Equilibrium {
    EquilibriumKind kind = EquilibriumKind::pooling;
    double sigma = 0.0;
    double rho = 0.0;
    ExtendedReal tau = ExtendedReal::plus_infinity();
    ExtendedReal tau_hat = ExtendedReal::plus_infinity();
    double theta_hat = 0.0;
    // ln(theta_hat - theta_dagger); carries theta_hat when it rounds to the dagger
    double log_gap = 0.0;
    double q_residual = 0.0;
    double pbr_residual = 0.0;
    double fixed_point_residual = 0.0;
};

Equilibrium pooling_equilibrium(const Model& m, double sigma);

// Effort of a participating type: max{tau + sigma f^-1(sigma/theta), 0}.
double optimal_positive_effort(const Model& m, double theta, double tau, double sigma);

// Agent indifference Q(theta_hat, tau_hat); increasing in theta_hat.
double indifference_Q(const Model& m, double theta_hat, double tau_hat, double sigma);

// Threshold type for a given adjusted standard (clamped to the type range).
double agent_threshold(const Model& m, ExtendedReal tau_hat, double sigma);

// Inverse of agent_threshold on the interior: the tau_hat solving Q(theta_hat, .) = 0.
double agent_standard(const Model& m, double theta_hat, double sigma);

// Principal's adjusted standard f^-1(-sigma R(theta_hat)).
ExtendedReal principal_standard(const Model& m, double theta_hat, double sigma);

// Same standard at theta_hat = dagger + exp(log_gap).
ExtendedReal principal_standard_log_gap(const Model& m, double log_gap, double sigma);

// P(theta_hat) = agent_threshold(principal_standard(theta_hat)) - theta_hat.
double fixed_point_map(const Model& m, double theta_hat, double sigma);

// existence_slack: r at the upper end of the bracket may be this far below zero.
std::optional<Equilibrium> solve_semiseparating(const Model& m, double sigma, double existence_slack = 1e-12);

// Semi-separating when it exists, pooling otherwise.
Equilibrium solve(const Model& m, double sigma, double existence_slack = 1e-12);

double effort(const Model& m, const Equilibrium& eq, double theta);

struct SigmaTilde {
    double sigma = 0.0;
    double rho = 0.0;
    double residual = 0.0;
    std::vector<double> crossings;  // all sign changes found by the scan
    bool multiple() const { return crossings.size() > 1; }
};

double sigma_tilde_residual(const Model& m, double sigma);
SigmaTilde sigma_tilde(const Model& m, int scan_points = 512);

}  // namespace screenlab
