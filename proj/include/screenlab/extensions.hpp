#pragma once
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "screenlab/equilibrium.hpp"

namespace screenlab {

// C(e, theta) with C(0, .) = 0, C_e >= 0, C_ee >= 0, C_e_theta <= 0.
struct ConvexCost {
    std::string name;
    std::function<double(double, double)> cost;
    std::function<double(double, double)> marginal;
    static ConvexCost quadratic();  // e^2 / (2 theta)
};

enum class Branch { low, high };

struct ConvexBestResponse {
    double effort = 0.0;
    double payoff = 0.0;
    Branch branch = Branch::low;
    std::vector<double> local_maxima;  // ascending; includes the corner when it is one
};

ConvexBestResponse convex_cost_best_response(const NoiseModel& noise, double theta, double tau, double rho,
                                             const ConvexCost& cost, int grid_points = 2048);

struct GeneralCostEquilibrium {
    double rho = 0.0;
    double tau = 0.0;
    double theta_hat = 0.0;  // branch switch; theta_low when no switch occurs
    double residual = 0.0;
    double V = 0.0;
    std::vector<double> types, e_low, e_high;
    std::vector<double> other_roots;  // further standards with zero residual, not selected
};

// Principal residual int v g f_rho(tau - e*(theta)) at standard tau.
double convex_cost_residual(const Model& m, double tau, double rho, const ConvexCost& cost, double* theta_hat = nullptr,
                            double* value = nullptr);

std::optional<GeneralCostEquilibrium> solve_convex_cost_equilibrium(const Model& m, double rho,
                                                                    const ConvexCost& cost, int tau_scan = 48);

struct BinaryEffortEquilibrium {
    double rho = 0.0;
    double ebar = 1.0;
    double tau = 0.0;
    double theta_hat = 0.0;
    double delta = 0.0;
    double residual = 0.0;
    double V = 0.0;
    std::vector<double> other_roots;
};

double binary_delta(const NoiseModel& noise, double tau, double rho, double ebar);

// Cost c(theta) = ckappa / theta.
std::optional<BinaryEffortEquilibrium> binary_effort_equilibrium(const Model& m, double rho, double ebar,
                                                                 double ckappa, int tau_scan = 400);

struct Reputation {
    double k = 0.0;
    double q = 0.0;
};

Reputation linear_reputation(double rho, double mu, double omega);

}  // namespace screenlab
