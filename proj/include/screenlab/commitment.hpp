#pragma once
#include <limits>
#include <vector>

#include "screenlab/equilibrium.hpp"

namespace screenlab {

struct CommitmentSolution {
    double sigma = 0.0;
    double tau_hat_star = 0.0;
    double theta_hat_star = 0.0;
    // ln(theta_hat_star - theta_tilde) when the optimum is above theta_tilde; nan otherwise
    double log_gap = std::numeric_limits<double>::quiet_NaN();
    double Vbar = 0.0;
    double foc_residual = 0.0;
    bool interior = true;
    bool degenerate = false;
    std::vector<double> near_optimal;  // other coarse-scan local maxima within 1e-6 of the best
};

double committed_value(const Model& m, ExtendedReal tau_hat, double sigma, double tol = 1e-13);

// d/d tau_hat of the committed value, from the induced threshold's implicit derivative.
double commitment_foc(const Model& m, double tau_hat, double sigma);

// First-order condition at theta_hat = theta_tilde + exp(u), in logs; increasing in u.
double commitment_foc_log_gap(const Model& m, double u, double sigma);

CommitmentSolution solve_commitment(const Model& m, double sigma);

}  // namespace screenlab
