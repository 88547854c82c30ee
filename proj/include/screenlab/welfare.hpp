#pragma once
#include <optional>
#include <vector>

#include "screenlab/equilibrium.hpp"

namespace screenlab {

struct WelfareReport {
    double V = 0.0;
    double AR = 0.0;
    double U = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
};

double principal_payoff(const Model& m, const Equilibrium& eq, double tol = 1e-13);
double approval_rate(const Model& m, const Equilibrium& eq, double tol = 1e-13);
double agent_payoff(const Model& m, const Equilibrium& eq, double tol = 1e-13);
std::pair<double, double> type_errors(const Model& m, const Equilibrium& eq, double tol = 1e-13);
WelfareReport evaluate(const Model& m, const Equilibrium& eq, double tol = 1e-13);

// Pr(approve | theta) in equilibrium.
double approval_probability(const Model& m, const Equilibrium& eq, double theta);

enum class Accuracy { more_accurate, less_accurate, equivalent, incomparable };
const char* to_string(Accuracy a);

struct AccuracyResult {
    Accuracy order = Accuracy::incomparable;
    std::vector<double> h_sigma;        // H_sigma(H_sigma^-1(p|theta)|theta') per p
    std::vector<double> h_sigma_prime;  // same under sigma'
    int violations = 0;                 // p points contradicting the reported order
};

// Compares the transmitted information about (theta, theta') under sigma against sigma'.
AccuracyResult accuracy_compare(const Model& m, double theta, double theta_prime, const Equilibrium& eq_sigma,
                                const Equilibrium& eq_sigma_prime, const std::vector<double>& p_grid);
AccuracyResult accuracy_compare(const Model& m, double theta, double theta_prime, double sigma,
                                double sigma_prime, const std::vector<double>& p_grid);

struct SweepRow {
    double rho = 0.0;
    double sigma = 0.0;
    bool exists = false;
    Equilibrium eq;
    WelfareReport welfare;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

struct Tolerances {
    double quad = 1e-13;
    double existence = 1e-12;
};

SweepRow sweep_point(const Model& m, double rho, const Tolerances& tol = {});
SweepResult sweep(const Model& m, const std::vector<double>& rho_grid, unsigned workers = 0,
                  const Tolerances& tol = {});

// Grid of `points` values between lo_mult*rho_tilde and hi_mult*rho_tilde.
std::vector<double> precision_grid(double rho_tilde, double lo_mult, double hi_mult, int points, bool log_spaced);

}  // namespace screenlab
