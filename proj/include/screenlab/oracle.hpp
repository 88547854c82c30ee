#pragma once
#include <cstdint>
#include <optional>
#include <vector>

#include "screenlab/equilibrium.hpp"
#include "screenlab/extensions.hpp"
#include "screenlab/welfare.hpp"

namespace screenlab {

// Largest payoff gain any grid effort offers over the schedule, across grid types.
double verify_agent_best_response(const Model& m, const Equilibrium& eq, const std::vector<double>& types,
                                  int effort_points = 4096);
double verify_agent_best_response(const Model& m, const Equilibrium& eq, int type_points = 401,
                                  int effort_points = 4096);

// int v g f_sigma(tau - e*(theta)); empty for pooling outcomes.
std::optional<double> verify_principal_indifference(const Model& m, const Equilibrium& eq);
// Same integral with efforts from eq but the cutoff moved to tau.
double verify_principal_indifference(const Model& m, const Equilibrium& eq, double tau);

// Grid-dominance check for the convex-cost best response.
double verify_convex_best_response(const Model& m, const GeneralCostEquilibrium& eq, const ConvexCost& cost,
                                   int type_points = 41, int effort_points = 4096);

struct OracleReport {
    double max_violation = 0.0;
    std::optional<double> posterior_residual;
    WelfareReport estimate;
    WelfareReport std_error;
    std::uint64_t seed = 0;
    std::uint64_t n = 0;
};

OracleReport monte_carlo_welfare(const Model& m, const Equilibrium& eq, std::uint64_t n, std::uint64_t seed,
                                 unsigned workers = 0);

// Full report: grid best-response violation, posterior residual and simulation.
OracleReport run_oracle(const Model& m, const Equilibrium& eq, std::uint64_t n, std::uint64_t seed,
                        unsigned workers = 0);

}  // namespace screenlab
