#pragma once
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "screenlab/commitment.hpp"
#include "screenlab/welfare.hpp"

namespace screenlab {

// %.17g; round-trips through strtod.
std::string fmt(double x);

inline constexpr const char* kSweepHeader = "rho,sigma,exists,theta_hat,tau,tau_hat,V,AR,U,alpha,beta";

void write_sweep_csv(std::ostream& out, const SweepResult& s);
// Adds tau_hat_star,theta_hat_star,Vbar; commit[i] is empty where rows[i] has no equilibrium.
void write_commit_sweep_csv(std::ostream& out, const SweepResult& s,
                            const std::vector<std::optional<CommitmentSolution>>& commit);

// V, AR and U against log10(rho), one panel each.
void write_sweep_svg(std::ostream& out, const SweepResult& s, const std::string& title);

void write_file(const std::string& path, const std::string& contents);

}  // namespace screenlab
