#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

#include "screenlab/equilibrium.hpp"

namespace screenlab {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GridSpec {
    double min_multiple = 0.8;  // of rho_tilde
    double max_multiple = 100.0;
    int points = 60;
    bool log_spaced = true;
};

struct RunConfig {
    std::string noise_family = "normal";
    double theta_low = 5.0;
    double theta_high = 15.0;
    double kappa = 11.0;
    GridSpec grid;
    double quad_tol = 1e-13;
    double solver_tol = 1e-12;
    std::uint64_t seed = 42;
    std::string out_csv;
    std::string out_svg;

    Model model() const;
    Model model(const std::string& family) const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

// "min:max:points:log" or "min:max:points:linear"; absolute rho values.
struct RhoGrid {
    double min = 0.0, max = 0.0;
    int points = 0;
    bool log_spaced = true;
};
RhoGrid parse_rho_grid(const std::string& text);

}  // namespace screenlab
