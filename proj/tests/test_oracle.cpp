#include <doctest.h>

#include <cmath>

#include "screenlab/numerics.hpp"
#include "screenlab/oracle.hpp"
#include "screenlab/philox.hpp"

using namespace screenlab;

namespace {
Model normal() { return {NoiseModel::normal(), Environment::uniform_affine(5, 15, 11)}; }
}  // namespace

TEST_CASE("philox known answers") {
    auto a = Philox4x32::block({0, 0, 0, 0}, {0, 0});
    CHECK(a == Philox4x32::Counter{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    auto b = Philox4x32::block({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u});
    CHECK(b == Philox4x32::Counter{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
    auto c = Philox4x32::block({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu});
    CHECK(c == Philox4x32::Counter{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
}

TEST_CASE("equilibrium passes the grid oracle; a perturbed one does not") {
    auto m = normal();
    auto eq = solve(m, 1 / 0.44000958566354903);
    CHECK(verify_agent_best_response(m, eq) < 1e-5);
    CHECK(std::abs(*verify_principal_indifference(m, eq)) < 1e-10);

    auto bad = eq;
    bad.tau = ExtendedReal(eq.tau.value() * 1.05);
    CHECK(verify_agent_best_response(m, bad) > 1e-5);
    // moving only the cutoff up leaves a positive posterior at it
    CHECK(verify_principal_indifference(m, eq, eq.tau.value() + 0.1 * eq.sigma) > 1e-6);
    CHECK_FALSE(verify_principal_indifference(m, pooling_equilibrium(m, 5.0)).has_value());
}

TEST_CASE("simulation is reproducible and agrees with quadrature") {
    auto m = normal();
    auto eq = solve(m, 1 / 0.9);
    auto w = evaluate(m, eq);
    auto a = monte_carlo_welfare(m, eq, 200000, 7, 1);
    auto b = monte_carlo_welfare(m, eq, 200000, 7, 3);
    CHECK(a.estimate.V == b.estimate.V);
    CHECK(a.estimate.beta == b.estimate.beta);
    CHECK(std::abs(a.estimate.V - w.V) < 4 * a.std_error.V);
    CHECK(std::abs(a.estimate.AR - w.AR) < 4 * a.std_error.AR);
    auto c = monte_carlo_welfare(m, eq, 200000, 8, 1);
    CHECK(c.estimate.V != a.estimate.V);
    CHECK_THROWS(monte_carlo_welfare(m, eq, 100, 7));
}
