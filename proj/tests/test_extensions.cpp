#include <doctest.h>

#include <cmath>

#include "screenlab/extensions.hpp"
#include "screenlab/numerics.hpp"

using namespace screenlab;
using doctest::Approx;

namespace {
Model normal() { return {NoiseModel::normal(), Environment::uniform_affine(5, 15, 11)}; }
}  // namespace

TEST_CASE("convex best response beats a fine effort grid") {
    auto noise = NoiseModel::normal();
    auto cost = ConvexCost::quadratic();
    for (double theta : {5.0, 8.0, 14.0})
        for (double tau : {0.5, 3.0, 6.0}) {
            const double rho = 0.8;
            auto br = convex_cost_best_response(noise, theta, tau, rho, cost);
            double best = -1e300;
            for (double e : num::linspace(0, tau + 8 / rho, 20001))
                best = std::max(best, 1 - noise.cdf(rho * (tau - e)) - cost.cost(e, theta));
            CHECK(br.payoff >= best - 1e-9);
        }
}

TEST_CASE("quadratic cost equilibrium: reference point") {
    auto m = normal();
    auto eq = solve_convex_cost_equilibrium(m, 0.8, ConvexCost::quadratic());
    REQUIRE(eq);
    CHECK(eq->tau == Approx(2.7715901439057045).epsilon(1e-8));
    CHECK(eq->theta_hat == Approx(7.9049411189907914).epsilon(1e-6));
    CHECK(eq->V == Approx(0.31189725911594046).epsilon(1e-8));
    CHECK(std::abs(eq->residual) < 1e-10);
}

TEST_CASE("binary effort approaches the cost-implied threshold") {
    auto m = normal();
    auto eq = binary_effort_equilibrium(m, 12.0, 1.0, 8.0);
    REQUIRE(eq);
    CHECK(eq->theta_hat == Approx(8.0).epsilon(1e-6));
    CHECK(std::abs(eq->residual) < 1e-10);
    CHECK(eq->V == Approx(0.35000000453363544).epsilon(1e-8));
    CHECK(binary_delta(m.noise, eq->tau, 12.0, 1.0) > 0);
}

TEST_CASE("linear reputation weight") {
    auto r = linear_reputation(1.0, 0.0, 1.0);
    CHECK(r.k == 0.5);
    CHECK(r.q == 0.5);
    CHECK(linear_reputation(2.0, 0.0, 1.0).k > r.k);
    CHECK_THROWS(linear_reputation(0.0, 0.0, 1.0));
}
