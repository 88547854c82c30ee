#include <doctest.h>

#include <cmath>

#include "screenlab/equilibrium.hpp"
#include "screenlab/numerics.hpp"

using namespace screenlab;
using doctest::Approx;

namespace {
Model normal() { return {NoiseModel::normal(), Environment::uniform_affine(5, 15, 11)}; }
Model laplace() { return {NoiseModel::laplace(), Environment::uniform_affine(5, 15, 11)}; }
}  // namespace

TEST_CASE("best responses: reference values") {
    auto l = laplace();
    CHECK(optimal_positive_effort(l, 4.0, 2.0, 1.0) == Approx(2.0 + std::log(2.0)).epsilon(1e-14));
    CHECK(optimal_positive_effort(l, 4.0, -5.0, 1.0) == 0.0);
    CHECK(principal_standard(l, 11.0, 0.1).value() == Approx(5.0303350859619718).epsilon(1e-12));
    CHECK(agent_threshold(l, ExtendedReal(-1.0), 2.0) == Approx(10.873127313836182).epsilon(1e-12));
    CHECK(agent_threshold(l, ExtendedReal::plus_infinity(), 2.0) == 15.0);
}

TEST_CASE("agent standard inverts the threshold") {
    auto m = normal();
    for (double s : {3.0, 1.0, 0.2})
        for (double th : {7.9, 9.5, 11.0}) {
            const double u = agent_standard(m, th, s);
            CHECK(std::abs(indifference_Q(m, th, u, s)) < 1e-13);
            CHECK(agent_threshold(m, ExtendedReal(u), s) == Approx(th).epsilon(1e-12));
        }
}

TEST_CASE("existence threshold") {
    auto st = sigma_tilde(normal());
    CHECK(st.sigma == Approx(3.3576033357786441).epsilon(1e-12));
    CHECK(st.rho == Approx(0.29783148871219933).epsilon(1e-12));
    CHECK_FALSE(st.multiple());
    auto sl = sigma_tilde(laplace());
    CHECK(sl.rho == Approx(0.31855222752805329).epsilon(1e-12));
    CHECK(sl.sigma == Approx(3.1392026599843348).epsilon(1e-12));
}

TEST_CASE("pooling below the threshold precision") {
    auto m = normal();
    auto eq = solve(m, 1.0 / (0.5 * 0.29783148871219933));
    CHECK(eq.kind == EquilibriumKind::pooling);
    CHECK(eq.tau.is_plus_infinity());
    CHECK(eq.tau_hat.is_plus_infinity());
    CHECK(effort(m, eq, 12.0) == 0.0);
}

TEST_CASE("semi-separating equilibrium: reference point") {
    auto m = normal();
    auto eq = solve(m, 1.0 / 0.44000958566354903);
    REQUIRE(eq.kind == EquilibriumKind::semi_separating);
    // independent scipy solve: 8.594602021889422, 4.821771529433696, 2.121625692830418
    CHECK(eq.theta_hat == Approx(8.594602021889422).epsilon(1e-12));
    CHECK(eq.tau.value() == Approx(4.821771529433696).epsilon(1e-12));
    CHECK(eq.tau_hat.value() == Approx(2.121625692830418).epsilon(1e-12));
    CHECK(std::abs(eq.q_residual) < 1e-12);
    CHECK(std::abs(eq.pbr_residual) < 1e-12);
    CHECK(std::abs(eq.fixed_point_residual) < 1e-10);
    CHECK(std::abs(fixed_point_map(m, eq.theta_hat, eq.sigma)) < 1e-9);
}

TEST_CASE("standards move monotonically with precision") {
    for (auto m : {normal(), laplace()}) {
        const double rt = sigma_tilde(m).rho;
        auto grid = num::logspace(rt, 100 * rt, 12);
        double gap = 1e300, tau_hat = -1;
        for (double rho : grid) {
            auto eq = solve(m, 1 / rho);
            REQUIRE(eq.kind == EquilibriumKind::semi_separating);
            CHECK(eq.log_gap < gap);
            CHECK(eq.tau_hat.value() > tau_hat);
            CHECK(eq.theta_hat >= m.env.theta_dagger());
            CHECK(eq.theta_hat <= m.env.theta_tilde() + 1e-12);
            gap = eq.log_gap;
            tau_hat = eq.tau_hat.value();
        }
    }
}

TEST_CASE("log gap survives when theta_hat rounds to the dagger") {
    auto m = normal();
    auto eq = solve(m, 1 / (100 * 0.29783148871219933));
    CHECK(eq.theta_hat == m.env.theta_dagger());
    CHECK(eq.log_gap < -20000);
    CHECK(std::abs(eq.fixed_point_residual) < 1e-8);
}
