#include <doctest.h>

#include <cmath>

#include "screenlab/commitment.hpp"
#include "screenlab/welfare.hpp"

using namespace screenlab;
using doctest::Approx;

namespace {
Model normal() { return {NoiseModel::normal(), Environment::uniform_affine(5, 15, 11)}; }
}  // namespace

TEST_CASE("committed standard: reference point") {
    auto m = normal();
    const double sigma = 1 / 0.44000958566354903;
    auto c = solve_commitment(m, sigma);
    CHECK(c.tau_hat_star == Approx(3.0903275903501326).epsilon(1e-7));
    CHECK(c.theta_hat_star == Approx(11.027102173959541).epsilon(1e-7));
    CHECK(c.Vbar == Approx(0.72316484970928496).epsilon(1e-12));
    CHECK(c.interior);
    CHECK(std::abs(c.foc_residual) < 1e-6);
    auto eq = solve(m, sigma);
    CHECK(c.tau_hat_star > eq.tau_hat.value());
    CHECK(c.Vbar > evaluate(m, eq).V);
}

TEST_CASE("committed value is the equilibrium value at the equilibrium standard") {
    auto m = normal();
    const double sigma = 1 / 0.9;
    auto eq = solve(m, sigma);
    CHECK(committed_value(m, eq.tau_hat, sigma) == Approx(evaluate(m, eq).V).epsilon(1e-11));
    CHECK(committed_value(m, ExtendedReal::plus_infinity(), sigma) == 0.0);
}

TEST_CASE("threshold gap far below double resolution is carried in logs") {
    auto m = normal();
    auto c = solve_commitment(m, 1 / 10.0);
    REQUIRE(std::isfinite(c.log_gap));
    CHECK(c.log_gap < -300);
    CHECK(commitment_foc_log_gap(m, c.log_gap - 1, 0.1) < 0);
    CHECK(commitment_foc_log_gap(m, c.log_gap + 1, 0.1) > 0);
}
