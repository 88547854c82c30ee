#include <doctest.h>

#include <cmath>

#include "screenlab/environment.hpp"

using namespace screenlab;
using doctest::Approx;

TEST_CASE("uniform affine environment: reference values") {
    auto env = Environment::uniform_affine(5, 15, 11);
    CHECK(env.theta_tilde() == Approx(11.0).epsilon(1e-14));
    REQUIRE(env.has_theta_dagger());
    CHECK(env.theta_dagger() == Approx(7.783463747528265).epsilon(1e-13));
    CHECK(env.J(5.0) == Approx(1.0 - 1.1 * std::log(3.0)).epsilon(1e-13));
    CHECK(env.mean_v() == Approx(-1.0).epsilon(1e-13));
    CHECK(env.prob_good() == Approx(0.4).epsilon(1e-13));
    CHECK(env.ratio_R(11.0) == Approx(-0.032683099369876).epsilon(1e-11));
    auto rep = validate_environment(env);
    CHECK(rep.ok());
    CHECK(rep.mean_v_good == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("cumulative integrals against closed forms") {
    auto env = Environment::uniform_affine(5, 15, 11);
    for (double t : {5.0, 5.001, 6.7, 7.783463747528265, 9.99, 11.0, 14.9999, 15.0}) {
        CAPTURE(t);
        CHECK(env.G(t) == Approx((t - 5) / 10).epsilon(1e-14));
        CHECK(env.I(t) == Approx(0.05 * ((t - 11) * (t - 11) - 36)).epsilon(1e-13));
        CHECK(env.J(t) == Approx(0.1 * ((15 - t) - 11 * std::log(15 / t))).epsilon(1e-12));
    }
    // J vanishes at the dagger; the log form integrates from it
    const double d = env.theta_dagger();
    for (double h : {1e-3, 1e-9, 1e-200}) {
        const double exact = 0.1 * (11.0 / d - 1.0) * h;  // first order
        CHECK(env.log_J_above_dagger(std::log(h)) == Approx(std::log(exact)).epsilon(1e-3));
    }
}

TEST_CASE("quantile inverts G") {
    auto env = Environment::uniform_affine(5, 15, 11);
    for (double u : {0.0, 0.1, 0.5, 0.93, 1.0}) CHECK(env.G(env.quantile(u)) == Approx(u).epsilon(1e-14));
}

TEST_CASE("quadratic payoff moves the threshold type") {
    EnvironmentSpec s;
    s.g = [](double) { return 0.1; };
    s.v = [](double t) { return t * t - 100.0; };
    Environment env(s);
    CHECK(env.theta_tilde() == Approx(10.0).epsilon(1e-13));
}

TEST_CASE("optimistic prior has no dagger type") {
    auto env = Environment::uniform_affine(5, 15, 9);  // E[v] = 1
    CHECK(env.mean_v() > 0);
    CHECK_FALSE(env.has_theta_dagger());
    CHECK_THROWS(env.theta_dagger());
}
