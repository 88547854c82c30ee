#include <doctest.h>

#include <cmath>

#include "screenlab/noise.hpp"

using namespace screenlab;
using doctest::Approx;

TEST_CASE("density inverse on the upper branch") {
    auto lap = NoiseModel::laplace();
    auto nor = NoiseModel::normal();
    CHECK(lap.inv_pdf_upper(0.25).value() == Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(nor.inv_pdf_upper(0.2).value() == Approx(1.1751590353900425).epsilon(1e-14));
    CHECK(nor.inv_pdf_upper(nor.peak()).value() == 0.0);
    CHECK(nor.inv_pdf_upper(1.0).value() == 0.0);
    CHECK(nor.inv_pdf_upper(0.0).is_plus_infinity());
    for (double z : {0.3, 1.0, 4.0, 20.0}) {
        CHECK(nor.inv_pdf_upper(nor.pdf(z)).value() == Approx(z).epsilon(1e-13));
        CHECK(lap.inv_pdf_upper(lap.pdf(z)).value() == Approx(z).epsilon(1e-13));
    }
}

TEST_CASE("log-domain inverse reaches far tails") {
    auto nor = NoiseModel::normal();
    const double lp = -1e4;
    const double z = nor.inv_pdf_upper_log(lp).value();
    CHECK(nor.log_pdf(z) == Approx(lp).epsilon(1e-13));
    CHECK(NoiseModel::laplace().inv_pdf_upper_log(std::log(0.5) - 800.0).value() == Approx(800.0).epsilon(1e-14));
}

TEST_CASE("b and tail regularity") {
    auto lap = NoiseModel::laplace();
    auto nor = NoiseModel::normal();
    for (double p : {0.4, 1e-3, 1e-20}) CHECK(lap.b(p) == 1.0);
    CHECK(nor.b(nor.pdf(2.0)) == Approx(0.5).epsilon(1e-13));
    CHECK(nor.tail_regularity(10.0) == Approx(0.99).epsilon(1e-14));
    CHECK(lap.tail_regularity(3.0) == 1.0);
}

TEST_CASE("cdf, quantile and symmetry") {
    for (auto n : {NoiseModel::normal(), NoiseModel::laplace()}) {
        CAPTURE(n.name());
        CHECK(n.cdf(0.0) == Approx(0.5));
        for (double z : {-7.0, -1.5, 0.2, 3.0}) {
            CHECK(n.cdf(z) + n.cdf(-z) == Approx(1.0).epsilon(1e-15));
            CHECK(n.pdf(z) == Approx(n.pdf(-z)).epsilon(1e-15));
        }
        for (double p : {1e-12, 0.01, 0.3, 0.5, 0.8, 0.999}) CHECK(n.cdf(n.quantile(p)) == Approx(p).epsilon(1e-13));
        CHECK(n.score(1.0) <= 0.0);
    }
    CHECK(NoiseModel::normal().quantile(0.975) == Approx(1.959963984540054).epsilon(1e-14));
}

TEST_CASE("validation accepts the built-in families") {
    for (auto n : {NoiseModel::normal(), NoiseModel::laplace()})
        for (const auto& r : validate_noise(n)) {
            CAPTURE(n.name());
            CAPTURE(r.name);
            CHECK(r.pass);
        }
}

TEST_CASE("validation flags a density that is not log-concave") {
    // Cauchy: symmetric, but the score turns back up in the tails
    CustomNoise c;
    c.name = "cauchy";
    c.log_pdf = [](double z) { return -std::log(M_PI * (1 + z * z)); };
    c.cdf = [](double z) { return 0.5 + std::atan(z) / M_PI; };
    c.score = [](double z) { return -2 * z / (1 + z * z); };
    c.score_slope = [](double z) { return -2 * (1 - z * z) / ((1 + z * z) * (1 + z * z)); };
    c.quantile = [](double p) { return std::tan(M_PI * (p - 0.5)); };
    auto checks = validate_noise(NoiseModel::custom(c));
    bool flagged = false;
    for (const auto& r : checks)
        if (!r.pass && r.name.find("log-concav") != std::string::npos) flagged = true;
    CHECK(flagged);
}

TEST_CASE("unknown family name is rejected") { CHECK_THROWS(NoiseModel::from_name("student")); }
