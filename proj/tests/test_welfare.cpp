#include <doctest.h>

#include <cmath>

#include "screenlab/numerics.hpp"
#include "screenlab/welfare.hpp"

using namespace screenlab;
using doctest::Approx;

namespace {
Model normal() { return {NoiseModel::normal(), Environment::uniform_affine(5, 15, 11)}; }
const double kRhoTilde = 0.29783148871219933;
}  // namespace

TEST_CASE("pooling outcome") {
    auto m = normal();
    auto w = evaluate(m, pooling_equilibrium(m, 10.0));
    CHECK(w.V == 0.0);
    CHECK(w.AR == 0.0);
    CHECK(w.U == 0.0);
    CHECK(w.alpha == Approx(0.4).epsilon(1e-13));
    CHECK(w.beta == 0.0);
}

TEST_CASE("welfare at reference points") {
    auto m = normal();
    auto grid = num::logspace(kRhoTilde, 100 * kRhoTilde, 60);
    struct Ref {
        int i;
        double V, AR, U, alpha, beta;
    };
    const Ref refs[] = {
        {0, 0.5711946468497664, 0.36078238309980259, 0.098253901186109383, 0.071654135240280747, 0.032436518340083376},
        {5, 0.45635386998682681, 0.57005704612571673, 0.15391541188730595, 0.040362478170933795, 0.21041952429665051},
        {20, 0.28429975617635495, 0.70139445576666359, 0.20422732204797567, 0.0092429334121573292,
         0.31063738917882106},
    };
    for (const auto& r : refs) {
        CAPTURE(r.i);
        auto row = sweep_point(m, grid[r.i]);
        REQUIRE(row.exists);
        CHECK(row.welfare.V == Approx(r.V).epsilon(1e-11));
        CHECK(row.welfare.AR == Approx(r.AR).epsilon(1e-11));
        CHECK(row.welfare.U == Approx(r.U).epsilon(1e-11));
        CHECK(row.welfare.alpha == Approx(r.alpha).epsilon(1e-10));
        CHECK(row.welfare.beta == Approx(r.beta).epsilon(1e-10));
    }
}

TEST_CASE("high-precision limit of the principal's payoff") {
    auto m = normal();
    const double d = m.env.theta_dagger();
    const double limit = (16.0 - (11.0 - d) * (11.0 - d)) / 20.0;
    auto row = sweep_point(m, 100 * kRhoTilde);
    CHECK(row.welfare.V > limit);
    CHECK(row.welfare.V - limit < 1e-4);
}

TEST_CASE("welfare identities over a sweep") {
    auto m = normal();
    auto s = sweep(m, num::logspace(0.5 * kRhoTilde, 50 * kRhoTilde, 25));
    int pooled = 0;
    for (const auto& r : s.rows) {
        if (!r.exists) ++pooled;
        CHECK(r.welfare.U <= r.welfare.AR);
        CHECK(r.welfare.beta + m.env.prob_good() - r.welfare.alpha - r.welfare.AR == Approx(0.0).epsilon(1e-12));
    }
    CHECK(pooled > 0);
    CHECK_FALSE(s.rows.back().exists == false);
}

TEST_CASE("sweep is independent of the worker count") {
    auto m = normal();
    auto g = num::logspace(kRhoTilde, 30 * kRhoTilde, 17);
    auto a = sweep(m, g, 1), b = sweep(m, g, 4);
    for (std::size_t i = 0; i < g.size(); ++i) {
        CHECK(a.rows[i].welfare.V == b.rows[i].welfare.V);
        CHECK(a.rows[i].eq.log_gap == b.rows[i].eq.log_gap);
    }
    CHECK_THROWS(sweep(m, {1.0, 1.0}));
}

TEST_CASE("accuracy comparison") {
    auto m = normal();
    std::vector<double> p;
    for (int k = 1; k <= 33; ++k) p.push_back(k / 34.0);
    auto fine = solve(m, 1 / 1.42), coarse = solve(m, 1 / 0.76);
    CHECK(accuracy_compare(m, 6.0, 13.0, fine, coarse, p).order == Accuracy::more_accurate);
    CHECK(accuracy_compare(m, 9.5, 13.0, fine, coarse, p).order == Accuracy::less_accurate);
    CHECK(accuracy_compare(m, 6.0, 13.0, fine, fine, p).order == Accuracy::equivalent);
    CHECK_THROWS(accuracy_compare(m, 13.0, 6.0, fine, coarse, p));
    CHECK(std::string(to_string(Accuracy::incomparable)) == "Incomparable");
}

TEST_CASE("precision grid endpoints") {
    auto g = precision_grid(kRhoTilde, 0.8, 100, 60, true);
    CHECK(g.size() == 60);
    CHECK(g.front() == 0.8 * kRhoTilde);
    CHECK(g.back() == 100 * kRhoTilde);
    CHECK(g[1] / g[0] == Approx(std::pow(125.0, 1.0 / 59)));
    auto l = precision_grid(kRhoTilde, 1, 2, 3, false);
    CHECK(l[1] == Approx(1.5 * kRhoTilde));
}
