#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "screenlab/cli.hpp"
#include "screenlab/config.hpp"
#include "screenlab/numerics.hpp"
#include "screenlab/report.hpp"

using namespace screenlab;

namespace {

int run(std::vector<std::string> args, std::string& out, std::string& err) {
    std::ostringstream o, e;
    int rc = run_cli(args, o, e);
    out = o.str();
    err = e.str();
    return rc;
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

std::string error_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("config defaults and overrides") {
    auto d = parse_config("");
    CHECK(d.noise_family == "normal");
    CHECK(d.theta_low == 5.0);
    CHECK(d.theta_high == 15.0);
    CHECK(d.kappa == 11.0);
    CHECK(d.grid.points == 60);
    CHECK(d.grid.min_multiple == 0.8);
    CHECK(d.grid.max_multiple == 100.0);
    CHECK(d.grid.log_spaced);

    auto c = parse_config("# test\nnoise.family = laplace\nenv.v = affine(10.5)  # kappa\n\n"
                          "grid.points=12\ngrid.spacing = linear\nrun.seed = 9\n");
    CHECK(c.noise_family == "laplace");
    CHECK(c.kappa == 10.5);
    CHECK(c.grid.points == 12);
    CHECK_FALSE(c.grid.log_spaced);
    CHECK(c.seed == 9);
}

TEST_CASE("config diagnostics name the line and key") {
    auto e = error_of("noise.family = normal\nenv.thetta_low = 4\n");
    CHECK(e.find("line 2") != std::string::npos);
    CHECK(e.find("env.thetta_low") != std::string::npos);
    e = error_of("\n\ngrid.points = many\n");
    CHECK(e.find("line 3") != std::string::npos);
    CHECK(e.find("grid.points") != std::string::npos);
    CHECK(error_of("noise.family = cauchy").find("noise.family") != std::string::npos);
    CHECK(error_of("env.v = theta - 11").find("env.v") != std::string::npos);
    CHECK(error_of("tol.quad = -1").find("tol.quad") != std::string::npos);
    CHECK(error_of("env.theta_low = 16").find("env.theta_low") != std::string::npos);
    CHECK(error_of("just text").find("line 1") != std::string::npos);
}

TEST_CASE("rho grid flag") {
    auto g = parse_rho_grid("0.5:32:16:log");
    CHECK(g.min == 0.5);
    CHECK(g.max == 32.0);
    CHECK(g.points == 16);
    CHECK(g.log_spaced);
    CHECK_THROWS_AS(parse_rho_grid("1:2:3"), ConfigError);
    CHECK_THROWS_AS(parse_rho_grid("2:1:3:log"), ConfigError);
    CHECK_THROWS_AS(parse_rho_grid("1:2:3:cubic"), ConfigError);
}

TEST_CASE("numbers round-trip through the CSV format") {
    for (double x : {0.1, 1.0 / 3.0, 7.7834637475282458, 1e-300, -2.5e17}) CHECK(std::strtod(fmt(x).c_str(), nullptr) == x);
}

TEST_CASE("sweep CSV layout") {
    std::string out, err;
    REQUIRE(run({"sweep", "--rho-grid", "0.1:1:5:log"}, out, err) == 0);
    auto ls = lines(out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "rho,sigma,exists,theta_hat,tau,tau_hat,V,AR,U,alpha,beta");
    CHECK(ls[1] == "0.10000000000000001,10,0,,,,,,,,");
    CHECK(std::count(ls[5].begin(), ls[5].end(), ',') == 10);
    CHECK(ls[5].find(",1,") != std::string::npos);
}

TEST_CASE("commit-sweep appends the committed columns") {
    std::string out, err;
    REQUIRE(run({"commit-sweep", "--rho-grid", "0.2:0.6:3:linear"}, out, err) == 0);
    auto ls = lines(out);
    REQUIRE(ls.size() == 4);
    CHECK(ls[0] == "rho,sigma,exists,theta_hat,tau,tau_hat,V,AR,U,alpha,beta,tau_hat_star,theta_hat_star,Vbar");
    CHECK(ls[1].substr(ls[1].size() - 3) == ",,,");
    CHECK(std::count(ls[3].begin(), ls[3].end(), ',') == 13);
}

TEST_CASE("solve, commit and oracle output") {
    std::string out, err;
    REQUIRE(run({"solve", "--rho", "0.44000958566354903"}, out, err) == 0);
    auto ls = lines(out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[1].rfind("semi_separating,", 0) == 0);

    REQUIRE(run({"solve", "--sigma", "10"}, out, err) == 0);
    CHECK(lines(out)[1].rfind("pooling,10,0.10000000000000001,+inf,+inf", 0) == 0);

    REQUIRE(run({"commit", "--rho", "0.9"}, out, err) == 0);
    CHECK(out.find("tau_hat_star=") != std::string::npos);
    CHECK(out.find("gap=") != std::string::npos);

    REQUIRE(run({"oracle", "--rho", "0.9", "--n", "2e4", "--seed", "3"}, out, err) == 0);
    CHECK(out.find("seed=3\n") != std::string::npos);
    CHECK(out.find("n=20000\n") != std::string::npos);
    CHECK(out.find("best_response_violation=0\n") != std::string::npos);
}

TEST_CASE("extension subcommands") {
    std::string out, err;
    REQUIRE(run({"ext", "reputation", "--omega", "2", "--rho-grid", "1:2:2:linear"}, out, err) == 0);
    auto ls = lines(out);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "rho,k,q");
    CHECK(ls[1] == "1,0.80000000000000004,3.2000000000000002");
    REQUIRE(run({"ext", "binary", "--ebar", "1", "--ckappa", "8", "--rho-grid", "12:12.5:2:linear"}, out, err) == 0);
    CHECK(lines(out)[0] == "rho,exists,tau,theta_hat,delta,V,residual");
    CHECK(run({"ext", "cubic"}, out, err) != 0);
}

TEST_CASE("bad invocations") {
    std::string out, err;
    CHECK(run({"frobnicate"}, out, err) != 0);
    CHECK(run({"solve"}, out, err) == 2);
    CHECK(err.find("--sigma") != std::string::npos);
    CHECK(run({"solve", "--sigma", "1", "--rho", "1"}, out, err) != 0);
    CHECK(run({"oracle", "--rho", "1", "--n", "10"}, out, err) == 2);
    CHECK(run({"sweep", "--rho-grid", "1:0.5:3:log"}, out, err) == 2);
}

TEST_CASE("validate reports model checks") {
    std::string out, err;
    CHECK(run({"validate"}, out, err) == 0);
    CHECK(out.find("FAIL") == std::string::npos);
    CHECK(out.find("theta_dagger=7.78346374752") != std::string::npos);

    CustomNoise c;
    c.name = "cauchy";
    c.log_pdf = [](double z) { return -std::log(M_PI * (1 + z * z)); };
    c.cdf = [](double z) { return 0.5 + std::atan(z) / M_PI; };
    c.score = [](double z) { return -2 * z / (1 + z * z); };
    c.score_slope = [](double z) { return -2 * (1 - z * z) / ((1 + z * z) * (1 + z * z)); };
    c.quantile = [](double p) { return std::tan(M_PI * (p - 0.5)); };
    std::ostringstream os;
    CHECK(validate_report(NoiseModel::custom(c), Environment::uniform_affine(5, 15, 11), os) == 1);
    CHECK(os.str().find("FAIL log-concavity") != std::string::npos);
}

TEST_CASE("svg output has one polyline per series") {
    auto m = Model{NoiseModel::normal(), Environment::uniform_affine(5, 15, 11)};
    auto s = sweep(m, num::logspace(0.3, 3, 8));
    std::ostringstream os;
    write_sweep_svg(os, s, "t");
    const auto svg = os.str();
    std::size_t count = 0;
    for (auto p = svg.find("<polyline"); p != std::string::npos; p = svg.find("<polyline", p + 1)) ++count;
    CHECK(count == 3);
    CHECK(svg.rfind("</svg>\n") == svg.size() - 7);
}
