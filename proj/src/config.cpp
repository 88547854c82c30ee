#include "screenlab/config.hpp"

#include <fstream>
#include <regex>
#include <sstream>

namespace screenlab {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& key, const std::string& msg) {
    std::ostringstream os;
    os << "config line " << line;
    if (!key.empty()) os << ", key '" << key << "'";
    os << ": " << msg;
    throw ConfigError(os.str());
}

double number(int line, const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        double x = std::stod(v, &used);
        if (used != v.size()) fail(line, key, "malformed number '" + v + "'");
        return x;
    } catch (const std::logic_error&) {
        fail(line, key, "malformed number '" + v + "'");
    }
}

long integer(int line, const std::string& key, const std::string& v) {
    try {
        std::size_t used = 0;
        long x = std::stol(v, &used);
        if (used != v.size()) fail(line, key, "malformed integer '" + v + "'");
        return x;
    } catch (const std::logic_error&) {
        fail(line, key, "malformed integer '" + v + "'");
    }
}

}  // namespace

Model RunConfig::model() const { return model(noise_family); }

Model RunConfig::model(const std::string& family) const {
    return Model{NoiseModel::from_name(family), Environment::uniform_affine(theta_low, theta_high, kappa)};
}

RunConfig parse_config(const std::string& text) {
    RunConfig c;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    int low_line = 0, high_line = 0;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) continue;
        auto eq = s.find('=');
        if (eq == std::string::npos) fail(line, "", "expected 'section.key = value'");
        std::string key = trim(s.substr(0, eq)), val = trim(s.substr(eq + 1));
        if (val.empty()) fail(line, key, "missing value");

        if (key == "noise.family") {
            if (val != "normal" && val != "laplace") fail(line, key, "expected normal or laplace");
            c.noise_family = val;
        } else if (key == "env.theta_low") {
            c.theta_low = number(line, key, val);
            low_line = line;
        } else if (key == "env.theta_high") {
            c.theta_high = number(line, key, val);
            high_line = line;
        } else if (key == "env.v") {
            static const std::regex affine(R"(affine\(\s*([^)\s]+)\s*\))");
            std::smatch m;
            if (!std::regex_match(val, m, affine)) fail(line, key, "expected affine(kappa)");
            c.kappa = number(line, key, m[1]);
        } else if (key == "env.g") {
            if (val != "uniform") fail(line, key, "only 'uniform' is supported");
        } else if (key == "grid.min_multiple") {
            c.grid.min_multiple = number(line, key, val);
            if (!(c.grid.min_multiple > 0)) fail(line, key, "must be positive");
        } else if (key == "grid.max_multiple") {
            c.grid.max_multiple = number(line, key, val);
            if (!(c.grid.max_multiple > 0)) fail(line, key, "must be positive");
        } else if (key == "grid.points") {
            long p = integer(line, key, val);
            if (p < 2) fail(line, key, "need at least 2 points");
            c.grid.points = static_cast<int>(p);
        } else if (key == "grid.spacing") {
            if (val != "log" && val != "linear") fail(line, key, "expected log or linear");
            c.grid.log_spaced = val == "log";
        } else if (key == "tol.quad") {
            c.quad_tol = number(line, key, val);
            if (!(c.quad_tol > 0)) fail(line, key, "must be positive");
        } else if (key == "tol.solver") {
            c.solver_tol = number(line, key, val);
            if (!(c.solver_tol > 0)) fail(line, key, "must be positive");
        } else if (key == "run.seed") {
            long s = integer(line, key, val);
            if (s < 0) fail(line, key, "must be non-negative");
            c.seed = static_cast<std::uint64_t>(s);
        } else if (key == "out.csv") {
            c.out_csv = val;
        } else if (key == "out.svg") {
            c.out_svg = val;
        } else {
            fail(line, key, "unknown key");
        }
    }
    if (!(c.theta_low > 0)) fail(low_line, "env.theta_low", "must be positive");
    if (!(c.theta_low < c.theta_high))
        fail(std::max(low_line, high_line), high_line > low_line ? "env.theta_high" : "env.theta_low",
             "theta_low must be below theta_high");
    if (!(c.grid.min_multiple < c.grid.max_multiple))
        fail(0, "grid.max_multiple", "must exceed grid.min_multiple");
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

RhoGrid parse_rho_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string p;
    while (std::getline(ss, p, ':')) parts.push_back(p);
    if (parts.size() != 4) throw ConfigError("--rho-grid: expected min:max:points:log|linear");
    RhoGrid g;
    try {
        g.min = std::stod(parts[0]);
        g.max = std::stod(parts[1]);
        g.points = std::stoi(parts[2]);
    } catch (const std::logic_error&) {
        throw ConfigError("--rho-grid: malformed number in '" + text + "'");
    }
    if (parts[3] != "log" && parts[3] != "linear") throw ConfigError("--rho-grid: spacing must be log or linear");
    g.log_spaced = parts[3] == "log";
    if (!(g.min > 0) || !(g.min < g.max) || g.points < 2) throw ConfigError("--rho-grid: need 0 < min < max, points >= 2");
    return g;
}

}  // namespace screenlab
