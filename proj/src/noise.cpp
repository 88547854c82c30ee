#include "screenlab/noise.hpp"
#include "screenlab/numerics.hpp"

#include <boost/math/special_functions/erf.hpp>

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace screenlab {

namespace {
constexpr double kLogSqrt2Pi = 0.91893853320467274178;
constexpr double kLn2 = 0.69314718055994530942;
const double kInf = std::numeric_limits<double>::infinity();
}  // namespace

NoiseModel NoiseModel::normal() { return NoiseModel(NoiseFamily::normal, std::exp(-kLogSqrt2Pi)); }

NoiseModel NoiseModel::laplace() { return NoiseModel(NoiseFamily::laplace, 0.5); }

NoiseModel NoiseModel::custom(CustomNoise spec) {
    if (!spec.log_pdf || !spec.cdf) throw std::invalid_argument("custom noise needs log_pdf and cdf");
    NoiseModel m(NoiseFamily::custom, std::exp(spec.log_pdf(0.0)));
    m.custom_ = std::make_shared<const CustomNoise>(std::move(spec));
    // smallest power of two with f < 1e-300
    const double floor_log = std::log(1e-300);
    double z = 1.0;
    while (m.custom_->log_pdf(z) >= floor_log && z < 1e300) z *= 2.0;
    m.zmax_ = z;
    return m;
}

NoiseModel NoiseModel::from_name(const std::string& name) {
    if (name == "normal") return normal();
    if (name == "laplace") return laplace();
    throw std::invalid_argument("unknown noise family '" + name + "'");
}

std::string NoiseModel::name() const {
    switch (family_) {
        case NoiseFamily::normal: return "normal";
        case NoiseFamily::laplace: return "laplace";
        default: return custom_->name;
    }
}

double NoiseModel::log_pdf(double z) const {
    switch (family_) {
        case NoiseFamily::normal: return -0.5 * z * z - kLogSqrt2Pi;
        case NoiseFamily::laplace: return -kLn2 - std::abs(z);
        default: return custom_->log_pdf(z);
    }
}

double NoiseModel::pdf(double z) const {
    if (std::isinf(z)) return 0.0;
    return std::exp(log_pdf(z));
}

double NoiseModel::cdf(double z) const {
    if (z == kInf) return 1.0;
    if (z == -kInf) return 0.0;
    switch (family_) {
        case NoiseFamily::normal: return 0.5 * std::erfc(-z / std::sqrt(2.0));
        case NoiseFamily::laplace: return z < 0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
        default: return custom_->cdf(z);
    }
}

double NoiseModel::score(double z) const {
    switch (family_) {
        case NoiseFamily::normal: return -z;
        case NoiseFamily::laplace: return z > 0 ? -1.0 : (z < 0 ? 1.0 : 0.0);
        default:
            if (custom_->score) return custom_->score(z);
            {
                double h = 1e-5 * std::max(1.0, std::abs(z));
                return (custom_->log_pdf(z + h) - custom_->log_pdf(z - h)) / (2 * h);
            }
    }
}

double NoiseModel::score_slope(double z) const {
    switch (family_) {
        case NoiseFamily::normal: return -1.0;
        case NoiseFamily::laplace: return 0.0;
        default:
            if (custom_->score_slope) return custom_->score_slope(z);
            {
                double h = 1e-4 * std::max(1.0, std::abs(z));
                return (score(z + h) - score(z - h)) / (2 * h);
            }
    }
}

double NoiseModel::pdf_derivative(double z) const { return score(z) * pdf(z); }

double NoiseModel::custom_inverse(double log_p) const {
    auto fn = [&](double z) { return custom_->log_pdf(z) - log_p; };
    double lo = 0.0, hi = zmax_;
    if (fn(hi) > 0) return hi;
    for (int i = 0; i < 400; ++i) {
        double m = 0.5 * (lo + hi);
        if (m == lo || m == hi || hi - lo <= 1e-12 * std::max(1.0, m)) break;
        if (fn(m) > 0)
            lo = m;
        else
            hi = m;
    }
    return 0.5 * (lo + hi);
}

ExtendedReal NoiseModel::inv_pdf_upper(double p) const {
    if (p < 0 || std::isnan(p)) throw std::domain_error("inv_pdf_upper: negative density");
    if (p == 0.0) return ExtendedReal::plus_infinity();
    if (p >= peak_) return 0.0;
    return inv_pdf_upper_log(std::log(p));
}

ExtendedReal NoiseModel::inv_pdf_upper_log(double log_p) const {
    if (log_p == -kInf) return ExtendedReal::plus_infinity();
    if (log_p >= std::log(peak_)) return 0.0;
    switch (family_) {
        case NoiseFamily::normal: return std::sqrt(-2.0 * (log_p + kLogSqrt2Pi));
        case NoiseFamily::laplace: return -(log_p + kLn2);
        default: return custom_inverse(log_p);
    }
}

double NoiseModel::b(double p) const {
    if (!(p > 0 && p < peak_)) throw std::domain_error("b: density outside (0, f(0))");
    double x = inv_pdf_upper(p).value();
    return -1.0 / score(x);
}

double NoiseModel::tail_regularity(double z) const {
    double s = score(z);
    if (s == 0.0) throw std::domain_error("tail_regularity: f'(z) = 0");
    // f f'' / f'^2 = (s' + s^2) / s^2 with s = f'/f
    return (score_slope(z) + s * s) / (s * s);
}

double NoiseModel::quantile(double p) const {
    if (!(p >= 0 && p <= 1)) throw std::domain_error("quantile: probability outside [0,1]");
    if (p == 0) return -kInf;
    if (p == 1) return kInf;
    switch (family_) {
        case NoiseFamily::laplace: return p < 0.5 ? std::log(2 * p) : -std::log(2 * (1 - p));
        case NoiseFamily::normal: {
            if (p > 0.5) return -quantile(1 - p);
            double z = -std::sqrt(2.0) * boost::math::erfc_inv(2 * p);
            for (int i = 0; i < 2; ++i) {
                double f = pdf(z);
                if (f == 0) break;
                z -= (cdf(z) - p) / f;
            }
            return z;
        }
        default: {
            if (custom_->quantile) return custom_->quantile(p);
            double lo = -1.0, hi = 1.0;
            while (cdf(lo) > p) lo *= 2;
            while (cdf(hi) < p) hi *= 2;
            return num::bisect([&](double z) { return cdf(z) - p; }, lo, hi, 1e-14);
        }
    }
}

std::vector<CheckResult> validate_noise(const NoiseModel& noise, int resolution) {
    std::vector<CheckResult> out;
    const double span = 20.0;
    auto grid = num::linspace(-span, span, resolution);

    CheckResult sym{"symmetry", true, 0.0, {}};
    for (double z : grid) {
        double a = noise.pdf(z), b = noise.pdf(-z);
        if (std::abs(a - b) > 1e-14 * std::max(a, 1e-300)) {
            sym.pass = false;
            sym.at = z;
            break;
        }
    }
    out.push_back(sym);

    CheckResult mass{"unit mass", true, 0.0, {}};
    try {
        double m = num::quad([&](double z) { return noise.pdf(z); }, -kInf, kInf, 1e-9);
        if (std::abs(m - 1) > 1e-8) {
            mass.pass = false;
            mass.detail = "integral " + std::to_string(m);
        }
    } catch (const num::QuadratureError& e) {
        mass.pass = false;
        mass.detail = e.what();
    }
    out.push_back(mass);

    CheckResult mean{"zero mean", true, 0.0, {}};
    try {
        double m = num::quad([&](double z) { return z * noise.pdf(z); }, -kInf, kInf, 1e-9);
        if (std::abs(m) > 1e-8) {
            mean.pass = false;
            mean.detail = "mean " + std::to_string(m);
        }
    } catch (const num::QuadratureError& e) {
        mean.pass = false;
        mean.detail = e.what();
    }
    out.push_back(mean);

    CheckResult lc{"log-concavity", true, 0.0, {}};
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (noise.score(grid[i]) > noise.score(grid[i - 1]) + 1e-9) {
            lc.pass = false;
            lc.at = grid[i];
            lc.detail = "f'/f increases";
            break;
        }
    }
    out.push_back(lc);

    CheckResult bad{"diminishing bad luck", true, 0.0, {}};
    for (std::size_t i = 1; i < grid.size() && grid[i] < 0; ++i) {
        double a = noise.pdf(grid[i - 1]), b = noise.pdf(grid[i]);
        if (a > 0 && !(a < b)) {
            bad.pass = false;
            bad.at = grid[i];
            break;
        }
    }
    out.push_back(bad);

    CheckResult inv{"inverse consistency", true, 0.0, {}};
    double prev = std::numeric_limits<double>::infinity();
    for (double q : num::linspace(0.001, 0.999, resolution)) {
        double p = q * noise.peak();
        double x = noise.inv_pdf_upper(p).value();
        if (std::abs(noise.pdf(x) - p) > 1e-10 || !(x < prev)) {
            inv.pass = false;
            inv.at = p;
            break;
        }
        prev = x;
    }
    if (!noise.inv_pdf_upper(0.0).is_plus_infinity() || noise.inv_pdf_upper(noise.peak() * 1.5).value() != 0.0)
        inv.pass = false;
    out.push_back(inv);
    return out;
}

}  // namespace screenlab
