#pragma once
#include "screenlab/extended.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace screenlab {

enum class NoiseFamily { normal, laplace, custom };

// User-supplied symmetric density. log_pdf and cdf are required; the score
// (d/dz log f) and its slope fall back to finite differences when absent.
struct CustomNoise {
    std::string name = "custom";
    std::function<double(double)> log_pdf;
    std::function<double(double)> cdf;
    std::function<double(double)> score;
    std::function<double(double)> score_slope;
    std::function<double(double)> quantile;
};

class NoiseModel {
public:
    static NoiseModel normal();
    static NoiseModel laplace();
    static NoiseModel custom(CustomNoise spec);
    static NoiseModel from_name(const std::string& name);

    NoiseFamily family() const { return family_; }
    std::string name() const;

    double pdf(double z) const;
    double log_pdf(double z) const;
    double cdf(double z) const;
    double pdf_derivative(double z) const;
    double score(double z) const;  // f'/f
    double peak() const { return peak_; }

    // Nonnegative root of f(z) = p; 0 for p >= f(0), +inf at p = 0.
    ExtendedReal inv_pdf_upper(double p) const;
    // Same inverse, from log p (for densities far below the double range).
    ExtendedReal inv_pdf_upper_log(double log_p) const;

    double b(double p) const;
    double tail_regularity(double z) const;
    double quantile(double p) const;

private:
    NoiseModel(NoiseFamily fam, double peak) : family_(fam), peak_(peak) {}
    double score_slope(double z) const;
    double custom_inverse(double log_p) const;

    NoiseFamily family_;
    double peak_;
    std::shared_ptr<const CustomNoise> custom_;
    double zmax_ = 0.0;
};

struct CheckResult {
    std::string name;
    bool pass = true;
    double at = 0.0;  // offending grid point when pass is false
    std::string detail;
};

std::vector<CheckResult> validate_noise(const NoiseModel& noise, int resolution = 2001);

}  // namespace screenlab
