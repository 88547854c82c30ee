#pragma once
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace screenlab::num {

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod; throws QuadratureError if the error estimate stays above tol.
double quad(const std::function<double(double)>& fn, double a, double b, double tol = 1e-12);

// quad with the interval split at any breakpoints falling strictly inside (a, b).
double quad_split(const std::function<double(double)>& fn, double a, double b, std::initializer_list<double> breaks,
                  double tol = 1e-12);

// Fixed 8-point Gauss-Legendre on [a, b].
double gauss8(const std::function<double(double)>& fn, double a, double b);
double gauss8_composite(const std::function<double(double)>& fn, double a, double b, int panels);

// Bisection on a sign change. Runs until |b-a| <= xtol, the midpoint stops moving, or maxit.
double bisect(const std::function<double(double)>& fn, double a, double b, double xtol = 1e-10,
              int maxit = 200);

struct GoldenResult {
    double x;
    double fx;
};
// Maximizes fn on [a, b].
GoldenResult golden_max(const std::function<double(double)>& fn, double a, double b, double xtol = 1e-8);

// Brackets of sign changes of fn over an evenly spaced scan of [a, b].
std::vector<std::pair<double, double>> sign_changes(const std::function<double(double)>& fn, double a,
                                                    double b, int points);

std::vector<double> linspace(double a, double b, int n);
std::vector<double> logspace(double a, double b, int n);  // a, b > 0, endpoints exact

}  // namespace screenlab::num
