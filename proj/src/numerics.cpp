#include "screenlab/numerics.hpp"
#include "screenlab/extended.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace screenlab {

std::string ExtendedReal::str() const {
    if (is_plus_infinity()) return "+inf";
    if (is_minus_infinity()) return "-inf";
    std::ostringstream os;
    os.precision(17);
    os << value_;
    return os.str();
}

}  // namespace screenlab

namespace screenlab::num {

double quad(const std::function<double(double)>& fn, double a, double b, double tol) {
    if (a == b) return 0.0;
    if (b < a) return -quad(fn, b, a, tol);
    if (std::isfinite(a) && std::isfinite(b) && b - a <= 1e-6 * std::max({1.0, std::abs(a), std::abs(b)}))
        return gauss8(fn, a, b);
    double err = 0.0, l1 = 0.0;
    double val = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(fn, a, b, 20, 1e-14, &err, &l1);
    auto ok = [&] { return err <= tol || err <= 64 * std::numeric_limits<double>::epsilon() * l1; };
    if (!ok() && std::isfinite(a) && std::isfinite(b)) {
        // endpoint singularities (sqrt-type kinks) converge under the double-exponential map
        thread_local boost::math::quadrature::tanh_sinh<double> ts;
        double err2 = 0.0, l1b = 0.0;
        auto g = [&fn](double x) { return fn(x); };
        double val2 = ts.integrate(g, a, b, 1e-15, &err2, &l1b);
        if (err2 < err) {
            val = val2;
            err = err2;
            l1 = l1b;
        }
    }
    if (!ok()) {
        std::ostringstream os;
        os << "quad: no convergence on [" << a << ", " << b << "], error estimate " << err;
        throw QuadratureError(os.str());
    }
    return val;
}

double quad_split(const std::function<double(double)>& fn, double a, double b, std::initializer_list<double> breaks,
                  double tol) {
    std::vector<double> pts{a};
    for (double x : breaks)
        if (x > a && x < b) pts.push_back(x);
    std::sort(pts.begin() + 1, pts.end());
    pts.push_back(b);
    double s = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) s += quad(fn, pts[i - 1], pts[i], tol);
    return s;
}

double gauss8(const std::function<double(double)>& fn, double a, double b) {
    static const double x[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267,
                                0.9602898564975363};
    static const double w[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745,
                                0.1012285362903763};
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += w[i] * (fn(c - h * x[i]) + fn(c + h * x[i]));
    return s * h;
}

double gauss8_composite(const std::function<double(double)>& fn, double a, double b, int panels) {
    double s = 0.0;
    for (int k = 0; k < panels; ++k) s += gauss8(fn, a + (b - a) * k / panels, a + (b - a) * (k + 1) / panels);
    return s;
}

double bisect(const std::function<double(double)>& fn, double a, double b, double xtol, int maxit) {
    double fa = fn(a), fb = fn(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa < 0) == (fb < 0)) throw BracketError("bisect: root not bracketed");
    for (int i = 0; i < maxit; ++i) {
        double m = 0.5 * (a + b);
        if (m == a || m == b || std::abs(b - a) <= xtol) break;
        double fm = fn(m);
        if (fm == 0.0) return m;
        if ((fm < 0) == (fa < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

GoldenResult golden_max(const std::function<double(double)>& fn, double a, double b, double xtol) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = fn(c), fd = fn(d);
    while (std::abs(b - a) > xtol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            if (c == d) break;
            fc = fn(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            if (c == d) break;
            fd = fn(d);
        }
    }
    return fc >= fd ? GoldenResult{c, fc} : GoldenResult{d, fd};
}

std::vector<std::pair<double, double>> sign_changes(const std::function<double(double)>& fn, double a,
                                                    double b, int points) {
    std::vector<std::pair<double, double>> out;
    auto xs = linspace(a, b, points);
    double prev = fn(xs[0]);
    for (std::size_t i = 1; i < xs.size(); ++i) {
        double cur = fn(xs[i]);
        if ((prev < 0 && cur >= 0) || (prev > 0 && cur <= 0)) out.emplace_back(xs[i - 1], xs[i]);
        prev = cur;
    }
    return out;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    if (n == 1) {
        v[0] = a;
        return v;
    }
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    v[n - 1] = b;
    return v;
}

std::vector<double> logspace(double a, double b, int n) {
    std::vector<double> v(n);
    const double la = std::log(a), lb = std::log(b);
    for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : std::exp(la + (lb - la) * i / (n - 1));
    v.front() = a;
    if (n > 1) v.back() = b;
    return v;
}

}  // namespace screenlab::num
