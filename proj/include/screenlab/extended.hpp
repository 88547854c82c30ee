#pragma once
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace screenlab {

// Real number or +/- infinity, with the infinite case carried as an explicit tag.
class ExtendedReal {
public:
    enum class Kind { finite, plus_infinity, minus_infinity };

    constexpr ExtendedReal() = default;
    constexpr ExtendedReal(double x) : kind_(Kind::finite), value_(x) {}

    static constexpr ExtendedReal plus_infinity() { return ExtendedReal(Kind::plus_infinity); }
    static constexpr ExtendedReal minus_infinity() { return ExtendedReal(Kind::minus_infinity); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_plus_infinity() const { return kind_ == Kind::plus_infinity; }
    bool is_minus_infinity() const { return kind_ == Kind::minus_infinity; }

    double value() const {
        if (kind_ != Kind::finite) throw std::domain_error("ExtendedReal: value() on infinite");
        return value_;
    }
    // IEEE view, for places where infinities propagate correctly through the arithmetic.
    double as_double() const {
        switch (kind_) {
            case Kind::plus_infinity: return std::numeric_limits<double>::infinity();
            case Kind::minus_infinity: return -std::numeric_limits<double>::infinity();
            default: return value_;
        }
    }
    ExtendedReal operator-() const {
        switch (kind_) {
            case Kind::plus_infinity: return minus_infinity();
            case Kind::minus_infinity: return plus_infinity();
            default: return ExtendedReal(-value_);
        }
    }
    ExtendedReal scaled(double s) const {  // s > 0
        return is_finite() ? ExtendedReal(value_ * s) : *this;
    }
    std::string str() const;

private:
    explicit constexpr ExtendedReal(Kind k) : kind_(k) {}
    Kind kind_ = Kind::finite;
    double value_ = 0.0;
};

}  // namespace screenlab
