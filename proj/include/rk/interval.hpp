#pragma once

#include <rk/rational.hpp>

namespace rk {

/// Closed interval with exact rational endpoints. Ring operations on
/// rational endpoints are exact; transcendental functions round the
/// endpoints outward (MPFR directed rounding at `bits` precision), so
/// the true value is always contained in the result.
class Interval {
public:
    Interval() : lo_(0), hi_(0) {}
    explicit Interval(Rational point) : lo_(point), hi_(point) {}
    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
        if (lo_ > hi_) throw std::invalid_argument("interval: lo > hi");
    }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational mid() const { return (lo_ + hi_) / 2; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }

    Interval operator+(const Interval& o) const { return {lo_ + o.lo_, hi_ + o.hi_}; }
    Interval operator-(const Interval& o) const { return {lo_ - o.hi_, hi_ - o.lo_}; }
    Interval operator-() const { return {-hi_, -lo_}; }
    Interval operator*(const Interval& o) const;
    Interval operator/(const Interval& o) const;  // o must not contain 0

    bool operator==(const Interval& o) const { return lo_ == o.lo_ && hi_ == o.hi_; }

    double to_double() const { return rk::to_double(mid()); }

private:
    Rational lo_, hi_;
};

/// Enclosures of transcendental values; result contains the true value.
Interval interval_log(const Rational& x, int bits);   // x > 0
Interval interval_exp(const Rational& x, int bits);
Interval interval_sqrt_z(long d, int bits);           // sqrt of a positive integer
Interval interval_log(const Interval& x, int bits);   // x.lo > 0
Interval interval_exp(const Interval& x, int bits);

/// x^e for rational x > 0 and an enclosed exponent: exp(e * log x).
Interval interval_pow(const Rational& x, const Interval& e, int bits);

}  // namespace rk
