#pragma once

#include <rk/interval.hpp>
#include <rk/rational.hpp>

namespace rk {

/// Element p + q*sqrt(d) of the real quadratic field Q(sqrt d),
/// d squarefree > 1. Arithmetic, equality and sign are exact.
/// A value with q == 0 is rational and compatible with any d.
class QuadExt {
public:
    QuadExt() : d_(2), p_(0), q_(0) {}
    explicit QuadExt(Rational rational) : d_(2), p_(std::move(rational)), q_(0) {}
    QuadExt(long d, Rational p, Rational q);

    long d() const { return d_; }
    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }

    bool is_rational() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0 && q_ == 0; }

    /// p - q*sqrt(d); involutive ring homomorphism.
    QuadExt galois_conjugate() const { return QuadExt(d_, p_, -q_); }

    /// Exact sign: compares p against -q*sqrt(d) by squaring.
    int sign() const;

    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator-() const { return QuadExt(d_, -p_, -q_); }
    QuadExt operator*(const QuadExt& o) const;
    QuadExt inverse() const;
    QuadExt operator/(const QuadExt& o) const;

    bool operator==(const QuadExt& o) const;
    bool operator<(const QuadExt& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const QuadExt& o) const { return (*this - o).sign() <= 0; }

    Interval to_interval(int bits) const;
    double to_double() const { return to_interval(64).to_double(); }

private:
    // Resolves the common field of two operands; q==0 values are wildcards.
    static long common_d(const QuadExt& a, const QuadExt& b);

    long d_;
    Rational p_, q_;
};

QuadExt galois_conjugate(const QuadExt& x);

std::string to_string(const QuadExt& x);

/// Gaussian element over Q(sqrt d): re + i*im with QuadExt parts.
/// Used for twist coefficients, which pick up factors of gamma under
/// composition.
struct CQuad {
    QuadExt re;
    QuadExt im;

    CQuad() = default;
    CQuad(QuadExt r, QuadExt i) : re(std::move(r)), im(std::move(i)) {}
    explicit CQuad(const CRat& z) : re(QuadExt(z.re)), im(QuadExt(z.im)) {}

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool operator==(const CQuad& o) const { return re == o.re && im == o.im; }

    CQuad operator+(const CQuad& o) const { return {re + o.re, im + o.im}; }
    CQuad operator-(const CQuad& o) const { return {re - o.re, im - o.im}; }
    CQuad operator-() const { return {-re, -im}; }
    CQuad operator*(const CQuad& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CQuad scale(const QuadExt& c) const { return {re * c, im * c}; }

    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
};

}  // namespace rk
