#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace rk {

/// Exact rational number. GMP keeps values canonical (lowest terms,
/// positive denominator) as long as construction goes through the
/// helpers below.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p/q" or a plain integer string.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + s + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational pow_int(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw std::domain_error("rational: 0^negative");
    Rational r;
    unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), n);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), n);
    if (e < 0) {
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    r.canonicalize();
    return r;
}

inline mpz_class floor_z(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline mpz_class ceil_z(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Gaussian rational: re + i*im with exact rational parts.
struct CRat {
    Rational re{0};
    Rational im{0};

    CRat() = default;
    CRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit CRat(long r, long i = 0) : re(r), im(i) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool operator==(const CRat& o) const { return re == o.re && im == o.im; }

    CRat conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }  // |z|^2

    CRat operator+(const CRat& o) const { return {re + o.re, im + o.im}; }
    CRat operator-(const CRat& o) const { return {re - o.re, im - o.im}; }
    CRat operator-() const { return {-re, -im}; }
    CRat operator*(const CRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    CRat inverse() const {
        Rational n = norm();
        if (n == 0) throw std::domain_error("gaussian rational: division by zero");
        return {re / n, -im / n};
    }
    CRat operator/(const CRat& o) const { return *this * o.inverse(); }

    CRat pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        CRat acc(1, 0), b = *this;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

inline std::string to_string(const CRat& z) {
    return to_string(z.re) + (z.im >= 0 ? "+" : "") + to_string(z.im) + "i";
}

/// A rational point on the unit circle from the tan-half-angle
/// parametrization: t -> ((1-t^2) + 2t i)/(1+t^2). Exact modulus 1.
inline CRat unit_circle_point(const Rational& t) {
    Rational den = 1 + t * t;
    return {(1 - t * t) / den, (2 * t) / den};
}

}  // namespace rk
