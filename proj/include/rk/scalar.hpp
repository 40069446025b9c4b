#pragma once

#include <rk/interval.hpp>
#include <rk/quadext.hpp>
#include <rk/rational.hpp>

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace rk {

enum class Sign { Negative, Zero, Positive, Uncertain };

/// Result of comparing a transcendental expression against a threshold.
enum class Ternary { Less, Greater, Uncertain };

/// General three-valued truth.
enum class Tri { Yes, No, Unknown };

inline Tri tri_and(Tri a, Tri b) {
    if (a == Tri::No || b == Tri::No) return Tri::No;
    if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
    return Tri::Yes;
}

inline Tri tri_not(Tri a) {
    if (a == Tri::Yes) return Tri::No;
    if (a == Tri::No) return Tri::Yes;
    return Tri::Unknown;
}

/// Interval bit budget: evaluation starts at `bits` and doubles up to
/// `max_bits` while a comparison stays unresolved.
struct Precision {
    int bits = 64;
    int max_bits = 512;
};

/// A field scalar that is either exact (Rational, QuadExt) or a rigorous
/// enclosure (Interval).
using Scalar = std::variant<Rational, QuadExt, Interval>;

bool scalar_is_exact(const Scalar& s);
bool scalar_is_zero(const Scalar& s);  // Interval: true only for the point interval 0
Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_sub(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_div(const Scalar& a, const Scalar& b);
Scalar scalar_neg(const Scalar& a);
Sign scalar_sign(const Scalar& s);
Interval scalar_interval(const Scalar& s, int bits);
double scalar_double(const Scalar& s);
std::string scalar_to_string(const Scalar& s);

/// The exponent gamma: an exact quadratic irrational or a rigorous
/// interval enclosing a non-algebraic constant. Always > 0.
class GammaSpec {
public:
    static GammaSpec quadratic(QuadExt g);
    static GammaSpec enclosed(Interval e);

    bool is_quadratic() const { return std::holds_alternative<QuadExt>(v_); }
    const QuadExt& quad() const { return std::get<QuadExt>(v_); }
    const Interval& enclosure() const { return std::get<Interval>(v_); }

    Scalar as_scalar() const;
    Interval to_interval(int bits) const;
    double to_double() const { return to_interval(64).to_double(); }

    /// Exact equality for quadratic values, identical endpoints for
    /// enclosures; Unknown for overlapping non-identical enclosures.
    Tri same_gamma(const GammaSpec& o) const;

private:
    explicit GammaSpec(std::variant<QuadExt, Interval> v) : v_(std::move(v)) {}
    std::variant<QuadExt, Interval> v_;
};

/// Solves x = k + gamma*l over the integers, exactly. gamma irrational
/// makes the solution unique when it exists.
std::optional<std::pair<mpz_class, mpz_class>> lattice_decompose(const QuadExt& x,
                                                                 const QuadExt& gamma);

/// A linear form  c0 + sum_i coeff_i * ln(rho_i)  with positive rational
/// rho_i and exact-or-enclosed coefficients. Sign queries are sound:
/// Zero is claimed only with an exact certificate (prime-support
/// decomposition; ln p over distinct primes are linearly independent
/// over the algebraic numbers), and Negative/Positive only when an
/// outward-rounded enclosure separates from zero.
class LogForm {
public:
    void add_constant(Scalar c);
    void add_log(Scalar coeff, Rational rho);

    Sign compare_zero(const Precision& prec = {}) const;

    Interval enclosure(int bits) const;

private:
    std::optional<bool> exact_zero_test() const;  // nullopt: no certificate available

    std::vector<Scalar> constants_;
    std::vector<std::pair<Scalar, Rational>> logs_;
};

/// Compares base^gamma with threshold. Requires base > 0, threshold > 0.
/// Equality (only possible at base = threshold = 1) reports Uncertain:
/// boundary is the caller's interpretation.
Ternary log_compare(const Rational& base, const GammaSpec& exponent, const Rational& threshold,
                    const Precision& prec = {});

}  // namespace rk
