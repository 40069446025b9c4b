#include <rk/interval.hpp>

#include <mpfr.h>

#include <algorithm>

namespace rk {

namespace {

// RAII mpfr value.
struct Mpfr {
    mpfr_t x;
    explicit Mpfr(int bits) { mpfr_init2(x, bits < 2 ? 2 : bits); }
    ~Mpfr() { mpfr_clear(x); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

// Every finite mpfr value is dyadic, so this conversion is exact.
Rational to_rational(const Mpfr& m) {
    Rational q;
    mpfr_get_q(q.get_mpq_t(), m.x);
    return q;
}

template <typename Fn>
Interval directed(const Rational& x, int bits, Fn&& fn) {
    Mpfr lo(bits), hi(bits), in(bits + 8);
    // The input itself may not fit in `bits` bits; round it outward first.
    mpfr_set_q(in.x, x.get_mpq_t(), MPFR_RNDD);
    fn(lo.x, in.x, MPFR_RNDD);
    mpfr_set_q(in.x, x.get_mpq_t(), MPFR_RNDU);
    fn(hi.x, in.x, MPFR_RNDU);
    return {to_rational(lo), to_rational(hi)};
}

}  // namespace

Interval Interval::operator*(const Interval& o) const {
    Rational a = lo_ * o.lo_, b = lo_ * o.hi_, c = hi_ * o.lo_, d = hi_ * o.hi_;
    return {std::min({a, b, c, d}), std::max({a, b, c, d})};
}

Interval Interval::operator/(const Interval& o) const {
    if (o.contains_zero()) throw std::domain_error("interval: division by interval containing 0");
    Rational a = lo_ / o.lo_, b = lo_ / o.hi_, c = hi_ / o.lo_, d = hi_ / o.hi_;
    return {std::min({a, b, c, d}), std::max({a, b, c, d})};
}

Interval interval_log(const Rational& x, int bits) {
    if (x <= 0) throw std::domain_error("interval_log: nonpositive argument");
    if (x == 1) return Interval(Rational(0));
    return directed(x, bits, [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t r) { mpfr_log(out, in, r); });
}

Interval interval_exp(const Rational& x, int bits) {
    if (x == 0) return Interval(Rational(1));
    return directed(x, bits, [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t r) { mpfr_exp(out, in, r); });
}

Interval interval_sqrt_z(long d, int bits) {
    if (d < 0) throw std::domain_error("interval_sqrt_z: negative argument");
    Mpfr lo(bits), hi(bits);
    mpfr_sqrt_ui(lo.x, static_cast<unsigned long>(d), MPFR_RNDD);
    mpfr_sqrt_ui(hi.x, static_cast<unsigned long>(d), MPFR_RNDU);
    return {to_rational(lo), to_rational(hi)};
}

Interval interval_log(const Interval& x, int bits) {
    Interval a = interval_log(x.lo(), bits);
    Interval b = interval_log(x.hi(), bits);
    return {a.lo(), b.hi()};  // log is increasing
}

Interval interval_exp(const Interval& x, int bits) {
    Interval a = interval_exp(x.lo(), bits);
    Interval b = interval_exp(x.hi(), bits);
    return {a.lo(), b.hi()};
}

Interval interval_pow(const Rational& x, const Interval& e, int bits) {
    if (x <= 0) throw std::domain_error("interval_pow: nonpositive base");
    Interval t = interval_log(x, bits) * e;
    return interval_exp(t, bits);
}

}  // namespace rk
