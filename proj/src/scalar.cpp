#include <rk/scalar.hpp>

#include <map>

namespace rk {

namespace {

constexpr int kPromoteBits = 128;

Interval as_interval(const Scalar& s, int bits) {
    if (const auto* r = std::get_if<Rational>(&s)) return Interval(*r);
    if (const auto* q = std::get_if<QuadExt>(&s)) return q->to_interval(bits);
    return std::get<Interval>(s);
}

template <typename ExactOp, typename IntervalOp>
Scalar binary_op(const Scalar& a, const Scalar& b, ExactOp exact, IntervalOp iop) {
    if (std::holds_alternative<Interval>(a) || std::holds_alternative<Interval>(b))
        return iop(as_interval(a, kPromoteBits), as_interval(b, kPromoteBits));
    if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b)) {
        QuadExt r = exact(QuadExt(std::get<Rational>(a)), QuadExt(std::get<Rational>(b)));
        return r.p();  // stays rational
    }
    auto lift = [](const Scalar& s) {
        if (const auto* r = std::get_if<Rational>(&s)) return QuadExt(*r);
        return std::get<QuadExt>(s);
    };
    QuadExt r = exact(lift(a), lift(b));
    return r.is_rational() ? Scalar(r.p()) : Scalar(r);
}

}  // namespace

bool scalar_is_exact(const Scalar& s) { return !std::holds_alternative<Interval>(s); }

bool scalar_is_zero(const Scalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return *r == 0;
    if (const auto* q = std::get_if<QuadExt>(&s)) return q->is_zero();
    const Interval& i = std::get<Interval>(s);
    return i.is_point() && i.lo() == 0;
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
    return binary_op(
        a, b, [](const QuadExt& x, const QuadExt& y) { return x + y; },
        [](const Interval& x, const Interval& y) { return x + y; });
}

Scalar scalar_sub(const Scalar& a, const Scalar& b) {
    return binary_op(
        a, b, [](const QuadExt& x, const QuadExt& y) { return x - y; },
        [](const Interval& x, const Interval& y) { return x - y; });
}

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
    return binary_op(
        a, b, [](const QuadExt& x, const QuadExt& y) { return x * y; },
        [](const Interval& x, const Interval& y) { return x * y; });
}

Scalar scalar_div(const Scalar& a, const Scalar& b) {
    return binary_op(
        a, b, [](const QuadExt& x, const QuadExt& y) { return x / y; },
        [](const Interval& x, const Interval& y) { return x / y; });
}

Scalar scalar_neg(const Scalar& a) {
    if (const auto* r = std::get_if<Rational>(&a)) return Rational(-*r);
    if (const auto* q = std::get_if<QuadExt>(&a)) return -*q;
    return -std::get<Interval>(a);
}

Sign scalar_sign(const Scalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) {
        int c = sgn(*r);
        return c < 0 ? Sign::Negative : c > 0 ? Sign::Positive : Sign::Zero;
    }
    if (const auto* q = std::get_if<QuadExt>(&s)) {
        int c = q->sign();
        return c < 0 ? Sign::Negative : c > 0 ? Sign::Positive : Sign::Zero;
    }
    const Interval& i = std::get<Interval>(s);
    if (i.hi() < 0) return Sign::Negative;
    if (i.lo() > 0) return Sign::Positive;
    if (i.is_point() && i.lo() == 0) return Sign::Zero;
    return Sign::Uncertain;
}

Interval scalar_interval(const Scalar& s, int bits) { return as_interval(s, bits); }

double scalar_double(const Scalar& s) { return as_interval(s, 64).to_double(); }

std::string scalar_to_string(const Scalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return to_string(*r);
    if (const auto* q = std::get_if<QuadExt>(&s)) return to_string(*q);
    const Interval& i = std::get<Interval>(s);
    return "[" + to_string(i.lo()) + ", " + to_string(i.hi()) + "]";
}

// ---------------------------------------------------------------------------
// GammaSpec

GammaSpec GammaSpec::quadratic(QuadExt g) {
    if (g.q() == 0) throw std::invalid_argument("gamma: quadratic variant must be irrational (q != 0)");
    if (g.sign() <= 0) throw std::invalid_argument("gamma: must be positive");
    return GammaSpec(std::variant<QuadExt, Interval>(std::move(g)));
}

GammaSpec GammaSpec::enclosed(Interval e) {
    if (e.lo() <= 0) throw std::invalid_argument("gamma: must be positive");
    // Irrationality guard: no rational with denominator <= 1000 may lie
    // inside the enclosure.
    for (long den = 1; den <= 1000; ++den) {
        if (ceil_z(e.lo() * den) <= floor_z(e.hi() * den))
            throw std::invalid_argument(
                "gamma: enclosure contains a rational with denominator <= 1000");
    }
    return GammaSpec(std::variant<QuadExt, Interval>(std::move(e)));
}

Scalar GammaSpec::as_scalar() const {
    if (is_quadratic()) return quad();
    return enclosure();
}

Interval GammaSpec::to_interval(int bits) const {
    if (is_quadratic()) return quad().to_interval(bits);
    return enclosure();
}

Tri GammaSpec::same_gamma(const GammaSpec& o) const {
    if (is_quadratic() && o.is_quadratic()) return quad() == o.quad() ? Tri::Yes : Tri::No;
    if (!is_quadratic() && !o.is_quadratic()) {
        if (enclosure() == o.enclosure()) return Tri::Yes;
        if (enclosure().hi() < o.enclosure().lo() || o.enclosure().hi() < enclosure().lo())
            return Tri::No;
        return Tri::Unknown;
    }
    // quadratic vs enclosed: disjoint enclosures decide, otherwise unknown
    Interval a = to_interval(128), b = o.to_interval(128);
    if (a.hi() < b.lo() || b.hi() < a.lo()) return Tri::No;
    return Tri::Unknown;
}

// ---------------------------------------------------------------------------
// lattice decomposition

std::optional<std::pair<mpz_class, mpz_class>> lattice_decompose(const QuadExt& x,
                                                                 const QuadExt& gamma) {
    if (gamma.q() == 0) throw std::invalid_argument("lattice_decompose: gamma must be irrational");
    if (x.q() != 0 && x.d() != gamma.d()) throw std::invalid_argument("incompatible field");
    // x = k + l*gamma  <=>  q_x = l*q_g  and  p_x = k + l*p_g
    Rational l = x.q() / gamma.q();
    if (!is_integer(l)) return std::nullopt;
    Rational k = x.p() - gamma.p() * l;
    if (!is_integer(k)) return std::nullopt;
    return std::make_pair(mpz_class(k.get_num()), mpz_class(l.get_num()));
}

// ---------------------------------------------------------------------------
// LogForm

namespace {

// Trial-division factorization; gives up beyond the bound so the caller
// falls back to interval-only comparison.
std::optional<std::vector<std::pair<mpz_class, long>>> factorize(mpz_class n) {
    if (n <= 0) return std::nullopt;
    std::vector<std::pair<mpz_class, long>> out;
    mpz_class f = 2;
    const long bound = 1000000;
    while (n > 1) {
        if (f > bound) return std::nullopt;
        if (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) {
            long e = 0;
            while (mpz_divisible_p(n.get_mpz_t(), f.get_mpz_t())) {
                n /= f;
                ++e;
            }
            out.emplace_back(f, e);
        }
        if (f * f > n && n > 1) {
            out.emplace_back(n, 1);
            break;
        }
        f = (f == 2) ? 3 : f + 2;
    }
    return out;
}

struct ExactSum {
    QuadExt value{Rational(0)};
    bool ok = true;

    void add(const Scalar& s, const Rational& mult) {
        if (!ok) return;
        QuadExt term;
        if (const auto* r = std::get_if<Rational>(&s))
            term = QuadExt(*r * mult);
        else
            term = std::get<QuadExt>(s) * QuadExt(mult);
        try {
            value = value + term;
        } catch (const std::invalid_argument&) {
            ok = false;  // mixed quadratic fields; no exact certificate
        }
    }
};

}  // namespace

void LogForm::add_constant(Scalar c) {
    if (scalar_is_zero(c)) return;
    constants_.push_back(std::move(c));
}

void LogForm::add_log(Scalar coeff, Rational rho) {
    if (rho <= 0) throw std::domain_error("logform: rho must be positive");
    if (rho == 1 || scalar_is_zero(coeff)) return;
    logs_.emplace_back(std::move(coeff), std::move(rho));
}

std::optional<bool> LogForm::exact_zero_test() const {
    for (const auto& c : constants_)
        if (!scalar_is_exact(c)) return std::nullopt;
    for (const auto& [c, rho] : logs_)
        if (!scalar_is_exact(c)) return std::nullopt;

    ExactSum constant;
    for (const auto& c : constants_) constant.add(c, 1);
    if (!constant.ok) return std::nullopt;

    // Collect the per-prime coefficient:  sum_i coeff_i * v_p(rho_i).
    std::map<mpz_class, ExactSum> per_prime;
    for (const auto& [c, rho] : logs_) {
        auto num = factorize(mpz_class(rho.get_num()));
        auto den = factorize(mpz_class(rho.get_den()));
        if (!num || !den) return std::nullopt;
        for (const auto& [p, e] : *num) per_prime[p].add(c, Rational(e));
        for (const auto& [p, e] : *den) per_prime[p].add(c, Rational(-e));
    }
    if (!constant.value.is_zero()) {
        // c0 + sum a_p ln p = 0 with c0 != 0 would make e^{c0} algebraic
        // (Lindemann), impossible; and with all a_p = 0 it is plainly false.
        return false;
    }
    for (auto& [p, sum] : per_prime) {
        if (!sum.ok) return std::nullopt;
        if (!sum.value.is_zero()) return false;  // Baker: ln p are independent
    }
    return true;
}

Interval LogForm::enclosure(int bits) const {
    Interval acc;
    for (const auto& c : constants_) acc = acc + scalar_interval(c, bits);
    for (const auto& [c, rho] : logs_)
        acc = acc + scalar_interval(c, bits) * interval_log(rho, bits);
    return acc;
}

Sign LogForm::compare_zero(const Precision& prec) const {
    if (constants_.empty() && logs_.empty()) return Sign::Zero;
    std::optional<bool> zero = exact_zero_test();
    if (zero.has_value() && *zero) return Sign::Zero;
    for (int bits = prec.bits;; bits *= 2) {
        if (bits > prec.max_bits) bits = prec.max_bits;
        Interval v = enclosure(bits);
        if (v.hi() < 0) return Sign::Negative;
        if (v.lo() > 0) return Sign::Positive;
        if (bits >= prec.max_bits) break;
    }
    return Sign::Uncertain;
}

// ---------------------------------------------------------------------------

Ternary log_compare(const Rational& base, const GammaSpec& exponent, const Rational& threshold,
                    const Precision& prec) {
    if (base <= 0 || threshold <= 0)
        throw std::domain_error("log_compare: base and threshold must be positive");
    // base^gamma <=> threshold  iff  gamma*ln(base) - ln(threshold) <=> 0
    LogForm form;
    form.add_log(exponent.as_scalar(), base);
    form.add_log(Rational(-1), threshold);
    switch (form.compare_zero(prec)) {
        case Sign::Negative:
            return Ternary::Less;
        case Sign::Positive:
            return Ternary::Greater;
        default:
            return Ternary::Uncertain;  // boundary or unresolved enclosure
    }
}

}  // namespace rk
