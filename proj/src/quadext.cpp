#include <rk/quadext.hpp>

namespace rk {

namespace {

bool squarefree(long d) {
    if (d <= 1) return false;
    for (long f = 2; f * f <= d; ++f) {
        if (d % (f * f) == 0) return false;
    }
    return true;
}

}  // namespace

QuadExt::QuadExt(long d, Rational p, Rational q) : d_(d), p_(std::move(p)), q_(std::move(q)) {
    if (!squarefree(d_)) throw std::invalid_argument("quadext: d must be squarefree > 1");
}

long QuadExt::common_d(const QuadExt& a, const QuadExt& b) {
    if (a.d_ == b.d_) return a.d_;
    if (a.q_ == 0) return b.d_;
    if (b.q_ == 0) return a.d_;
    throw std::invalid_argument("incompatible field");
}

int QuadExt::sign() const {
    int sp = sgn(p_), sq = sgn(q_);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    // p and -q*sqrt(d) have the same sign; compare p^2 with q^2*d.
    int c = cmp(p_ * p_, q_ * q_ * d_);
    if (c == 0) return 0;  // cannot happen for squarefree d>1 and q!=0, kept for safety
    return c > 0 ? sp : sq;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
    return QuadExt(common_d(*this, o), p_ + o.p_, q_ + o.q_);
}

QuadExt QuadExt::operator-(const QuadExt& o) const {
    return QuadExt(common_d(*this, o), p_ - o.p_, q_ - o.q_);
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
    long d = common_d(*this, o);
    return QuadExt(d, p_ * o.p_ + q_ * o.q_ * d, p_ * o.q_ + q_ * o.p_);
}

QuadExt QuadExt::inverse() const {
    // 1/(p+q sqrt d) = (p - q sqrt d)/(p^2 - q^2 d)
    Rational n = p_ * p_ - q_ * q_ * d_;
    if (n == 0) throw std::domain_error("quadext: division by zero");
    return QuadExt(d_, p_ / n, -q_ / n);
}

QuadExt QuadExt::operator/(const QuadExt& o) const { return *this * o.inverse(); }

bool QuadExt::operator==(const QuadExt& o) const {
    if (q_ == 0 && o.q_ == 0) return p_ == o.p_;
    if (d_ != o.d_) {
        // distinct squarefree d: values coincide only if both rational
        if (q_ == 0 || o.q_ == 0) return false;
        return false;
    }
    return p_ == o.p_ && q_ == o.q_;
}

Interval QuadExt::to_interval(int bits) const {
    Interval v(p_);
    if (q_ != 0) v = v + interval_sqrt_z(d_, bits) * Interval(q_);
    return v;
}

QuadExt galois_conjugate(const QuadExt& x) { return x.galois_conjugate(); }

std::string to_string(const QuadExt& x) {
    if (x.q() == 0) return to_string(x.p());
    std::string s;
    if (x.p() != 0) s += to_string(x.p());
    if (x.q() == 1)
        s += (s.empty() ? "" : "+");
    else if (x.q() == -1)
        s += "-";
    else
        s += (s.empty() || x.q() < 0 ? "" : "+") + to_string(x.q()) + "*";
    s += "sqrt(" + std::to_string(x.d()) + ")";
    return s;
}

}  // namespace rk
