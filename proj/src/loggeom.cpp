#include <rk/loggeom.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace rk {

namespace {

// Kernel basis of an m x n matrix over an exact field F, by Gaussian
// elimination. F needs +,-,*,/ and an is-zero predicate.
template <typename F, typename IsZero>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> rows, int n, const F& one,
                                         IsZero is_zero) {
    std::vector<int> pivot_col;
    size_t r = 0;
    for (int c = 0; c < n && r < rows.size(); ++c) {
        size_t pr = r;
        while (pr < rows.size() && is_zero(rows[pr][c])) ++pr;
        if (pr == rows.size()) continue;
        std::swap(rows[r], rows[pr]);
        F inv = one / rows[r][c];
        for (int j = 0; j < n; ++j) rows[r][j] = rows[r][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || is_zero(rows[i][c])) continue;
            F f = rows[i][c];
            for (int j = 0; j < n; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<std::vector<F>> basis;
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<F> v(n, one - one);
        v[c] = one;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = (one - one) - rows[i][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool all_exact(const std::vector<LogConstraint>& cons) {
    for (const auto& c : cons)
        for (const auto& w : c.weights)
            if (!scalar_is_exact(w)) return false;
    return true;
}

QuadExt lift_exact(const Scalar& s) {
    if (const auto* r = std::get_if<Rational>(&s)) return QuadExt(*r);
    return std::get<QuadExt>(s);
}

// Sign-normalize so the first entry with decidable nonzero sign is positive.
void normalize_direction(std::vector<Scalar>& v) {
    for (const auto& s : v) {
        Sign sg = scalar_sign(s);
        if (sg == Sign::Zero) continue;
        if (sg == Sign::Negative)
            for (auto& x : v) x = scalar_neg(x);
        return;
    }
}

// Tests whether row b equals c * row a for an exact rational c; interval
// entries must match as representations after exact endpoint scaling.
std::optional<Rational> proportionality_factor(const std::vector<Scalar>& a,
                                               const std::vector<Scalar>& b) {
    std::optional<Rational> factor;
    for (size_t j = 0; j < a.size(); ++j) {
        const auto* ra = std::get_if<Rational>(&a[j]);
        if (ra && *ra != 0) {
            const auto* rb = std::get_if<Rational>(&b[j]);
            if (!rb) return std::nullopt;
            Rational c = *rb / *ra;
            if (factor && *factor != c) return std::nullopt;
            factor = c;
        }
    }
    if (!factor) return std::nullopt;
    for (size_t j = 0; j < a.size(); ++j) {
        const auto* ia = std::get_if<Interval>(&a[j]);
        const auto* ib = std::get_if<Interval>(&b[j]);
        if ((ia == nullptr) != (ib == nullptr)) return std::nullopt;
        if (ia) {
            Interval scaled = *ia * Interval(*factor);
            if (!(scaled == *ib)) return std::nullopt;
        } else {
            Scalar scaled = scalar_mul(a[j], Scalar(*factor));
            if (!scalar_is_zero(scalar_sub(scaled, b[j]))) return std::nullopt;
        }
    }
    return factor;
}

}  // namespace

LogRegion LogRegion::make(int dimension, std::vector<LogConstraint> constraints,
                          std::vector<Rational> interior_witness, const Precision& prec) {
    if (dimension <= 0) throw std::invalid_argument("log region: dimension must be positive");
    if (static_cast<int>(interior_witness.size()) != dimension)
        throw std::invalid_argument("log region: witness dimension mismatch");
    for (const auto& c : constraints) {
        if (static_cast<int>(c.weights.size()) != dimension)
            throw std::invalid_argument("log region: constraint dimension mismatch");
        if (c.bound <= 0) throw std::invalid_argument("log region: bound must be positive");
        bool all_zero = true;
        for (const auto& w : c.weights) all_zero = all_zero && scalar_is_zero(w);
        if (all_zero) throw std::invalid_argument("log region: zero weight vector");
    }
    LogRegion region(dimension, std::move(constraints), std::move(interior_witness));
    if (contains_point(region, region.witness(), prec) != Membership::In)
        throw std::invalid_argument("log region: witness point is not interior");
    return region;
}

Membership contains_point(const LogRegion& region, const std::vector<Scalar>& x,
                          const Precision& prec) {
    if (static_cast<int>(x.size()) != region.dimension())
        throw std::invalid_argument("contains_point: dimension mismatch");
    bool boundary = false;
    for (const auto& c : region.constraints()) {
        Scalar dot = Rational(0);
        for (size_t j = 0; j < x.size(); ++j)
            dot = scalar_add(dot, scalar_mul(c.weights[j], x[j]));
        LogForm form;
        form.add_constant(dot);
        form.add_log(Rational(-1), c.bound);
        switch (form.compare_zero(prec)) {
            case Sign::Negative:
                break;  // strictly satisfied
            case Sign::Positive:
                return Membership::Out;
            default:
                boundary = true;
        }
    }
    return boundary ? Membership::Boundary : Membership::In;
}

Membership contains_point(const LogRegion& region, const std::vector<Rational>& x,
                          const Precision& prec) {
    std::vector<Scalar> xs;
    xs.reserve(x.size());
    for (const auto& q : x) xs.emplace_back(q);
    return contains_point(region, xs, prec);
}

Lineality lineality_directions(const LogRegion& region) {
    const int n = region.dimension();
    Lineality out;

    if (region.constraints().empty()) {
        for (int j = 0; j < n; ++j) {
            std::vector<Scalar> e(n, Scalar(Rational(0)));
            e[j] = Rational(1);
            out.basis.push_back(std::move(e));
        }
        return out;
    }

    if (all_exact(region.constraints())) {
        try {
            std::vector<std::vector<QuadExt>> rows;
            for (const auto& c : region.constraints()) {
                std::vector<QuadExt> row;
                for (const auto& w : c.weights) row.push_back(lift_exact(w));
                rows.push_back(std::move(row));
            }
            auto basis = kernel_basis(std::move(rows), n, QuadExt(Rational(1)),
                                      [](const QuadExt& x) { return x.is_zero(); });
            for (auto& v : basis) {
                std::vector<Scalar> sv;
                for (auto& e : v) sv.push_back(e.is_rational() ? Scalar(e.p()) : Scalar(e));
                normalize_direction(sv);
                out.basis.push_back(std::move(sv));
            }
            return out;
        } catch (const std::invalid_argument&) {
            // mixed quadratic fields; fall through to the interval paths
        }
    }

    // Interval weights: handle the shapes that occur for monomial bands.
    // 1) all rows proportional to the first by exact rational factors
    std::vector<const std::vector<Scalar>*> rows;
    for (const auto& c : region.constraints()) rows.push_back(&c.weights);
    bool proportional = true;
    for (size_t i = 1; i < rows.size(); ++i)
        proportional = proportional && proportionality_factor(*rows[0], *rows[i]).has_value();
    if (proportional) {
        const auto& w = *rows[0];
        int pivot = -1;
        for (int j = 0; j < n; ++j) {
            Sign s = scalar_sign(w[j]);
            if (s == Sign::Positive || s == Sign::Negative) {
                pivot = j;
                break;
            }
        }
        if (pivot >= 0) {
            for (int j = 0; j < n; ++j) {
                if (j == pivot) continue;
                if (scalar_is_zero(w[j]) && scalar_is_exact(w[j])) {
                    std::vector<Scalar> e(n, Scalar(Rational(0)));
                    e[j] = Rational(1);
                    out.basis.push_back(std::move(e));
                } else {
                    std::vector<Scalar> v(n, Scalar(Rational(0)));
                    v[j] = w[pivot];
                    v[pivot] = scalar_neg(w[j]);
                    normalize_direction(v);
                    out.basis.push_back(std::move(v));
                }
            }
            return out;
        }
    }

    // 2) n == 2 with an enclosure-certified nonzero determinant: trivial kernel
    if (n == 2 && rows.size() >= 2) {
        for (size_t i = 0; i < rows.size(); ++i) {
            for (size_t j = i + 1; j < rows.size(); ++j) {
                Scalar det = scalar_sub(scalar_mul((*rows[i])[0], (*rows[j])[1]),
                                        scalar_mul((*rows[i])[1], (*rows[j])[0]));
                Sign s = scalar_sign(det);
                if (s == Sign::Positive || s == Sign::Negative) return out;  // empty basis
            }
        }
    }

    out.certain = Tri::Unknown;
    return out;
}

RationalLineResult rational_line_direction(const LogRegion& region) {
    RationalLineResult res;
    const int n = region.dimension();

    // The rational vectors of the lineality space are the rational kernel
    // of the stacked matrix of rational parts and sqrt(d)-parts.
    std::vector<std::vector<Rational>> rows;
    for (const auto& c : region.constraints()) {
        std::vector<Rational> rat(n, Rational(0));
        std::map<long, std::vector<Rational>> irr;
        for (int j = 0; j < n; ++j) {
            if (const auto* r = std::get_if<Rational>(&c.weights[j])) {
                rat[j] = *r;
            } else if (const auto* q = std::get_if<QuadExt>(&c.weights[j])) {
                rat[j] = q->p();
                if (q->q() != 0) {
                    auto& row = irr.try_emplace(q->d(), std::vector<Rational>(n, Rational(0)))
                                    .first->second;
                    row[j] = q->q();
                }
            } else {
                const Interval& iv = std::get<Interval>(c.weights[j]);
                if (iv.is_point()) {
                    rat[j] = iv.lo();
                } else {
                    res.decided = Tri::Unknown;  // enclosed weight: cannot decide
                    return res;
                }
            }
        }
        rows.push_back(std::move(rat));
        for (auto& [d, row] : irr) rows.push_back(std::move(row));
    }

    auto basis = kernel_basis(std::move(rows), n, Rational(1),
                              [](const Rational& x) { return x == 0; });
    if (basis.empty()) {
        res.v = std::nullopt;
        return res;
    }

    // Clear denominators, make primitive, normalize the leading sign.
    std::vector<Rational>& b = basis.front();
    mpz_class lcm_den = 1;
    for (const auto& q : b) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> v(n);
    mpz_class g = 0;
    for (int j = 0; j < n; ++j) {
        Rational scaled = b[j] * Rational(lcm_den);
        v[j] = scaled.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
    }
    for (auto& z : v) z /= g;
    for (int j = 0; j < n; ++j) {
        if (v[j] == 0) continue;
        if (v[j] < 0)
            for (auto& z : v) z = -z;
        break;
    }
    res.v = std::move(v);
    return res;
}

}  // namespace rk
