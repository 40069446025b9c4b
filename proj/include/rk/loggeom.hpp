#pragma once

#include <rk/scalar.hpp>

#include <optional>
#include <vector>

namespace rk {

enum class Membership { In, Out, Boundary };

/// Strict half-space {x : w.x < log(bound)} with the bound kept
/// multiplicatively so exact comparisons stay available.
struct LogConstraint {
    std::vector<Scalar> weights;  // not all zero
    Rational bound;               // > 0
};

/// Intersection of strict half-spaces; convex by construction.
/// Construction requires an interior witness point.
class LogRegion {
public:
    static LogRegion make(int dimension, std::vector<LogConstraint> constraints,
                          std::vector<Rational> interior_witness, const Precision& prec = {});

    int dimension() const { return dim_; }
    const std::vector<LogConstraint>& constraints() const { return constraints_; }
    const std::vector<Rational>& witness() const { return witness_; }

private:
    LogRegion(int d, std::vector<LogConstraint> c, std::vector<Rational> w)
        : dim_(d), constraints_(std::move(c)), witness_(std::move(w)) {}
    int dim_;
    std::vector<LogConstraint> constraints_;
    std::vector<Rational> witness_;
};

/// Basis of {d : w.d = 0 for every constraint weight w}. `certain` is
/// Unknown when interval weights leave the rank ambiguous.
struct Lineality {
    Tri certain = Tri::Yes;
    std::vector<std::vector<Scalar>> basis;

    bool trivial() const { return basis.empty(); }
};

Lineality lineality_directions(const LogRegion& region);

/// Primitive integer vector (gcd 1) inside the lineality space, if one
/// exists. `decided` is Unknown when enclosed scalars prevent a decision.
struct RationalLineResult {
    Tri decided = Tri::Yes;
    std::optional<std::vector<mpz_class>> v;
};

RationalLineResult rational_line_direction(const LogRegion& region);

Membership contains_point(const LogRegion& region, const std::vector<Scalar>& x,
                          const Precision& prec = {});
Membership contains_point(const LogRegion& region, const std::vector<Rational>& x,
                          const Precision& prec = {});

}  // namespace rk
