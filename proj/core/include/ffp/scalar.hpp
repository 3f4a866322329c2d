#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "ffp/errors.hpp"

namespace ffp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact square root of a nonnegative rational, if it is again rational.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Sign of a + b*sqrt(2), computed exactly.
int sign_a_plus_b_sqrt2(const Rational& a, const Rational& b);

/// A number in the library's exactness tower.
///
/// Exact values are elements a + b*sqrt(2) of Q(sqrt2), which contains every
/// rational together with the tagged constant 1/sqrt2 and all its rational
/// multiples, and is closed under +, -, *, /. Approximate values carry an
/// explicit tolerance; they arise only from user expressions and from square
/// roots that leave the tower. Q-membership (b == 0) is decidable for exact
/// values and rejected for approximate ones.
class Scalar {
public:
    Scalar() : a_(0), b_(0), exact_(true), approx_(0.0), tol_(0.0) {}

    static Scalar from_rational(Rational q);
    static Scalar from_int(long n) { return from_rational(Rational(n)); }
    /// a + b*sqrt(2) with rational coefficients.
    static Scalar from_sqrt2_pair(Rational a, Rational b);
    /// The tagged constant 1/sqrt2 = (0) + (1/2)*sqrt(2).
    static Scalar inv_sqrt2() { return from_sqrt2_pair(Rational(0), Rational(1, 2)); }
    static Scalar approx(double value, double tol = kDefaultTolerance);

    /// Parses "3/4", "-2", "0.25", "inv_sqrt2", "1/2*inv_sqrt2",
    /// "1/2+1/2*inv_sqrt2" and "~0.866" (approximate literal).
    static Scalar parse(std::string_view text);

    bool is_exact() const { return exact_; }
    /// True iff the value is exactly rational. Throws DomainError for
    /// approximate values, where Q-membership is undecidable.
    bool is_rational() const;

    /// Coefficients of the exact representation a + b*sqrt(2).
    const Rational& rational_part() const { return a_; }
    const Rational& sqrt2_part() const { return b_; }
    /// The rational value itself; requires is_rational().
    const Rational& as_rational() const;

    double tolerance() const { return exact_ ? 0.0 : tol_; }
    double to_double() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;

    /// Three-way comparison: -1, 0, +1. Exact and total on exact scalars;
    /// approximate scalars compare through their tolerance band.
    int compare(const Scalar& o) const;
    bool operator==(const Scalar& o) const { return compare(o) == 0; }
    bool operator!=(const Scalar& o) const { return compare(o) != 0; }
    bool operator<(const Scalar& o) const { return compare(o) < 0; }
    bool operator<=(const Scalar& o) const { return compare(o) <= 0; }
    bool operator>(const Scalar& o) const { return compare(o) > 0; }
    bool operator>=(const Scalar& o) const { return compare(o) >= 0; }

    /// Identical representation (not tolerance-band equality). Suitable as a
    /// container key ordering together with key_less.
    bool identical(const Scalar& o) const;
    /// Strict weak order on representations, for use in ordered containers.
    static bool key_less(const Scalar& lhs, const Scalar& rhs);

    int sign() const;
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return exact_ ? (b_ == 0 && a_ == 1) : compare(from_int(1)) == 0; }

    Scalar abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact square root within the tower, when representable there.
    std::optional<Scalar> exact_sqrt() const;
    /// Exact square root if representable, otherwise an approximate value.
    Scalar sqrt_or_approx() const;

    std::string str() const;

    static constexpr double kDefaultTolerance = 1e-9;

private:
    Rational a_, b_;   // exact value a + b*sqrt(2)
    bool exact_;
    double approx_;
    double tol_;
};

inline Scalar min(const Scalar& x, const Scalar& y) { return x <= y ? x : y; }
inline Scalar max(const Scalar& x, const Scalar& y) { return x >= y ? x : y; }

/// A Scalar constrained to [0,1]; the value domain of membership grades.
class UnitValue {
public:
    UnitValue() : v_(Scalar::from_int(0)) {}
    explicit UnitValue(Scalar v);

    const Scalar& value() const { return v_; }
    operator const Scalar&() const { return v_; }

    bool operator==(const UnitValue& o) const { return v_ == o.v_; }
    bool operator<(const UnitValue& o) const { return v_ < o.v_; }
    bool operator<=(const UnitValue& o) const { return v_ <= o.v_; }

    static UnitValue zero() { return UnitValue(Scalar::from_int(0)); }
    static UnitValue one() { return UnitValue(Scalar::from_int(1)); }

    std::string str() const { return v_.str(); }

private:
    Scalar v_;
};

}  // namespace ffp
