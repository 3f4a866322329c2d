#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffp/expr.hpp"
#include "ffp/report.hpp"
#include "ffp/scalar.hpp"

namespace ffp {

/// Value of a growth function at a point, kept in a form that still compares
/// exactly: either a scalar of the tower, or the square root of an exact
/// scalar that has no representation in the tower.
class PsiValue {
public:
    static PsiValue direct(Scalar v) { return PsiValue(std::move(v), false); }
    static PsiValue sqrt_of(Scalar radicand);

    /// Three-way comparison, exact whenever both operands are exact-rooted.
    int compare(const PsiValue& o) const;
    int compare(const Scalar& s) const { return compare(direct(s)); }

    bool is_exact() const;
    Scalar to_scalar() const;
    std::string str() const;

private:
    PsiValue(Scalar v, bool is_sqrt) : v_(std::move(v)), sqrt_(is_sqrt) {}
    Scalar v_;   // the value itself, or the radicand when sqrt_ is set
    bool sqrt_;
};

/// A member of the growth family: nondecreasing continuous self-map of [0,1]
/// with psi(t) > t on (0,1) and psi(1) = 1. Iterates of any member converge
/// to 1 from every positive start.
class PsiFunction {
public:
    enum class Kind { AffineHalf, Sqrt, Capped, User, MinOf };

    /// x -> (1+x)/2.
    static PsiFunction affine_half();
    /// x -> sqrt(x).
    static PsiFunction sqrt_kind();
    /// x -> min(a*x, sqrt(x)); requires a > 1.
    static PsiFunction capped(Scalar a);
    /// User expression in x; evaluated approximately.
    static PsiFunction user(const std::string& expression);
    /// Pointwise minimum of members; again a member of the family.
    static PsiFunction min_of(std::vector<PsiFunction> components);

    /// Parses "affine_half", "sqrt", "capped:a=<rational>", "user:<expr>".
    static PsiFunction from_name(const std::string& name);
    std::string name() const;

    Kind kind() const { return kind_; }
    bool analytically_continuous() const { return kind_ != Kind::User; }

    /// Exact-aware value; use its compare() instead of materializing doubles.
    PsiValue value_at(const Scalar& x) const;
    /// The value as a Scalar (approximate when the root leaves the tower).
    Scalar eval(const Scalar& x) const;

    /// Three-way psi(x) ? rhs, exact for built-in kinds on exact input.
    int compare_applied(const Scalar& x, const Scalar& rhs) const {
        return value_at(x).compare(rhs);
    }
    /// True when comparisons at x are decided by exact arithmetic.
    bool exact_at(const Scalar& x) const { return value_at(x).is_exact(); }

    const std::vector<PsiFunction>& components() const { return components_; }
    const Scalar& cap() const { return cap_; }

private:
    PsiFunction(Kind k) : kind_(k), cap_(Scalar::from_int(0)) {}

    Kind kind_;
    Scalar cap_;                          // Capped parameter a
    std::shared_ptr<const Expr> expr_;    // User expression
    std::vector<PsiFunction> components_; // MinOf members
};

/// Checks family membership on a grid: psi(1)=1, nondecreasing on grid pairs,
/// strict dominance psi(t)>t on interior points, range within [0,1], and
/// sampled continuity (built-in kinds are continuous analytically).
AxiomReport psi_validate(const PsiFunction& psi, const std::vector<UnitValue>& grid);

/// n-fold application psi^n(r).
UnitValue psi_iterate(const PsiFunction& psi, const UnitValue& r, unsigned n);

/// Smallest n with 1 - psi^n(r) <= eps for the affine-half map, from the
/// closed form psi^n(r) = 1 - (1-r)/2^n.
unsigned affine_half_steps_to_within(const UnitValue& r, const Rational& eps);

}  // namespace ffp
