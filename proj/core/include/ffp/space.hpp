#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ffp/point.hpp"
#include "ffp/report.hpp"
#include "ffp/scalar.hpp"
#include "ffp/tnorm.hpp"

namespace ffp {

enum class SpaceKind { KM, GV };
std::string to_string(SpaceKind k);

enum class Completeness { Complete, GComplete, WeakGComplete, Unknown };
std::string to_string(Completeness c);
Completeness completeness_from_string(const std::string& s);
/// Whether a declared class satisfies a required one (G-complete implies both
/// complete and weak G-complete; complete and weak G-complete are unrelated).
bool completeness_satisfies(Completeness declared, Completeness required);

/// Strictly positive, sorted, duplicate-free time points realizing the
/// quantifier "for all t > 0" as finite evidence.
class TimeGrid {
public:
    /// Powers of two 2^-20 .. 2^20 plus the given breakpoints.
    static TimeGrid dyadic_default(const std::vector<Scalar>& breakpoints = {});
    /// Three spread points; enough for metrics that are constant in t.
    static TimeGrid coarse();
    static TimeGrid from_values(std::vector<Scalar> values);

    const std::vector<Scalar>& values() const { return values_; }
    bool contains(const Scalar& t) const;

private:
    std::vector<Scalar> values_;
};

/// The membership function M of a fuzzy metric space.
class Membership {
public:
    enum class Kind { Ratio, Discrete, Standard, Table };

    /// min(x,y)/max(x,y) on positive numeric points; constant in t.
    static Membership ratio();
    /// 1 iff x = y and t > 0, else 0.
    static Membership discrete();
    /// t / (t + |x - y|) on numeric points.
    static Membership standard();
    /// Directed table (x, y, t) -> value; symmetry is NOT imposed so that
    /// violating fixtures can be expressed. With t_independent entries are
    /// keyed by (x, y) alone.
    static Membership table(bool t_independent);

    Kind kind() const { return kind_; }
    bool t_independent() const { return t_independent_; }
    std::string kind_name() const;

    void table_set(const Point& x, const Point& y, const Scalar& t, UnitValue value);
    void table_set(const Point& x, const Point& y, UnitValue value);
    std::vector<Scalar> table_breakpoints() const;

    /// Raw evaluation; the space applies domain rules (KM vs GV) first.
    UnitValue eval(const Point& x, const Point& y, const Scalar& t) const;

private:
    explicit Membership(Kind k) : kind_(k) {}
    Kind kind_;
    bool t_independent_ = false;
    std::map<std::tuple<Point, Point, Scalar>, UnitValue,
             bool (*)(const std::tuple<Point, Point, Scalar>&,
                      const std::tuple<Point, Point, Scalar>&)>
        table_{&Membership::tuple_less};

    static bool tuple_less(const std::tuple<Point, Point, Scalar>& a,
                           const std::tuple<Point, Point, Scalar>& b);
};

/// A KM or GV fuzzy metric space with declared completeness class.
struct FuzzySpace {
    PointSet points;
    Membership metric;
    TNorm tnorm;
    SpaceKind kind = SpaceKind::GV;
    bool t_independent = false;
    Completeness completeness = Completeness::Unknown;
    bool non_archimedean = false;  // declared; see check_non_archimedean

    FuzzySpace(PointSet pts, Membership m, TNorm tn)
        : points(std::move(pts)), metric(std::move(m)), tnorm(std::move(tn)) {}

    /// Grid matching the declared t-dependence.
    TimeGrid default_grid() const {
        return t_independent ? TimeGrid::coarse()
                             : TimeGrid::dyadic_default(metric.table_breakpoints());
    }
};

/// M(x,y,t) with the kind's domain rules: t > 0 everywhere, t = 0 allowed
/// only on KM spaces (where M(x,y,0) = 0 by axiom).
UnitValue metric_eval(const FuzzySpace& space, const Point& x, const Point& y, const Scalar& t);

/// Clauses (a)-(e) of the KM or GV definition over probes and grid.
AxiomReport check_axioms(const FuzzySpace& space, const std::vector<Point>& probe,
                         const TimeGrid& grid);

/// M(x,y,t)*M(y,z,s) <= M(x,z,max(t,s)) over probe triples and grid pairs.
AxiomReport check_non_archimedean(const FuzzySpace& space, const std::vector<Point>& probe,
                                  const TimeGrid& grid);

/// M(x,y,.) nondecreasing across the grid for each probe pair.
AxiomReport check_monotone_in_t(const FuzzySpace& space, const std::vector<Point>& probe,
                                const TimeGrid& grid);

/// y in B(center, r, t) = { y : M(center,y,t) > 1 - r }, exact comparison.
bool ball_contains(const FuzzySpace& space, const Point& center, const UnitValue& r,
                   const Scalar& t, const Point& y);

}  // namespace ffp
