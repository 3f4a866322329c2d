#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ffp/scalar.hpp"

namespace ffp {

/// An element of a point universe: a numeric scalar, or an opaque label for
/// purely tabular spaces. Equality is exact.
class Point {
public:
    Point() : scalar_(Scalar::from_int(0)), is_label_(false) {}
    static Point number(Scalar s) { return Point(std::move(s)); }
    static Point label(std::string name);

    bool is_number() const { return !is_label_; }
    const Scalar& scalar() const;
    const std::string& label_name() const;

    bool operator==(const Point& o) const;
    bool operator!=(const Point& o) const { return !(*this == o); }
    /// Strict weak order (numbers before labels) for ordered containers.
    bool operator<(const Point& o) const;

    std::string str() const { return is_label_ ? label_ : scalar_.str(); }
    static Point parse(const std::string& text);

private:
    explicit Point(Scalar s) : scalar_(std::move(s)), is_label_(false) {}
    Scalar scalar_;
    std::string label_;
    bool is_label_;
};

/// A geometric family ratio^n for n >= from_exponent; part of a symbolic
/// point universe description.
struct GeometricFamily {
    Scalar ratio;
    int from_exponent = 0;
};

/// The point universe X: a finite duplicate-free list, or a symbolic
/// description (intervals, geometric families, extra points) together with a
/// finite probe set over which universal checks quantify.
class PointSet {
public:
    static PointSet finite(std::vector<Point> points);
    static PointSet symbolic(std::vector<std::pair<Scalar, Scalar>> intervals,
                             std::vector<GeometricFamily> families,
                             std::vector<Point> extra_points,
                             std::vector<Point> probes);

    bool is_finite() const { return finite_; }
    bool contains(const Point& p) const;

    /// FINITE: all points. SYMBOLIC: the declared probe set.
    const std::vector<Point>& probe_points() const {
        return finite_ ? points_ : probes_;
    }
    const std::vector<Point>& finite_points() const;

    const std::vector<std::pair<Scalar, Scalar>>& intervals() const { return intervals_; }
    const std::vector<GeometricFamily>& families() const { return families_; }
    const std::vector<Point>& extra_points() const { return extras_; }

private:
    PointSet() = default;
    bool finite_ = true;
    std::vector<Point> points_;   // finite universe
    std::vector<Point> probes_;   // symbolic probe set
    std::vector<std::pair<Scalar, Scalar>> intervals_;
    std::vector<GeometricFamily> families_;
    std::vector<Point> extras_;
};

}  // namespace ffp
