#include "ffp/point.hpp"

#include <algorithm>

#include "ffp/errors.hpp"

namespace ffp {

Point Point::label(std::string name) {
    Point p{Scalar::from_int(0)};
    p.label_ = std::move(name);
    p.is_label_ = true;
    return p;
}

const Scalar& Point::scalar() const {
    if (is_label_) throw DomainError("point '" + label_ + "' is a label, not a number");
    return scalar_;
}

const std::string& Point::label_name() const {
    if (!is_label_) throw DomainError("point " + scalar_.str() + " is numeric, not a label");
    return label_;
}

bool Point::operator==(const Point& o) const {
    if (is_label_ != o.is_label_) return false;
    if (is_label_) return label_ == o.label_;
    return scalar_.is_exact() == o.scalar_.is_exact() && scalar_.compare(o.scalar_) == 0;
}

bool Point::operator<(const Point& o) const {
    if (is_label_ != o.is_label_) return !is_label_;
    if (is_label_) return label_ < o.label_;
    return Scalar::key_less(scalar_, o.scalar_);
}

Point Point::parse(const std::string& text) {
    if (!text.empty() && (text[0] == '@')) return label(text.substr(1));
    try {
        return number(Scalar::parse(text));
    } catch (const ParseError&) {
        return label(text);
    }
}

PointSet PointSet::finite(std::vector<Point> points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw ParameterError("finite point set has duplicate " + points[i].str());
    PointSet s;
    s.finite_ = true;
    s.points_ = std::move(points);
    return s;
}

PointSet PointSet::symbolic(std::vector<std::pair<Scalar, Scalar>> intervals,
                            std::vector<GeometricFamily> families,
                            std::vector<Point> extra_points,
                            std::vector<Point> probes) {
    if (probes.empty()) throw ParameterError("symbolic point set requires a nonempty probe set");
    PointSet s;
    s.finite_ = false;
    s.intervals_ = std::move(intervals);
    s.families_ = std::move(families);
    s.extras_ = std::move(extra_points);
    s.probes_ = std::move(probes);
    for (const auto& p : s.probes_)
        if (!s.contains(p))
            throw ParameterError("probe " + p.str() + " lies outside the described set");
    return s;
}

bool PointSet::contains(const Point& p) const {
    if (finite_) return std::find(points_.begin(), points_.end(), p) != points_.end();
    if (std::find(extras_.begin(), extras_.end(), p) != extras_.end()) return true;
    if (!p.is_number()) return false;
    const Scalar& v = p.scalar();
    for (const auto& [lo, hi] : intervals_)
        if (v >= lo && v <= hi) return true;
    for (const auto& fam : families_) {
        // ratio^n for n >= from_exponent; only |ratio| < 1 families are used,
        // so the sequence is monotone towards 0 and the scan terminates.
        if (fam.ratio.sign() <= 0 || !(fam.ratio < Scalar::from_int(1)))
            throw ParameterError("geometric family requires ratio in (0,1)");
        Scalar value = Scalar::from_int(1);
        for (int n = 0; n < fam.from_exponent; ++n) value = value * fam.ratio;
        while (value.compare(v) > 0) value = value * fam.ratio;
        if (value.compare(v) == 0) return true;
    }
    return false;
}

const std::vector<Point>& PointSet::finite_points() const {
    if (!finite_) throw DomainError("point set is symbolic; only probes are enumerable");
    return points_;
}

}  // namespace ffp
