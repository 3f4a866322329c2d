#include "ffp/sequence.hpp"

#include <algorithm>

#include "ffp/errors.hpp"

namespace ffp {

std::string to_string(Evidence e) {
    switch (e) {
        case Evidence::Convergent: return "convergent-evidence";
        case Evidence::Inconclusive: return "inconclusive";
        case Evidence::Divergent: return "divergent-evidence";
    }
    return "?";
}

std::pair<size_t, size_t> tail_window(size_t length, size_t min_len) {
    size_t window = std::max(length / 4, min_len);
    window = std::min(window, length);
    return {length - window, length};
}

double default_eps(const FuzzySpace& space) {
    for (const Point& p : space.points.probe_points())
        if (p.is_number() && !p.scalar().is_exact()) return 1e-6;
    return 1e-9;
}

Evidence limit_evidence(const FuzzySpace& space, const SequencePrefix& prefix, const Point& x,
                        const TimeGrid& grid, double eps) {
    if (prefix.points.size() < 2)
        throw PreconditionError("limit evidence requires a prefix of length >= 2");
    const auto [lo, hi] = tail_window(prefix.points.size());
    const Scalar threshold = Scalar::from_int(1) - Scalar::approx(eps, 0.0);

    bool all_good = true;
    bool divergent = false;
    for (const Scalar& t : grid.values()) {
        bool below = false;
        // Non-improving: the best value of the window's second half does not
        // exceed the best of its first half.
        Scalar best_first = Scalar::from_int(0);
        Scalar best_second = Scalar::from_int(0);
        const size_t mid = lo + (hi - lo) / 2;
        for (size_t i = lo; i < hi; ++i) {
            const UnitValue v = metric_eval(space, prefix.points[i], x, t);
            if (v.value().compare(threshold) < 0) below = true;
            Scalar& best = i < mid ? best_first : best_second;
            if (v.value().compare(best) > 0) best = v.value();
        }
        if (below) {
            all_good = false;
            if (best_second.compare(best_first) <= 0) divergent = true;
        }
    }
    if (all_good) return Evidence::Convergent;
    return divergent ? Evidence::Divergent : Evidence::Inconclusive;
}

PrefixClassification classify_prefix(const FuzzySpace& space, const SequencePrefix& prefix,
                                     const TimeGrid& grid, double eps) {
    if (prefix.points.size() < 3)
        throw PreconditionError("prefix classification requires length >= 3");
    const auto [lo, hi] = tail_window(prefix.points.size());
    const Scalar threshold = Scalar::from_int(1) - Scalar::approx(eps, 0.0);

    auto pair_ok = [&](size_t i, size_t j) {
        for (const Scalar& t : grid.values())
            if (metric_eval(space, prefix.points[i], prefix.points[j], t).value().compare(threshold) < 0)
                return false;
        return true;
    };

    Evidence gcauchy = Evidence::Convergent;
    for (size_t i = lo; i + 1 < hi; ++i) {
        if (!pair_ok(i, i + 1)) {
            // Adjacent values that sit at 0 (or persistently low) are divergent
            // evidence; occasional dips are inconclusive.
            gcauchy = pair_ok(hi - 2, hi - 1) ? Evidence::Inconclusive : Evidence::Divergent;
            break;
        }
    }

    Evidence cauchy = Evidence::Convergent;
    for (size_t i = lo; i < hi && cauchy == Evidence::Convergent; ++i)
        for (size_t j = i + 1; j < hi; ++j)
            if (!pair_ok(i, j)) {
                cauchy = gcauchy == Evidence::Divergent ? Evidence::Divergent
                                                        : Evidence::Inconclusive;
                break;
            }

    // Adjacent tail pairs are a subset of all tail pairs, so Cauchy evidence
    // implies G-Cauchy evidence by construction.
    return {cauchy, gcauchy};
}

}  // namespace ffp
