#pragma once

#include <string>
#include <vector>

#include "ffp/space.hpp"

namespace ffp {

/// Verdict of a finite-evidence limit or Cauchy check. Never a proof: the
/// strongest positive answer is "evidence".
enum class Evidence { Convergent, Inconclusive, Divergent };
std::string to_string(Evidence e);

/// A finite prefix of a sequence in a space.
struct SequencePrefix {
    std::vector<Point> points;
};

/// The tail window over which evidence is gathered: the last quarter of the
/// prefix, and at least min_len entries (or the whole prefix if shorter).
std::pair<size_t, size_t> tail_window(size_t length, size_t min_len = 10);

/// Default evidence threshold for a space: tight for exact metrics, looser
/// for approximate formulas.
double default_eps(const FuzzySpace& space);

/// Evidence that the prefix converges to x: the tail window must satisfy
/// M(x_n, x, t) >= 1 - eps at every grid time. Divergent evidence means some
/// time shows non-improving values below the threshold.
Evidence limit_evidence(const FuzzySpace& space, const SequencePrefix& prefix, const Point& x,
                        const TimeGrid& grid, double eps);

struct PrefixClassification {
    Evidence cauchy_evidence;
    Evidence gcauchy_evidence;
};

/// Cauchy evidence from all tail pairs, G-Cauchy evidence from adjacent tail
/// pairs. Cauchy evidence always implies G-Cauchy evidence.
PrefixClassification classify_prefix(const FuzzySpace& space, const SequencePrefix& prefix,
                                     const TimeGrid& grid, double eps);

}  // namespace ffp
