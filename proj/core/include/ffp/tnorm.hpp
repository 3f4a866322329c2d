#pragma once

#include <map>
#include <string>
#include <vector>

#include "ffp/report.hpp"
#include "ffp/scalar.hpp"

namespace ffp {

/// A continuous t-norm: associative, commutative, monotone, with identity 1.
class TNorm {
public:
    enum class Kind { Min, Product, Lukasiewicz, Table };

    static TNorm min_norm() { return TNorm(Kind::Min); }
    static TNorm product() { return TNorm(Kind::Product); }
    static TNorm lukasiewicz() { return TNorm(Kind::Lukasiewicz); }
    /// Table over a finite grid; entries[i][j] is the value at (grid[i], grid[j]).
    static TNorm table(std::vector<UnitValue> grid,
                       std::vector<std::vector<UnitValue>> entries);

    /// Named per the instance file format: "min", "product", "lukasiewicz".
    static TNorm from_name(const std::string& name);

    Kind kind() const { return kind_; }
    std::string name() const;
    /// Built-in kinds are continuous analytically; tables only by sampling.
    bool analytically_continuous() const { return kind_ != Kind::Table; }

    UnitValue apply(const UnitValue& a, const UnitValue& b) const;

    const std::vector<UnitValue>& grid() const { return grid_; }

private:
    explicit TNorm(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<UnitValue> grid_;
    std::vector<std::vector<UnitValue>> entries_;
};

/// Equispaced grid 0, 1/(n-1), ..., 1 of exact rationals.
std::vector<UnitValue> unit_grid(int points);

/// Checks the four t-norm axioms plus sampled continuity on the given grid.
/// Associativity and monotonicity sweeps are exhaustive on a thinned grid of
/// at most 11 points (they are O(n^3) and O(n^4)); commutativity and identity
/// run on the full grid. Table kinds are checked exhaustively on their own grid.
AxiomReport tnorm_check_axioms(const TNorm& norm, const std::vector<UnitValue>& grid);

}  // namespace ffp
