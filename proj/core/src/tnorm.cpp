#include "ffp/tnorm.hpp"

#include <algorithm>
#include <sstream>

#include "ffp/errors.hpp"

namespace ffp {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::PassExact: return "pass_exact";
        case CheckStatus::PassSampled: return "pass_sampled";
        case CheckStatus::Declared: return "declared";
        case CheckStatus::Fail: return "fail";
    }
    return "?";
}

CheckStatus check_status_from_string(const std::string& s) {
    if (s == "pass_exact") return CheckStatus::PassExact;
    if (s == "pass_sampled") return CheckStatus::PassSampled;
    if (s == "declared") return CheckStatus::Declared;
    if (s == "fail") return CheckStatus::Fail;
    throw ParseError("unknown check status: " + s);
}

std::string Witness::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < bindings.size(); ++i) {
        if (i) os << ", ";
        os << bindings[i].first << "=" << bindings[i].second;
    }
    os << "} " << lhs << " " << relation << " " << rhs << " fails";
    return os.str();
}

bool AxiomReport::all_passed() const {
    return std::all_of(items.begin(), items.end(),
                       [](const CheckItem& c) { return c.passed(); });
}

const CheckItem* AxiomReport::find(const std::string& name) const {
    for (const auto& c : items)
        if (c.name == name) return &c;
    return nullptr;
}

std::string AxiomReport::str() const {
    std::ostringstream os;
    os << subject << ":\n";
    for (const auto& c : items) {
        os << "  [" << to_string(c.status) << "] " << c.name;
        if (!c.note.empty()) os << " (" << c.note << ")";
        if (c.witness) os << "\n      witness: " << c.witness->str();
        os << "\n";
    }
    return os.str();
}

TNorm TNorm::table(std::vector<UnitValue> grid, std::vector<std::vector<UnitValue>> entries) {
    if (grid.empty() || entries.size() != grid.size())
        throw ParameterError("t-norm table must be square over its grid");
    for (const auto& row : entries)
        if (row.size() != grid.size())
            throw ParameterError("t-norm table must be square over its grid");
    TNorm t(Kind::Table);
    t.grid_ = std::move(grid);
    t.entries_ = std::move(entries);
    return t;
}

TNorm TNorm::from_name(const std::string& name) {
    if (name == "min") return min_norm();
    if (name == "product") return product();
    if (name == "lukasiewicz") return lukasiewicz();
    throw NotFoundError("unknown t-norm: " + name);
}

std::string TNorm::name() const {
    switch (kind_) {
        case Kind::Min: return "min";
        case Kind::Product: return "product";
        case Kind::Lukasiewicz: return "lukasiewicz";
        case Kind::Table: return "table";
    }
    return "?";
}

UnitValue TNorm::apply(const UnitValue& a, const UnitValue& b) const {
    switch (kind_) {
        case Kind::Min: return a <= b ? a : b;
        case Kind::Product: return UnitValue(a.value() * b.value());
        case Kind::Lukasiewicz: {
            const Scalar s = a.value() + b.value() - Scalar::from_int(1);
            return s.sign() > 0 ? UnitValue(s) : UnitValue::zero();
        }
        case Kind::Table: {
            auto idx = [&](const UnitValue& v) -> size_t {
                for (size_t i = 0; i < grid_.size(); ++i)
                    if (grid_[i].value() == v.value()) return i;
                throw GridMissError("t-norm table queried off-grid at " + v.str());
            };
            return entries_[idx(a)][idx(b)];
        }
    }
    throw DomainError("corrupt t-norm kind");
}

std::vector<UnitValue> unit_grid(int points) {
    if (points < 2) throw ParameterError("unit grid needs at least 2 points");
    std::vector<UnitValue> g;
    g.reserve(points);
    for (int i = 0; i < points; ++i)
        g.emplace_back(Scalar::from_rational(Rational(i, points - 1)));
    return g;
}

namespace {

std::vector<UnitValue> thin_grid(const std::vector<UnitValue>& grid, size_t keep) {
    if (grid.size() <= keep) return grid;
    std::vector<UnitValue> out;
    for (size_t i = 0; i < keep; ++i) out.push_back(grid[i * (grid.size() - 1) / (keep - 1)]);
    return out;
}

Witness triple_witness(const UnitValue& a, const UnitValue& b, const UnitValue& c,
                       const std::string& lhs, const std::string& rel, const std::string& rhs) {
    return Witness{{{"a", a.str()}, {"b", b.str()}, {"c", c.str()}}, lhs, rel, rhs};
}

}  // namespace

AxiomReport tnorm_check_axioms(const TNorm& norm, const std::vector<UnitValue>& grid) {
    if (grid.empty()) throw PreconditionError("t-norm axiom check requires a nonempty grid");
    AxiomReport report;
    report.subject = "t-norm '" + norm.name() + "'";

    const bool exhaustive = norm.kind() == TNorm::Kind::Table;
    const auto small = exhaustive ? grid : thin_grid(grid, 11);

    auto apply = [&](const UnitValue& a, const UnitValue& b) { return norm.apply(a, b); };

    // Commutativity, full grid.
    {
        CheckItem item{"commutativity", CheckStatus::PassExact, std::nullopt, ""};
        for (const auto& a : grid) {
            for (const auto& b : grid) {
                if (!(apply(a, b).value() == apply(b, a).value())) {
                    item.status = CheckStatus::Fail;
                    item.witness = Witness{{{"a", a.str()}, {"b", b.str()}},
                                           "a*b", "=", "b*a"};
                    break;
                }
            }
            if (item.status == CheckStatus::Fail) break;
        }
        report.items.push_back(std::move(item));
    }

    // Identity a*1 = a, full grid.
    {
        CheckItem item{"identity", CheckStatus::PassExact, std::nullopt, ""};
        const UnitValue one = UnitValue::one();
        for (const auto& a : grid) {
            UnitValue r = apply(a, one);
            if (!(r.value() == a.value())) {
                item.status = CheckStatus::Fail;
                item.witness = Witness{{{"a", a.str()}}, a.str() + "*1 = " + r.str(), "=", a.str()};
                break;
            }
        }
        report.items.push_back(std::move(item));
    }

    // Associativity, thinned grid.
    {
        CheckItem item{"associativity", CheckStatus::PassExact, std::nullopt,
                       exhaustive ? "exhaustive over table grid" : "exhaustive over 11-point subgrid"};
        for (const auto& a : small) {
            for (const auto& b : small) {
                for (const auto& c : small) {
                    if (!(apply(apply(a, b), c).value() == apply(a, apply(b, c)).value())) {
                        item.status = CheckStatus::Fail;
                        item.witness = triple_witness(a, b, c, "(a*b)*c", "=", "a*(b*c)");
                        goto assoc_done;
                    }
                }
            }
        }
    assoc_done:
        report.items.push_back(std::move(item));
    }

    // Monotonicity, thinned grid.
    {
        CheckItem item{"monotonicity", CheckStatus::PassExact, std::nullopt,
                       exhaustive ? "exhaustive over table grid" : "exhaustive over 11-point subgrid"};
        for (const auto& a : small) {
            for (const auto& c : small) {
                if (!(a.value() <= c.value())) continue;
                for (const auto& b : small) {
                    for (const auto& d : small) {
                        if (!(b.value() <= d.value())) continue;
                        if (!(apply(a, b).value() <= apply(c, d).value())) {
                            item.status = CheckStatus::Fail;
                            item.witness =
                                Witness{{{"a", a.str()}, {"b", b.str()}, {"c", c.str()}, {"d", d.str()}},
                                        "a*b", "<=", "c*d"};
                            goto mono_done;
                        }
                    }
                }
            }
        }
    mono_done:
        report.items.push_back(std::move(item));
    }

    // Continuity: built-ins are continuous analytically; tables get a
    // jump bound between grid-adjacent cells.
    {
        CheckItem item{"continuity", CheckStatus::PassExact, std::nullopt, ""};
        if (norm.analytically_continuous()) {
            item.note = "analytic for built-in kind";
        } else {
            item.status = CheckStatus::PassSampled;
            item.note = "adjacent-cell oscillation bound on table grid";
            const auto& g = norm.grid();
            Scalar worst = Scalar::from_int(0);
            for (size_t i = 0; i < g.size(); ++i) {
                for (size_t j = 0; j + 1 < g.size(); ++j) {
                    const Scalar gap = (g[j + 1].value() - g[j].value()).abs();
                    const Scalar jump =
                        (norm.apply(g[i], g[j + 1]).value() - norm.apply(g[i], g[j]).value()).abs();
                    // Holder-style allowance: a continuous t-norm sampled at
                    // spacing h may move by O(sqrt(h)) but not by a unit step.
                    const Scalar allowance =
                        Scalar::approx(0.25) + Scalar::from_int(2) * gap.sqrt_or_approx();
                    if (jump.compare(allowance) > 0) {
                        item.status = CheckStatus::Fail;
                        item.witness = Witness{{{"a", g[i].str()},
                                                {"b", g[j].str()},
                                                {"b'", g[j + 1].str()}},
                                               "|a*b' - a*b| = " + jump.str(), "<=", allowance.str()};
                        break;
                    }
                    if (jump.compare(worst) > 0) worst = jump;
                }
                if (item.status == CheckStatus::Fail) break;
            }
        }
        report.items.push_back(std::move(item));
    }

    return report;
}

}  // namespace ffp
