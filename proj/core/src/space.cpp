#include "ffp/space.hpp"

#include <algorithm>
#include <cmath>

#include "ffp/errors.hpp"

namespace ffp {

std::string to_string(SpaceKind k) { return k == SpaceKind::KM ? "KM" : "GV"; }

std::string to_string(Completeness c) {
    switch (c) {
        case Completeness::Complete: return "complete";
        case Completeness::GComplete: return "g_complete";
        case Completeness::WeakGComplete: return "weak_g_complete";
        case Completeness::Unknown: return "unknown";
    }
    return "?";
}

Completeness completeness_from_string(const std::string& s) {
    if (s == "complete") return Completeness::Complete;
    if (s == "g_complete") return Completeness::GComplete;
    if (s == "weak_g_complete") return Completeness::WeakGComplete;
    if (s == "unknown") return Completeness::Unknown;
    throw ParseError("unknown completeness class: " + s);
}

bool completeness_satisfies(Completeness declared, Completeness required) {
    if (required == Completeness::Unknown) return true;
    if (declared == required) return true;
    // G-completeness implies completeness and weak G-completeness.
    if (declared == Completeness::GComplete &&
        (required == Completeness::Complete || required == Completeness::WeakGComplete))
        return true;
    return false;
}

TimeGrid TimeGrid::dyadic_default(const std::vector<Scalar>& breakpoints) {
    std::vector<Scalar> vals;
    Rational p(1);
    for (int k = 0; k < 20; ++k) p /= 2;
    for (int k = -20; k <= 20; ++k) {
        vals.push_back(Scalar::from_rational(p));
        p *= 2;
    }
    for (const auto& b : breakpoints)
        if (b.sign() > 0) vals.push_back(b);
    return from_values(std::move(vals));
}

TimeGrid TimeGrid::coarse() {
    return from_values({Scalar::from_rational(Rational(1, 2)), Scalar::from_int(1),
                        Scalar::from_int(2)});
}

TimeGrid TimeGrid::from_values(std::vector<Scalar> values) {
    for (const auto& v : values)
        if (v.sign() <= 0) throw ParameterError("time grid values must be positive: " + v.str());
    std::sort(values.begin(), values.end(), Scalar::key_less);
    values.erase(std::unique(values.begin(), values.end(),
                             [](const Scalar& a, const Scalar& b) { return a.identical(b); }),
                 values.end());
    if (values.empty()) throw ParameterError("time grid must be nonempty");
    TimeGrid g;
    g.values_ = std::move(values);
    return g;
}

bool TimeGrid::contains(const Scalar& t) const {
    return std::any_of(values_.begin(), values_.end(),
                       [&](const Scalar& v) { return v.compare(t) == 0; });
}

Membership Membership::ratio() {
    Membership m(Kind::Ratio);
    m.t_independent_ = true;
    return m;
}

Membership Membership::discrete() {
    Membership m(Kind::Discrete);
    m.t_independent_ = true;  // on t > 0
    return m;
}

Membership Membership::standard() { return Membership(Kind::Standard); }

Membership Membership::table(bool t_independent) {
    Membership m(Kind::Table);
    m.t_independent_ = t_independent;
    return m;
}

bool Membership::tuple_less(const std::tuple<Point, Point, Scalar>& a,
                            const std::tuple<Point, Point, Scalar>& b) {
    const auto& [ax, ay, at] = a;
    const auto& [bx, by, bt] = b;
    if (ax != bx) return ax < bx;
    if (ay != by) return ay < by;
    return Scalar::key_less(at, bt);
}

void Membership::table_set(const Point& x, const Point& y, const Scalar& t, UnitValue value) {
    if (kind_ != Kind::Table) throw DomainError("table_set on non-table membership");
    table_.insert_or_assign(std::make_tuple(x, y, t), std::move(value));
}

void Membership::table_set(const Point& x, const Point& y, UnitValue value) {
    table_set(x, y, Scalar::from_int(1), std::move(value));
}

std::vector<Scalar> Membership::table_breakpoints() const {
    std::vector<Scalar> out;
    if (kind_ != Kind::Table || t_independent_) return out;
    for (const auto& [key, _] : table_) {
        const Scalar& t = std::get<2>(key);
        if (!std::any_of(out.begin(), out.end(),
                         [&](const Scalar& v) { return v.identical(t); }))
            out.push_back(t);
    }
    return out;
}

std::string Membership::kind_name() const {
    switch (kind_) {
        case Kind::Ratio: return "ratio";
        case Kind::Discrete: return "discrete";
        case Kind::Standard: return "standard";
        case Kind::Table: return "table";
    }
    return "?";
}

UnitValue Membership::eval(const Point& x, const Point& y, const Scalar& t) const {
    switch (kind_) {
        case Kind::Ratio: {
            const Scalar& a = x.scalar();
            const Scalar& b = y.scalar();
            if (a.sign() <= 0 || b.sign() <= 0)
                throw DomainError("ratio metric requires positive points");
            if (a.compare(b) == 0) return UnitValue::one();
            return UnitValue(min(a, b) / max(a, b));
        }
        case Kind::Discrete:
            return (x == y && t.sign() > 0) ? UnitValue::one() : UnitValue::zero();
        case Kind::Standard: {
            if (t.sign() == 0) return UnitValue::zero();  // KM clause (a)
            const Scalar d = (x.scalar() - y.scalar()).abs();
            return UnitValue(t / (t + d));
        }
        case Kind::Table: {
            const Scalar key_t = t_independent_ ? Scalar::from_int(1) : t;
            auto it = table_.find(std::make_tuple(x, y, key_t));
            if (it == table_.end())
                throw GridMissError("membership table has no entry at (" + x.str() + ", " +
                                    y.str() + ", t=" + t.str() + ")");
            return it->second;
        }
    }
    throw DomainError("corrupt membership kind");
}

UnitValue metric_eval(const FuzzySpace& space, const Point& x, const Point& y, const Scalar& t) {
    if (t.sign() < 0) throw DomainError("negative time " + t.str());
    if (t.sign() == 0) {
        if (space.kind == SpaceKind::GV)
            throw DomainError("t = 0 is outside the GV domain");
        if (space.metric.kind() != Membership::Kind::Table) return UnitValue::zero();
    }
    return space.metric.eval(x, y, t);
}

namespace {

Witness pair_witness(const Point& x, const Point& y, const Scalar& t, const std::string& lhs,
                     const std::string& rel, const std::string& rhs) {
    return Witness{{{"x", x.str()}, {"y", y.str()}, {"t", t.str()}}, lhs, rel, rhs};
}

}  // namespace

AxiomReport check_axioms(const FuzzySpace& space, const std::vector<Point>& probe,
                         const TimeGrid& grid) {
    if (probe.empty()) throw PreconditionError("axiom check requires a nonempty probe set");
    AxiomReport report;
    report.subject = "fuzzy metric space (" + to_string(space.kind) + ", " +
                     space.metric.kind_name() + "/" + space.tnorm.name() + ")";
    const auto& ts = grid.values();
    const bool exact_in_t = space.t_independent;

    auto M = [&](const Point& x, const Point& y, const Scalar& t) {
        return metric_eval(space, x, y, t);
    };

    // (a) KM: M(x,y,0) = 0.  GV: M(x,y,t) > 0.
    {
        CheckItem item{"clause_a", CheckStatus::PassExact, std::nullopt, ""};
        if (space.kind == SpaceKind::KM) {
            item.note = "M(x,y,0) = 0";
            const Scalar zero = Scalar::from_int(0);
            for (const auto& x : probe) {
                for (const auto& y : probe) {
                    UnitValue v = [&] {
                        try {
                            return M(x, y, zero);
                        } catch (const GridMissError&) {
                            return UnitValue::zero();  // table without t=0 row: vacuous
                        }
                    }();
                    if (v.value().sign() != 0) {
                        item.status = CheckStatus::Fail;
                        item.witness = pair_witness(x, y, zero, v.str(), "=", "0");
                    }
                }
            }
        } else {
            item.note = "M(x,y,t) > 0";
            for (const auto& x : probe)
                for (const auto& y : probe)
                    for (const auto& t : ts)
                        if (M(x, y, t).value().sign() <= 0 && item.status != CheckStatus::Fail) {
                            item.status = CheckStatus::Fail;
                            item.witness = pair_witness(x, y, t, M(x, y, t).str(), ">", "0");
                        }
        }
        report.items.push_back(std::move(item));
    }

    // (b) M(x,y,t) = 1 (for all t) iff x = y.
    {
        CheckItem item{"clause_b", CheckStatus::PassExact, std::nullopt, "M = 1 iff x = y"};
        for (const auto& x : probe) {
            for (const auto& y : probe) {
                for (const auto& t : ts) {
                    const bool is_one = M(x, y, t).value().is_one();
                    if ((x == y) != is_one) {
                        item.status = CheckStatus::Fail;
                        item.witness = pair_witness(x, y, t, M(x, y, t).str(),
                                                    x == y ? "=" : "!=", "1");
                        break;
                    }
                }
                if (item.status == CheckStatus::Fail) break;
            }
            if (item.status == CheckStatus::Fail) break;
        }
        report.items.push_back(std::move(item));
    }

    // (c) Symmetry.
    {
        CheckItem item{"clause_c", CheckStatus::PassExact, std::nullopt, "symmetry"};
        for (const auto& x : probe) {
            for (const auto& y : probe) {
                for (const auto& t : ts) {
                    if (!(M(x, y, t).value() == M(y, x, t).value())) {
                        item.status = CheckStatus::Fail;
                        item.witness = pair_witness(x, y, t, M(x, y, t).str(), "=", M(y, x, t).str());
                        break;
                    }
                }
                if (item.status == CheckStatus::Fail) break;
            }
            if (item.status == CheckStatus::Fail) break;
        }
        report.items.push_back(std::move(item));
    }

    // (d) Triangle: M(x,y,t)*M(y,z,s) <= M(x,z,t+s).
    {
        CheckItem item{"clause_d", CheckStatus::PassExact, std::nullopt, "triangle via t-norm"};
        size_t skipped = 0;
        for (const auto& x : probe) {
            for (const auto& y : probe) {
                for (const auto& z : probe) {
                    for (const auto& t : ts) {
                        for (const auto& s : ts) {
                            try {
                                const UnitValue lhs = space.tnorm.apply(M(x, y, t), M(y, z, s));
                                const UnitValue rhs = M(x, z, t + s);
                                if (!(lhs.value() <= rhs.value())) {
                                    item.status = CheckStatus::Fail;
                                    item.witness = Witness{{{"x", x.str()},
                                                            {"y", y.str()},
                                                            {"z", z.str()},
                                                            {"t", t.str()},
                                                            {"s", s.str()}},
                                                           lhs.str(), "<=", rhs.str()};
                                    goto tri_done;
                                }
                            } catch (const GridMissError&) {
                                ++skipped;  // t+s off a table grid
                            }
                        }
                    }
                }
            }
        }
    tri_done:
        if (skipped > 0 && item.status != CheckStatus::Fail) {
            item.status = CheckStatus::PassSampled;
            item.note += "; skipped " + std::to_string(skipped) + " off-grid (t+s) pairs";
        }
        report.items.push_back(std::move(item));
    }

    // (e) Continuity of M(x,y,.).
    {
        CheckItem item{"clause_e", CheckStatus::PassExact, std::nullopt, ""};
        if (exact_in_t) {
            item.note = "constant in t (verified at grid points)";
            for (const auto& x : probe)
                for (const auto& y : probe)
                    for (size_t i = 0; i + 1 < ts.size(); ++i)
                        if (!(M(x, y, ts[i]).value() == M(x, y, ts[i + 1]).value()) &&
                            item.status != CheckStatus::Fail) {
                            item.status = CheckStatus::Fail;
                            item.witness = pair_witness(x, y, ts[i], "M at adjacent grid times",
                                                        "=", "constant");
                        }
        } else if (space.metric.kind() == Membership::Kind::Standard) {
            item.note = "analytic: t/(t+d) continuous in t";
        } else {
            // Table metric: compare left-limit sample (previous breakpoint)
            // against the value at each breakpoint.
            item.status = CheckStatus::PassSampled;
            item.note = space.kind == SpaceKind::KM ? "left-continuity at declared breakpoints"
                                                    : "continuity at declared breakpoints";
            const auto bps = space.metric.table_breakpoints();
            for (const auto& x : probe) {
                for (const auto& y : probe) {
                    for (size_t i = 0; i + 1 < bps.size(); ++i) {
                        try {
                            const double jump = std::abs(M(x, y, bps[i + 1]).value().to_double() -
                                                         M(x, y, bps[i]).value().to_double());
                            if (jump > 0.5) {
                                item.status = CheckStatus::Fail;
                                item.witness = pair_witness(
                                    x, y, bps[i + 1], "jump from previous breakpoint", "<=", "0.5");
                            }
                        } catch (const GridMissError&) {
                        }
                    }
                }
            }
        }
        report.items.push_back(std::move(item));
    }

    return report;
}

AxiomReport check_non_archimedean(const FuzzySpace& space, const std::vector<Point>& probe,
                                  const TimeGrid& grid) {
    if (probe.empty()) throw PreconditionError("non-Archimedean check requires probes");
    AxiomReport report;
    report.subject = "non-Archimedean property";
    CheckItem item{"strong_triangle", CheckStatus::PassExact, std::nullopt,
                   "M(x,y,t)*M(y,z,s) <= M(x,z,max(t,s))"};
    const auto& ts = grid.values();
    for (const auto& x : probe) {
        for (const auto& y : probe) {
            for (const auto& z : probe) {
                for (const auto& t : ts) {
                    for (const auto& s : ts) {
                        const UnitValue lhs = space.tnorm.apply(metric_eval(space, x, y, t),
                                                                metric_eval(space, y, z, s));
                        const UnitValue rhs = metric_eval(space, x, z, max(t, s));
                        if (!(lhs.value() <= rhs.value())) {
                            item.status = CheckStatus::Fail;
                            item.witness = Witness{{{"x", x.str()},
                                                    {"y", y.str()},
                                                    {"z", z.str()},
                                                    {"t", t.str()},
                                                    {"s", s.str()}},
                                                   lhs.str(), "<=", rhs.str()};
                            goto done;
                        }
                    }
                }
            }
        }
    }
done:
    report.items.push_back(std::move(item));
    return report;
}

AxiomReport check_monotone_in_t(const FuzzySpace& space, const std::vector<Point>& probe,
                                const TimeGrid& grid) {
    if (probe.empty()) throw PreconditionError("monotonicity check requires probes");
    AxiomReport report;
    report.subject = "monotonicity of M(x,y,.) in t";
    CheckItem item{"nondecreasing_in_t", CheckStatus::PassExact, std::nullopt, ""};
    const auto& ts = grid.values();
    for (const auto& x : probe) {
        for (const auto& y : probe) {
            for (size_t i = 0; i + 1 < ts.size(); ++i) {
                try {
                    const UnitValue lo = metric_eval(space, x, y, ts[i]);
                    const UnitValue hi = metric_eval(space, x, y, ts[i + 1]);
                    if (!(lo.value() <= hi.value())) {
                        item.status = CheckStatus::Fail;
                        item.witness = Witness{{{"x", x.str()},
                                                {"y", y.str()},
                                                {"t", ts[i].str()},
                                                {"t'", ts[i + 1].str()}},
                                               lo.str(), "<=", hi.str()};
                        goto done;
                    }
                } catch (const GridMissError&) {
                }
            }
        }
    }
done:
    report.items.push_back(std::move(item));
    return report;
}

bool ball_contains(const FuzzySpace& space, const Point& center, const UnitValue& r,
                   const Scalar& t, const Point& y) {
    if (r.value().sign() <= 0 || !(r.value() < Scalar::from_int(1)))
        throw DomainError("ball radius must lie in (0,1)");
    if (t.sign() <= 0) throw DomainError("ball time must be positive");
    return metric_eval(space, center, y, t).value() > Scalar::from_int(1) - r.value();
}

}  // namespace ffp
