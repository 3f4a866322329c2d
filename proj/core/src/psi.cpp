#include "ffp/psi.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ffp/errors.hpp"

namespace ffp {

PsiValue PsiValue::sqrt_of(Scalar radicand) {
    if (radicand.sign() < 0)
        throw DomainError("square root of negative scalar " + radicand.str());
    if (auto e = radicand.exact_sqrt()) return direct(*e);
    return PsiValue(std::move(radicand), true);
}

int PsiValue::compare(const PsiValue& o) const {
    if (!sqrt_ && !o.sqrt_) return v_.compare(o.v_);
    if (sqrt_ && o.sqrt_) return v_.compare(o.v_);  // radicands; sqrt is monotone
    // direct s vs sqrt(q): s < 0 => less; otherwise compare s^2 vs q.
    const PsiValue& d = sqrt_ ? o : *this;
    const PsiValue& r = sqrt_ ? *this : o;
    int c;
    if (d.v_.sign() < 0)
        c = -1;
    else
        c = (d.v_ * d.v_).compare(r.v_);
    return sqrt_ ? -c : c;
}

bool PsiValue::is_exact() const { return v_.is_exact(); }

Scalar PsiValue::to_scalar() const { return sqrt_ ? v_.sqrt_or_approx() : v_; }

std::string PsiValue::str() const {
    return sqrt_ ? "sqrt(" + v_.str() + ")" : v_.str();
}

PsiFunction PsiFunction::affine_half() { return PsiFunction(Kind::AffineHalf); }

PsiFunction PsiFunction::sqrt_kind() { return PsiFunction(Kind::Sqrt); }

PsiFunction PsiFunction::capped(Scalar a) {
    if (!(a > Scalar::from_int(1)))
        throw ParameterError("capped psi requires a > 1, got " + a.str());
    PsiFunction p(Kind::Capped);
    p.cap_ = std::move(a);
    return p;
}

PsiFunction PsiFunction::user(const std::string& expression) {
    PsiFunction p(Kind::User);
    p.expr_ = std::make_shared<const Expr>(Expr::parse(expression));
    return p;
}

PsiFunction PsiFunction::min_of(std::vector<PsiFunction> components) {
    if (components.empty()) throw ParameterError("min_of needs at least one component");
    PsiFunction p(Kind::MinOf);
    p.components_ = std::move(components);
    return p;
}

PsiFunction PsiFunction::from_name(const std::string& name) {
    if (name == "affine_half") return affine_half();
    if (name == "sqrt") return sqrt_kind();
    if (name.rfind("capped:a=", 0) == 0) return capped(Scalar::parse(name.substr(9)));
    if (name.rfind("user:", 0) == 0) return user(name.substr(5));
    throw NotFoundError("unknown psi function: " + name);
}

std::string PsiFunction::name() const {
    switch (kind_) {
        case Kind::AffineHalf: return "affine_half";
        case Kind::Sqrt: return "sqrt";
        case Kind::Capped: return "capped:a=" + cap_.str();
        case Kind::User: return "user:" + expr_->text();
        case Kind::MinOf: {
            std::string s = "min_of(";
            for (size_t i = 0; i < components_.size(); ++i) {
                if (i) s += ",";
                s += components_[i].name();
            }
            return s + ")";
        }
    }
    return "?";
}

PsiValue PsiFunction::value_at(const Scalar& x) const {
    switch (kind_) {
        case Kind::AffineHalf:
            return PsiValue::direct((Scalar::from_int(1) + x) / Scalar::from_int(2));
        case Kind::Sqrt:
            if (!x.is_exact()) return PsiValue::direct(x.sqrt_or_approx());
            return PsiValue::sqrt_of(x);
        case Kind::Capped: {
            const Scalar ax = cap_ * x;
            if (!x.is_exact()) {
                const double v = std::min(ax.to_double(), std::sqrt(x.to_double()));
                return PsiValue::direct(Scalar::approx(v, x.tolerance()));
            }
            PsiValue linear = PsiValue::direct(ax);
            PsiValue root = PsiValue::sqrt_of(x);
            return linear.compare(root) <= 0 ? linear : root;
        }
        case Kind::User: {
            const Scalar v = expr_->eval(Scalar::approx(x.to_double(), x.tolerance()));
            return PsiValue::direct(Scalar::approx(v.to_double(), Scalar::kDefaultTolerance));
        }
        case Kind::MinOf: {
            PsiValue best = components_.front().value_at(x);
            for (size_t i = 1; i < components_.size(); ++i) {
                PsiValue v = components_[i].value_at(x);
                if (v.compare(best) < 0) best = v;
            }
            return best;
        }
    }
    throw DomainError("corrupt psi kind");
}

Scalar PsiFunction::eval(const Scalar& x) const { return value_at(x).to_scalar(); }

namespace {

/// Three-way psi(x1) ? psi(x2) without materializing roots.
int compare_psi_values(const PsiFunction& psi, const Scalar& x1, const Scalar& x2) {
    return psi.value_at(x1).compare(psi.value_at(x2));
}

}  // namespace

AxiomReport psi_validate(const PsiFunction& psi, const std::vector<UnitValue>& grid) {
    if (grid.size() < 2) throw PreconditionError("psi validation requires a grid with endpoints");
    AxiomReport report;
    report.subject = "psi '" + psi.name() + "'";
    const bool approximate = psi.kind() == PsiFunction::Kind::User;

    auto sorted = grid;
    std::sort(sorted.begin(), sorted.end(),
              [](const UnitValue& a, const UnitValue& b) { return a.value() < b.value(); });

    const CheckStatus pass = approximate ? CheckStatus::PassSampled : CheckStatus::PassExact;

    // psi(1) = 1.
    {
        CheckItem item{"fixes_one", pass, std::nullopt, ""};
        if (psi.compare_applied(Scalar::from_int(1), Scalar::from_int(1)) != 0) {
            item.status = CheckStatus::Fail;
            item.witness = Witness{{{"t", "1"}},
                                   psi.value_at(Scalar::from_int(1)).str(), "=", "1"};
        }
        report.items.push_back(std::move(item));
    }

    // Nondecreasing across the sorted grid.
    {
        CheckItem item{"nondecreasing", pass, std::nullopt, "grid-adjacent pairs"};
        for (size_t i = 0; i + 1 < sorted.size(); ++i) {
            if (compare_psi_values(psi, sorted[i].value(), sorted[i + 1].value()) > 0) {
                item.status = CheckStatus::Fail;
                item.witness = Witness{{{"t", sorted[i].str()}, {"t'", sorted[i + 1].str()}},
                                       "psi(t)", "<=", "psi(t')"};
                break;
            }
        }
        report.items.push_back(std::move(item));
    }

    // Strict dominance psi(t) > t on interior grid points.
    {
        CheckItem item{"dominance", pass, std::nullopt, "interior grid points"};
        for (const auto& t : sorted) {
            if (t.value().sign() <= 0 || t.value() >= Scalar::from_int(1)) continue;
            if (psi.compare_applied(t.value(), t.value()) <= 0) {
                item.status = CheckStatus::Fail;
                item.witness = Witness{{{"t", t.str()}},
                                       psi.value_at(t.value()).str(), ">", t.str()};
                break;
            }
        }
        report.items.push_back(std::move(item));
    }

    // Range within [0,1].
    {
        CheckItem item{"range", pass, std::nullopt, ""};
        for (const auto& t : sorted) {
            const PsiValue v = psi.value_at(t.value());
            if (v.compare(Scalar::from_int(0)) < 0 || v.compare(Scalar::from_int(1)) > 0) {
                item.status = CheckStatus::Fail;
                item.witness = Witness{{{"t", t.str()}}, v.str(), "in", "[0,1]"};
                break;
            }
        }
        report.items.push_back(std::move(item));
    }

    // Continuity.
    {
        CheckItem item{"continuity", CheckStatus::PassExact, std::nullopt, ""};
        if (psi.analytically_continuous()) {
            item.note = "analytic for built-in kind";
        } else {
            item.status = CheckStatus::PassSampled;
            item.note = "adjacent-grid oscillation bound";
            for (size_t i = 0; i + 1 < sorted.size(); ++i) {
                const double h = sorted[i + 1].value().to_double() - sorted[i].value().to_double();
                const double jump = std::abs(psi.eval(sorted[i + 1].value()).to_double() -
                                             psi.eval(sorted[i].value()).to_double());
                if (jump > 0.25 + 2.0 * std::sqrt(h)) {
                    item.status = CheckStatus::Fail;
                    item.witness = Witness{{{"t", sorted[i].str()}, {"t'", sorted[i + 1].str()}},
                                           "oscillation", "<=", "0.25 + 2*sqrt(h)"};
                    break;
                }
            }
        }
        report.items.push_back(std::move(item));
    }

    return report;
}

UnitValue psi_iterate(const PsiFunction& psi, const UnitValue& r, unsigned n) {
    Scalar v = r.value();
    for (unsigned i = 0; i < n; ++i) v = psi.eval(v);
    // Clamp approximate drift just outside [0,1].
    if (!v.is_exact()) {
        if (v.to_double() > 1.0) v = Scalar::approx(1.0, v.tolerance());
        if (v.to_double() < 0.0) v = Scalar::approx(0.0, v.tolerance());
    }
    return UnitValue(v);
}

unsigned affine_half_steps_to_within(const UnitValue& r, const Rational& eps) {
    if (eps <= 0) throw ParameterError("eps must be positive");
    const Rational gap = Rational(1) - r.value().as_rational();
    Rational pow2(1);
    unsigned n = 0;
    while (gap > eps * pow2) {
        pow2 *= 2;
        ++n;
    }
    return n;
}

}  // namespace ffp
