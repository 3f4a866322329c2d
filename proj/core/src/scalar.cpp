#include "ffp/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace ffp {

namespace mp = boost::multiprecision;

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    if (q == 0) return Rational(0);
    BigInt num = mp::numerator(q);
    BigInt den = mp::denominator(q);
    BigInt rn = mp::sqrt(num);
    BigInt rd = mp::sqrt(den);
    if (rn * rn != num || rd * rd != den) return std::nullopt;
    return Rational(rn, rd);
}

int sign_a_plus_b_sqrt2(const Rational& a, const Rational& b) {
    const int sa = a.sign();
    const int sb = b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: sign(a + b*sqrt2) = sign((a + b*sqrt2)(a - b*sqrt2)) * sign(a - b*sqrt2),
    // and a - b*sqrt2 has the sign of a here.
    const Rational norm = a * a - 2 * b * b;  // zero impossible for rational a,b not both 0
    return norm.sign() * sa;
}

Scalar Scalar::from_rational(Rational q) {
    Scalar s;
    s.a_ = std::move(q);
    s.b_ = 0;
    s.exact_ = true;
    return s;
}

Scalar Scalar::from_sqrt2_pair(Rational a, Rational b) {
    Scalar s;
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    s.exact_ = true;
    return s;
}

Scalar Scalar::approx(double value, double tol) {
    if (!std::isfinite(value)) throw DomainError("approximate scalar must be finite");
    Scalar s;
    s.exact_ = false;
    s.approx_ = value;
    s.tol_ = tol;
    return s;
}

bool Scalar::is_rational() const {
    if (!exact_) throw DomainError("Q-membership undecidable for approximate scalar");
    return b_ == 0;
}

const Rational& Scalar::as_rational() const {
    if (!exact_ || b_ != 0) throw DomainError("scalar is not an exact rational: " + str());
    return a_;
}

double Scalar::to_double() const {
    if (!exact_) return approx_;
    return static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(2.0);
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (exact_ && o.exact_) return from_sqrt2_pair(a_ + o.a_, b_ + o.b_);
    return approx(to_double() + o.to_double(), std::max(tolerance(), o.tolerance()) * 2 + 1e-15);
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    if (exact_) return from_sqrt2_pair(-a_, -b_);
    return approx(-approx_, tol_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    if (exact_ && o.exact_) {
        return from_sqrt2_pair(a_ * o.a_ + 2 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    return approx(to_double() * o.to_double(), std::max(tolerance(), o.tolerance()) * 4 + 1e-15);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.sign() == 0) throw DomainError("division by zero scalar");
    if (exact_ && o.exact_) {
        // 1/(c + d*sqrt2) = (c - d*sqrt2) / (c^2 - 2 d^2)
        const Rational norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
        const Rational inv_a = o.a_ / norm;
        const Rational inv_b = -o.b_ / norm;
        return *this * from_sqrt2_pair(inv_a, inv_b);
    }
    return approx(to_double() / o.to_double(), std::max(tolerance(), o.tolerance()) * 4 + 1e-15);
}

int Scalar::sign() const {
    if (exact_) return sign_a_plus_b_sqrt2(a_, b_);
    if (std::abs(approx_) <= tol_) return 0;
    return approx_ > 0 ? 1 : -1;
}

int Scalar::compare(const Scalar& o) const {
    if (exact_ && o.exact_) return sign_a_plus_b_sqrt2(a_ - o.a_, b_ - o.b_);
    const double d = to_double() - o.to_double();
    const double tol = std::max({tolerance(), o.tolerance(), 1e-15});
    if (std::abs(d) <= tol) return 0;
    return d > 0 ? 1 : -1;
}

bool Scalar::identical(const Scalar& o) const {
    if (exact_ != o.exact_) return false;
    if (exact_) return a_ == o.a_ && b_ == o.b_;
    return approx_ == o.approx_ && tol_ == o.tol_;
}

bool Scalar::key_less(const Scalar& lhs, const Scalar& rhs) {
    if (lhs.exact_ != rhs.exact_) return lhs.exact_ && !rhs.exact_;
    if (lhs.exact_) {
        if (lhs.a_ != rhs.a_) return lhs.a_ < rhs.a_;
        return lhs.b_ < rhs.b_;
    }
    return lhs.approx_ < rhs.approx_;
}

std::optional<Scalar> Scalar::exact_sqrt() const {
    if (!exact_) return std::nullopt;
    const int s = sign();
    if (s < 0) return std::nullopt;
    if (s == 0) return from_int(0);
    if (b_ == 0) {
        if (auto r = rational_sqrt(a_)) return from_rational(*r);
        // sqrt(q) = sqrt(2q)/sqrt(2) = (sqrt(2q)/2)*sqrt(2) when 2q is a square.
        if (auto r2 = rational_sqrt(2 * a_)) return from_sqrt2_pair(Rational(0), *r2 / 2);
        return std::nullopt;
    }
    // Solve (c + d*sqrt2)^2 = a + b*sqrt2: c^2 + 2d^2 = a, 2cd = b.
    // c^2 = (a +- sqrt(a^2 - 2 b^2)) / 2.
    const Rational disc = a_ * a_ - 2 * b_ * b_;
    auto e = rational_sqrt(disc);
    if (!e) return std::nullopt;
    for (const Rational& c2 : {(a_ + *e) / 2, (a_ - *e) / 2}) {
        if (c2 < 0) continue;
        auto c = rational_sqrt(c2);
        if (!c || *c == 0) continue;
        const Rational d = b_ / (2 * *c);
        if (sign_a_plus_b_sqrt2(*c, d) > 0) return from_sqrt2_pair(*c, d);
        if (sign_a_plus_b_sqrt2(-*c, -d) > 0) return from_sqrt2_pair(-*c, -d);
    }
    return std::nullopt;
}

Scalar Scalar::sqrt_or_approx() const {
    if (sign() < 0) throw DomainError("square root of negative scalar " + str());
    if (auto e = exact_sqrt()) return *e;
    return approx(std::sqrt(to_double()), std::max(tolerance(), kDefaultTolerance));
}

namespace {

std::string rational_str(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

Rational parse_rational_token(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError("empty scalar literal");
    // Plain "p", "p/q" or decimal "d.ddd".
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        const size_t frac_len = s.size() - dot - 1;
        bool neg = false;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            neg = digits[0] == '-';
            digits.erase(0, 1);
        }
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad decimal literal: " + s);
        Rational r(BigInt(digits), mp::pow(BigInt(10), static_cast<unsigned>(frac_len)));
        return neg ? -r : r;
    }
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar literal");
    if (s[0] == '~') {
        char* end = nullptr;
        const double v = std::strtod(s.c_str() + 1, &end);
        if (end == s.c_str() + 1 || *end != '\0') throw ParseError("bad approximate literal: " + s);
        return approx(v);
    }
    // Optional "rational*inv_sqrt2" term, optionally preceded by "rational+/-".
    const auto tag = s.find("inv_sqrt2");
    if (tag == std::string::npos) return from_rational(parse_rational_token(s));

    Rational a(0);
    std::string term = s;
    // Split a leading rational part at the last '+' or '-' before the tag
    // (skipping a sign at position 0 and exponent-free rationals have no inner sign).
    for (size_t i = tag; i-- > 1;) {
        if (s[i] == '+' || s[i] == '-') {
            if (s[i - 1] == '/' || s[i - 1] == '*') continue;
            a = parse_rational_token(s.substr(0, i));
            term = s.substr(s[i] == '+' ? i + 1 : i);
            break;
        }
    }
    const auto term_tag = term.find("inv_sqrt2");
    std::string coeff = term.substr(0, term_tag);
    std::string rest = term.substr(term_tag + 9);
    if (!rest.empty()) throw ParseError("bad scalar literal: " + std::string(text));
    Rational c(1);
    if (!coeff.empty()) {
        if (coeff == "-") {
            c = -1;
        } else {
            if (coeff.back() != '*') throw ParseError("bad scalar literal: " + std::string(text));
            c = parse_rational_token(coeff.substr(0, coeff.size() - 1));
        }
    }
    // c * inv_sqrt2 = (c/2) * sqrt2
    return from_sqrt2_pair(a, c / 2);
}

std::string Scalar::str() const {
    if (!exact_) {
        std::ostringstream os;
        os << '~';
        os.precision(17);
        os << approx_;
        return os.str();
    }
    if (b_ == 0) return rational_str(a_);
    const Rational c = 2 * b_;  // coefficient on inv_sqrt2
    std::string term;
    if (c == 1)
        term = "inv_sqrt2";
    else if (c == -1)
        term = "-inv_sqrt2";
    else
        term = rational_str(c) + "*inv_sqrt2";
    if (a_ == 0) return term;
    if (c.sign() > 0) return rational_str(a_) + "+" + term;
    return rational_str(a_) + term;
}

UnitValue::UnitValue(Scalar v) : v_(std::move(v)) {
    static const Scalar zero = Scalar::from_int(0);
    static const Scalar one = Scalar::from_int(1);
    if (v_.compare(zero) < 0 || v_.compare(one) > 0)
        throw DomainError("value outside [0,1]: " + v_.str());
}

}  // namespace ffp
