#include "q4v/polyring.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace q4v {

namespace {

std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s > std::numeric_limits<std::uint32_t>::max()) throw ExponentOverflow();
    return static_cast<std::uint32_t>(s);
}

Rational rational_gcd(const Rational& a, const Rational& b) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    BigInt n = gcd(numerator(a), numerator(b));
    BigInt d = lcm(denominator(a), denominator(b));
    return Rational(n, d);
}

void fold_content(Rational& acc, const Rational& q, bool& any) {
    if (q == 0) return;
    Rational a = q < 0 ? Rational(-q) : q;
    if (!any) {
        acc = a;
        any = true;
    } else {
        acc = rational_gcd(acc, a);
    }
}

}  // namespace

BiPoly BiPoly::monomial(std::uint32_t a, std::uint32_t b, const RadicalScalar& c) {
    BiPoly p;
    if (!c.is_zero()) p.terms_.emplace(Monomial{a, b}, c);
    return p;
}

RadicalScalar BiPoly::coeff(std::uint32_t a, std::uint32_t b) const {
    auto it = terms_.find(Monomial{a, b});
    return it == terms_.end() ? RadicalScalar() : it->second;
}

std::uint32_t BiPoly::deg_z() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.z);
    return d;
}

std::uint32_t BiPoly::deg_zbar() const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.zbar);
    return d;
}

std::uint32_t BiPoly::min_deg_z() const {
    std::uint32_t d = std::numeric_limits<std::uint32_t>::max();
    for (const auto& [m, c] : terms_) d = std::min(d, m.z);
    return terms_.empty() ? 0 : d;
}

std::uint32_t BiPoly::min_deg_zbar() const {
    std::uint32_t d = std::numeric_limits<std::uint32_t>::max();
    for (const auto& [m, c] : terms_) d = std::min(d, m.zbar);
    return terms_.empty() ? 0 : d;
}

void BiPoly::add_term(const Monomial& m, const RadicalScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

BiPoly operator+(BiPoly a, const BiPoly& b) {
    a += b;
    return a;
}

BiPoly operator-(BiPoly a, const BiPoly& b) {
    a -= b;
    return a;
}

BiPoly operator-(const BiPoly& a) {
    BiPoly out;
    out -= a;
    return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m{checked_add(ma.z, mb.z), checked_add(ma.zbar, mb.zbar)};
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

BiPoly operator*(const BiPoly& a, const RadicalScalar& c) {
    return a.scaled(c);
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly out = BiPoly::one();
    BiPoly base = *this;
    while (e) {
        if (e & 1) out = out * base;
        base = (e >>= 1) ? base * base : base;
    }
    return out;
}

std::optional<BiPoly> BiPoly::divided_exactly(const BiPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero();
    if (is_zero()) return BiPoly::zero();
    const auto& lead = *divisor.terms_.rbegin();
    RadicalScalar lead_inv = lead.second.inverse();
    BiPoly remainder = *this;
    BiPoly quotient;
    while (!remainder.is_zero()) {
        const auto& top = *remainder.terms_.rbegin();
        if (top.first.z < lead.first.z || top.first.zbar < lead.first.zbar) return std::nullopt;
        Monomial m{top.first.z - lead.first.z, top.first.zbar - lead.first.zbar};
        RadicalScalar c = top.second * lead_inv;
        quotient.add_term(m, c);
        remainder -= divisor * BiPoly::monomial(m.z, m.zbar, c);
    }
    return quotient;
}

Rational BiPoly::content() const {
    Rational acc(1);
    bool any = false;
    for (const auto& [m, c] : terms_) {
        for (const auto& [rad, g] : c.terms()) {
            fold_content(acc, g.re, any);
            fold_content(acc, g.im, any);
        }
    }
    return any ? acc : Rational(1);
}

BiPoly BiPoly::scaled(const RadicalScalar& c) const {
    BiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
    return out;
}

BiPoly BiPoly::shifted_down(std::uint32_t dz, std::uint32_t dzbar) const {
    BiPoly out;
    for (const auto& [m, c] : terms_) {
        out.terms_.emplace(Monomial{m.z - dz, m.zbar - dzbar}, c);
    }
    return out;
}

std::complex<double> BiPoly::eval(const std::complex<double>& z) const {
    std::complex<double> zb = std::conj(z);
    std::complex<double> out{0.0, 0.0};
    for (const auto& [m, c] : terms_) {
        std::complex<double> t = c.to_float();
        for (std::uint32_t k = 0; k < m.z; ++k) t *= z;
        for (std::uint32_t k = 0; k < m.zbar; ++k) t *= zb;
        out += t;
    }
    return out;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        if (m.z == 1) mono = "z";
        else if (m.z > 1) mono = "z^" + std::to_string(m.z);
        if (m.zbar >= 1) {
            if (!mono.empty()) mono += "*";
            mono += (m.zbar == 1) ? "zb" : "zb^" + std::to_string(m.zbar);
        }
        std::string cs = c.to_string();
        std::string body;
        if (mono.empty()) {
            body = cs.find(' ') != std::string::npos ? "(" + cs + ")" : cs;
        } else if (cs == "1") {
            body = mono;
        } else if (cs == "-1") {
            body = "-" + mono;
        } else if (cs.find(' ') != std::string::npos || cs.find("sqrt") != std::string::npos ||
                   cs == "i" || cs == "-i") {
            body = "(" + cs + ")*" + mono;
        } else {
            body = cs + "*" + mono;
        }
        if (first) {
            out = body;
            first = false;
        } else if (body[0] == '-') {
            out += " - " + body.substr(1);
        } else {
            out += " + " + body;
        }
    }
    return out;
}

BiPoly d_z(const BiPoly& p) {
    BiPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (m.z == 0) continue;
        out.add_term(Monomial{m.z - 1, m.zbar}, c * RadicalScalar(Rational(m.z)));
    }
    return out;
}

BiPoly d_zbar(const BiPoly& p) {
    BiPoly out;
    for (const auto& [m, c] : p.terms()) {
        if (m.zbar == 0) continue;
        out.add_term(Monomial{m.z, m.zbar - 1}, c * RadicalScalar(Rational(m.zbar)));
    }
    return out;
}

BiPoly conj_swap(const BiPoly& p) {
    BiPoly out;
    for (const auto& [m, c] : p.terms()) {
        out.add_term(Monomial{m.zbar, m.z}, c.conjugate());
    }
    return out;
}

RationalFn::RationalFn(BiPoly numerator, BiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw ZeroDenominator();
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = BiPoly::one();
        return;
    }
    std::uint32_t dz = std::min(num_.min_deg_z(), den_.min_deg_z());
    std::uint32_t dzb = std::min(num_.min_deg_zbar(), den_.min_deg_zbar());
    if (dz || dzb) {
        num_ = num_.shifted_down(dz, dzb);
        den_ = den_.shifted_down(dz, dzb);
    }
    if (den_ != BiPoly::one()) {
        if (auto q = num_.divided_exactly(den_)) {
            num_ = std::move(*q);
            den_ = BiPoly::one();
        } else if (auto r = den_.divided_exactly(num_)) {
            den_ = std::move(*r);
            num_ = BiPoly::one();
        }
    }
    Rational g = rational_gcd(num_.content(), den_.content());
    if (g != 1) {
        RadicalScalar inv = RadicalScalar(Rational(1) / g);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFn& RationalFn::operator+=(const RationalFn& rhs) {
    if (den_ == rhs.den_) {
        num_ += rhs.num_;
    } else if (auto q = rhs.den_.divided_exactly(den_)) {
        num_ = num_ * *q + rhs.num_;
        den_ = rhs.den_;
    } else if (auto r = den_.divided_exactly(rhs.den_)) {
        num_ += rhs.num_ * *r;
    } else {
        num_ = num_ * rhs.den_ + rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    normalize();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& rhs) {
    if (den_ == rhs.den_) {
        num_ -= rhs.num_;
    } else if (auto q = rhs.den_.divided_exactly(den_)) {
        num_ = num_ * *q - rhs.num_;
        den_ = rhs.den_;
    } else if (auto r = den_.divided_exactly(rhs.den_)) {
        num_ -= rhs.num_ * *r;
    } else {
        num_ = num_ * rhs.den_ - rhs.num_ * den_;
        den_ = den_ * rhs.den_;
    }
    normalize();
    return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& rhs) {
    BiPoly rnum = rhs.num_;
    BiPoly rden = rhs.den_;
    if (rden != BiPoly::one()) {
        if (auto q = num_.divided_exactly(rden)) {
            num_ = std::move(*q);
            rden = BiPoly::one();
        }
    }
    if (den_ != BiPoly::one() && !rnum.is_zero()) {
        if (auto q = rnum.divided_exactly(den_)) {
            rnum = std::move(*q);
            den_ = BiPoly::one();
        }
    }
    num_ = num_ * rnum;
    den_ = den_ * rden;
    normalize();
    return *this;
}

RationalFn operator+(RationalFn a, const RationalFn& b) {
    a += b;
    return a;
}

RationalFn operator-(RationalFn a, const RationalFn& b) {
    a -= b;
    return a;
}

RationalFn operator-(const RationalFn& a) {
    return RationalFn(-a.num(), a.den());
}

RationalFn operator*(RationalFn a, const RationalFn& b) {
    a *= b;
    return a;
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    return a * b.reciprocal();
}

RationalFn RationalFn::reciprocal() const {
    if (num_.is_zero()) throw DivisionByZero();
    return RationalFn(den_, num_);
}

std::complex<double> RationalFn::eval(const std::complex<double>& z) const {
    std::complex<double> d = den_.eval(z);
    if (d == std::complex<double>(0.0, 0.0)) throw PoleError();
    return num_.eval(z) / d;
}

std::optional<RadicalScalar> RationalFn::is_constant() const {
    if (num_.is_zero()) return RadicalScalar(0);
    const auto& [m, d] = *den_.terms().begin();
    RadicalScalar c = num_.coeff(m.z, m.zbar) * d.inverse();
    if (c.is_zero()) return std::nullopt;
    if (num_ == den_.scaled(c)) return c;
    return std::nullopt;
}

std::string RationalFn::to_string() const {
    if (den_ == BiPoly::one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFn d_z(const RationalFn& r) {
    return RationalFn(d_z(r.num()) * r.den() - r.num() * d_z(r.den()), r.den() * r.den());
}

RationalFn d_zbar(const RationalFn& r) {
    return RationalFn(d_zbar(r.num()) * r.den() - r.num() * d_zbar(r.den()), r.den() * r.den());
}

RationalFn conj_swap(const RationalFn& r) {
    return RationalFn(conj_swap(r.num()), conj_swap(r.den()));
}

RationalFn log_laplacian(const BiPoly& p) {
    if (p.is_zero()) throw PreconditionError("log_laplacian of the zero polynomial");
    return RationalFn(p * d_z(d_zbar(p)) - d_z(p) * d_zbar(p), p * p);
}

RationalFn log_laplacian(const RationalFn& r) {
    if (r.is_zero()) throw PreconditionError("log_laplacian of the zero function");
    return log_laplacian(r.num()) - log_laplacian(r.den());
}

std::complex<double> eval(const BiPoly& p, const std::complex<double>& z) {
    return p.eval(z);
}

std::complex<double> eval(const RationalFn& r, const std::complex<double>& z) {
    return r.eval(z);
}

}  // namespace q4v
