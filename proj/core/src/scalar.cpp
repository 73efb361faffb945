#include "q4v/scalar.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace q4v {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    try {
        Rational q(text);
        return q;
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + text);
    }
}

std::string rational_to_string(const Rational& q) {
    return q.str();
}

double rational_to_double(const Rational& q) {
    return q.convert_to<double>();
}

GaussianRational GaussianRational::inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw DivisionByZero();
    return {re / n, -im / n};
}

std::complex<double> GaussianRational::to_float() const {
    return {rational_to_double(re), rational_to_double(im)};
}

std::string GaussianRational::to_string() const {
    if (im == 0) return rational_to_string(re);
    std::string imag = (im == 1) ? "i" : (im == -1) ? "-i" : rational_to_string(im) + "*i";
    if (re == 0) return imag;
    std::string out = rational_to_string(re);
    if (imag[0] == '-') {
        out += " - " + imag.substr(1);
    } else {
        out += " + " + imag;
    }
    return out;
}

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
}

GaussianRational operator-(const GaussianRational& a) {
    return {-a.re, -a.im};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

std::pair<std::uint64_t, std::uint64_t> square_free_decomposition(std::uint64_t n) {
    std::uint64_t square = 1;
    std::uint64_t free_part = 1;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p) continue;
        unsigned exp = 0;
        while (n % p == 0) {
            n /= p;
            ++exp;
        }
        for (unsigned k = 0; k + 1 < exp; k += 2) square *= p;
        if (exp % 2) free_part *= p;
    }
    free_part *= n;
    return {square, free_part};
}

namespace {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
        if (n % p == 0) return p;
    }
    return n;
}

}  // namespace

RadicalScalar::RadicalScalar(int value) : RadicalScalar(Rational(value)) {}

RadicalScalar::RadicalScalar(Rational value) {
    if (value != 0) terms_.emplace(1, GaussianRational(std::move(value)));
}

RadicalScalar::RadicalScalar(GaussianRational value) {
    if (!value.is_zero()) terms_.emplace(1, std::move(value));
}

RadicalScalar RadicalScalar::i() {
    return RadicalScalar(GaussianRational{Rational(0), Rational(1)});
}

RadicalScalar RadicalScalar::sqrt_of(std::uint64_t n) {
    if (n == 0) return {};
    auto [s, r] = square_free_decomposition(n);
    return term(r, GaussianRational(Rational(s)));
}

RadicalScalar RadicalScalar::term(std::uint64_t radicand, const GaussianRational& coeff) {
    if (radicand == 0 || coeff.is_zero()) return {};
    auto [s, r] = square_free_decomposition(radicand);
    RadicalScalar out;
    GaussianRational c = coeff;
    if (s != 1) c = c * GaussianRational(Rational(s));
    out.terms_.emplace(r, std::move(c));
    return out;
}

void RadicalScalar::add_term(std::uint64_t radicand, const GaussianRational& coeff) {
    auto it = terms_.find(radicand);
    if (it == terms_.end()) {
        if (!coeff.is_zero()) terms_.emplace(radicand, coeff);
        return;
    }
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

RadicalScalar RadicalScalar::conjugate() const {
    RadicalScalar out;
    for (const auto& [rad, c] : terms_) out.terms_.emplace(rad, c.conjugate());
    return out;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& rhs) {
    for (const auto& [rad, c] : rhs.terms_) add_term(rad, c);
    return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& rhs) {
    for (const auto& [rad, c] : rhs.terms_) add_term(rad, -c);
    return *this;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& rhs) {
    *this = *this * rhs;
    return *this;
}

RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) {
    a += b;
    return a;
}

RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) {
    a -= b;
    return a;
}

RadicalScalar operator-(const RadicalScalar& a) {
    RadicalScalar zero;
    zero -= a;
    return zero;
}

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
    RadicalScalar out;
    for (const auto& [m1, c1] : a.terms()) {
        for (const auto& [m2, c2] : b.terms()) {
            // sqrt(m1)*sqrt(m2) = g*sqrt((m1/g)*(m2/g)) with g = gcd(m1, m2);
            // the product radicand is square-free because m1/g and m2/g are coprime.
            std::uint64_t g = std::gcd(m1, m2);
            std::uint64_t rad = (m1 / g) * (m2 / g);
            GaussianRational c = c1 * c2;
            if (g != 1) c = c * GaussianRational(Rational(g));
            out += RadicalScalar::term(rad, c);
        }
    }
    return out;
}

RadicalScalar RadicalScalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    // Rationalize by multiplying with the Galois conjugates: flipping the sign
    // of sqrt(p) for one prime p at a time strips that prime from all radicands.
    RadicalScalar current = *this;
    RadicalScalar numerator = RadicalScalar(1);
    while (current.terms_.rbegin()->first > 1) {
        std::uint64_t p = smallest_prime_factor(current.terms_.rbegin()->first);
        RadicalScalar flipped;
        for (const auto& [rad, c] : current.terms_) {
            flipped.terms_.emplace(rad, (rad % p == 0) ? -c : c);
        }
        numerator = numerator * flipped;
        current = current * flipped;
    }
    GaussianRational g = current.terms_.begin()->second;
    return numerator * RadicalScalar(g.inverse());
}

std::optional<Rational> RadicalScalar::as_rational() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() != 1) return std::nullopt;
    const auto& [rad, c] = *terms_.begin();
    if (rad != 1 || c.im != 0) return std::nullopt;
    return c.re;
}

std::optional<GaussianRational> RadicalScalar::as_gaussian() const {
    if (terms_.empty()) return GaussianRational{};
    if (terms_.size() != 1) return std::nullopt;
    const auto& [rad, c] = *terms_.begin();
    if (rad != 1) return std::nullopt;
    return c;
}

std::complex<double> RadicalScalar::to_float() const {
    std::complex<double> out{0.0, 0.0};
    for (const auto& [rad, c] : terms_) {
        out += c.to_float() * std::sqrt(static_cast<double>(rad));
    }
    return out;
}

std::string RadicalScalar::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [rad, c] : terms_) {
        std::string body = c.to_string();
        bool composite = body.find(' ') != std::string::npos;
        if (rad != 1) {
            if (composite || body == "i" || body == "-i") {
                body = "(" + body + ")*sqrt(" + std::to_string(rad) + ")";
            } else if (body == "1") {
                body = "sqrt(" + std::to_string(rad) + ")";
            } else if (body == "-1") {
                body = "-sqrt(" + std::to_string(rad) + ")";
            } else {
                body += "*sqrt(" + std::to_string(rad) + ")";
            }
        } else if (composite) {
            body = "(" + body + ")";
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

}  // namespace q4v
