#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "q4v/error.hpp"

namespace q4v {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);
double rational_to_double(const Rational& q);

/// Element of Q(i): re + im*i with exact rational parts.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    explicit GaussianRational(Rational r) : re(std::move(r)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conjugate() const { return {re, -im}; }
    GaussianRational inverse() const;
    std::complex<double> to_float() const;
    std::string to_string() const;

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a, const GaussianRational& b);
GaussianRational operator-(const GaussianRational& a);
GaussianRational operator*(const GaussianRational& a, const GaussianRational& b);

/// Writes n = s^2 * r with r square-free; returns {s, r}.
std::pair<std::uint64_t, std::uint64_t> square_free_decomposition(std::uint64_t n);

/// Exact element of the multiquadratic field Q(i)(sqrt(2), sqrt(3), sqrt(5), ...).
///
/// Stored as a finite map radicand -> Gaussian rational coefficient meaning
/// sum q_m * sqrt(m); every stored radicand is square-free, radicand 1 is the
/// rational part, and no stored coefficient is zero. The map itself is the
/// canonical form, so equality is map equality.
class RadicalScalar {
public:
    using TermMap = std::map<std::uint64_t, GaussianRational>;

    RadicalScalar() = default;
    RadicalScalar(int value);  // NOLINT: implicit by design, mirrors field literals
    RadicalScalar(Rational value);
    explicit RadicalScalar(GaussianRational value);

    static RadicalScalar i();
    /// Exact sqrt of a nonnegative integer, normalized to s*sqrt(r) with r square-free.
    static RadicalScalar sqrt_of(std::uint64_t n);
    /// coeff * sqrt(radicand), normalizing the radicand.
    static RadicalScalar term(std::uint64_t radicand, const GaussianRational& coeff);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    RadicalScalar conjugate() const;
    RadicalScalar inverse() const;

    /// The value as a plain rational if it has no radical and no imaginary part.
    std::optional<Rational> as_rational() const;
    /// The value as a Gaussian rational if it has no radical part.
    std::optional<GaussianRational> as_gaussian() const;

    std::complex<double> to_float() const;
    std::string to_string() const;

    RadicalScalar& operator+=(const RadicalScalar& rhs);
    RadicalScalar& operator-=(const RadicalScalar& rhs);
    RadicalScalar& operator*=(const RadicalScalar& rhs);

    friend bool operator==(const RadicalScalar&, const RadicalScalar&) = default;

private:
    TermMap terms_;

    void add_term(std::uint64_t radicand, const GaussianRational& coeff);
};

RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b);
RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b);
RadicalScalar operator-(const RadicalScalar& a);
RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);

inline RadicalScalar conjugate(const RadicalScalar& a) { return a.conjugate(); }
inline RadicalScalar inverse(const RadicalScalar& a) { return a.inverse(); }
inline std::complex<double> to_float(const RadicalScalar& a) { return a.to_float(); }

}  // namespace q4v
