#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "q4v/scalar.hpp"

namespace q4v {

struct Monomial {
    std::uint32_t z = 0;
    std::uint32_t zbar = 0;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded order, then z-degree descending within a grade: canonical for printing.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        std::uint64_t da = std::uint64_t(a.z) + a.zbar;
        std::uint64_t db = std::uint64_t(b.z) + b.zbar;
        if (da != db) return da < db;
        return a.z > b.z;
    }
};

/// Polynomial in the commuting formal variables z and zbar over RadicalScalar.
/// Canonical form: no zero coefficients stored; equality is map equality.
class BiPoly {
public:
    using TermMap = std::map<Monomial, RadicalScalar, MonomialOrder>;

    BiPoly() = default;

    static BiPoly zero() { return {}; }
    static BiPoly one() { return constant(RadicalScalar(1)); }
    static BiPoly constant(const RadicalScalar& c) { return monomial(0, 0, c); }
    static BiPoly variable_z() { return monomial(1, 0, RadicalScalar(1)); }
    static BiPoly variable_zbar() { return monomial(0, 1, RadicalScalar(1)); }
    static BiPoly monomial(std::uint32_t a, std::uint32_t b, const RadicalScalar& c);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    RadicalScalar coeff(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t deg_z() const;
    std::uint32_t deg_zbar() const;
    std::uint32_t min_deg_z() const;
    std::uint32_t min_deg_zbar() const;

    void add_term(const Monomial& m, const RadicalScalar& c);

    BiPoly& operator+=(const BiPoly& rhs);
    BiPoly& operator-=(const BiPoly& rhs);

    BiPoly pow(unsigned e) const;
    /// Exact quotient *this / divisor, or nullopt when the division leaves a
    /// remainder. Leading-term elimination in the graded order.
    std::optional<BiPoly> divided_exactly(const BiPoly& divisor) const;
    /// Positive rational content: gcd of every rational component of every
    /// coefficient; 1 for the zero polynomial.
    Rational content() const;
    BiPoly scaled(const RadicalScalar& c) const;
    BiPoly shifted_down(std::uint32_t dz, std::uint32_t dzbar) const;

    std::complex<double> eval(const std::complex<double>& z) const;
    std::string to_string() const;

    friend bool operator==(const BiPoly&, const BiPoly&) = default;

private:
    TermMap terms_;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator-(const BiPoly& a);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const RadicalScalar& c);

BiPoly d_z(const BiPoly& p);
BiPoly d_zbar(const BiPoly& p);
/// Realizes complex conjugation p -> pbar: swap exponents (a,b) -> (b,a) and
/// conjugate coefficients. An involution with conj_swap(d_z p) = d_zbar(conj_swap p).
BiPoly conj_swap(const BiPoly& p);

/// Ratio of polynomials. Fractions are not reduced; equality is defined by
/// cross-multiplication num1*den2 == num2*den1.
class RationalFn {
public:
    RationalFn() : num_(), den_(BiPoly::one()) {}
    RationalFn(BiPoly numerator, BiPoly denominator);
    explicit RationalFn(BiPoly numerator) : RationalFn(std::move(numerator), BiPoly::one()) {}
    explicit RationalFn(const RadicalScalar& c) : RationalFn(BiPoly::constant(c)) {}
    explicit RationalFn(const Rational& q) : RationalFn(BiPoly::constant(RadicalScalar(q))) {}

    static RationalFn zero() { return {}; }
    static RationalFn one() { return RationalFn(BiPoly::one()); }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFn& operator+=(const RationalFn& rhs);
    RationalFn& operator-=(const RationalFn& rhs);
    RationalFn& operator*=(const RationalFn& rhs);

    RationalFn reciprocal() const;
    std::complex<double> eval(const std::complex<double>& z) const;
    /// Returns c iff num == c*den as polynomials.
    std::optional<RadicalScalar> is_constant() const;
    std::string to_string() const;

    /// Cross-multiplication equality.
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }

private:
    BiPoly num_;
    BiPoly den_;

    // Cancels a shared monomial factor and shared rational content; no GCD.
    void normalize();
};

RationalFn operator+(RationalFn a, const RationalFn& b);
RationalFn operator-(RationalFn a, const RationalFn& b);
RationalFn operator-(const RationalFn& a);
RationalFn operator*(RationalFn a, const RationalFn& b);
RationalFn operator/(const RationalFn& a, const RationalFn& b);

RationalFn d_z(const RationalFn& r);
RationalFn d_zbar(const RationalFn& r);
RationalFn conj_swap(const RationalFn& r);

/// d_z d_zbar log p as an exact rational function: (p*ddp - dp*dbp)/p^2.
RationalFn log_laplacian(const BiPoly& p);
RationalFn log_laplacian(const RationalFn& r);

inline std::optional<RadicalScalar> is_constant(const RationalFn& r) { return r.is_constant(); }

std::complex<double> eval(const BiPoly& p, const std::complex<double>& z);
std::complex<double> eval(const RationalFn& r, const std::complex<double>& z);

}  // namespace q4v
