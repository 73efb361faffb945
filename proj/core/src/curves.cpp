#include "q4v/curves.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace q4v {

bool VectorCurve::is_zero() const {
    return std::all_of(components.begin(), components.end(),
                       [](const BiPoly& p) { return p.is_zero(); });
}

VectorCurve d_z(const VectorCurve& f) {
    VectorCurve out;
    out.components.reserve(f.dim());
    for (const auto& c : f.components) out.components.push_back(d_z(c));
    return out;
}

VectorCurve d_zbar(const VectorCurve& f) {
    VectorCurve out;
    out.components.reserve(f.dim());
    for (const auto& c : f.components) out.components.push_back(d_zbar(c));
    return out;
}

VectorCurve conj_swap(const VectorCurve& f) {
    VectorCurve out;
    out.components.reserve(f.dim());
    for (const auto& c : f.components) out.components.push_back(conj_swap(c));
    return out;
}

bool is_holomorphic(const VectorCurve& f) {
    for (const auto& c : f.components) {
        for (const auto& [m, coeff] : c.terms()) {
            if (m.zbar != 0) return false;
        }
    }
    return true;
}

VectorCurve scaled(const VectorCurve& f, const RadicalScalar& c) {
    VectorCurve out;
    out.components.reserve(f.dim());
    for (const auto& comp : f.components) out.components.push_back(comp.scaled(c));
    return out;
}

VectorCurve content_normalized(const VectorCurve& f) {
    Rational g(0);
    bool any = false;
    for (const auto& comp : f.components) {
        if (comp.is_zero()) continue;
        Rational c = comp.content();
        if (!any) {
            g = c;
            any = true;
        } else {
            using boost::multiprecision::gcd;
            using boost::multiprecision::lcm;
            g = Rational(gcd(numerator(g), numerator(c)), lcm(denominator(g), denominator(c)));
        }
    }
    if (!any || g == 1) return f;
    return scaled(f, RadicalScalar(Rational(1) / g));
}

namespace {

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt out = 1;
    for (int j = 1; j <= k; ++j) {
        out *= n - k + j;
        out /= j;
    }
    return out;
}

BigInt factorial(int n) {
    BigInt out = 1;
    for (int j = 2; j <= n; ++j) out *= j;
    return out;
}

RadicalScalar sqrt_of_bigint(const BigInt& n) {
    return RadicalScalar::sqrt_of(n.convert_to<std::uint64_t>());
}

}  // namespace

VectorCurve veronese(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw PreconditionError("veronese index out of range");
    VectorCurve out;
    out.components.reserve(n + 1);
    RadicalScalar fact = RadicalScalar(Rational(factorial(i)));
    for (int j = 0; j <= n; ++j) {
        RadicalScalar coef = fact * sqrt_of_bigint(binomial(n, j));
        BiPoly comp;
        for (int k = std::max(0, i - j); k <= std::min(i, n - j); ++k) {
            BigInt b = binomial(j, i - k) * binomial(n - j, k);
            if (b == 0) continue;
            Rational c(b);
            if (k % 2) c = -c;
            comp.add_term(Monomial{std::uint32_t(j - i + k), std::uint32_t(k)},
                          coef * RadicalScalar(c));
        }
        out.components.push_back(std::move(comp));
    }
    return out;
}

BiPoly hermitian_pairing(const VectorCurve& f, const VectorCurve& g) {
    if (f.dim() != g.dim()) throw DimensionMismatch("hermitian_pairing: dimension mismatch");
    BiPoly out;
    for (std::size_t k = 0; k < f.dim(); ++k) {
        out += f.components[k] * conj_swap(g.components[k]);
    }
    return out;
}

BiPoly bilinear_pairing(const VectorCurve& f, const VectorCurve& g) {
    if (f.dim() != g.dim()) throw DimensionMismatch("bilinear_pairing: dimension mismatch");
    BiPoly out;
    for (std::size_t k = 0; k < f.dim(); ++k) {
        out += f.components[k] * g.components[k];
    }
    return out;
}

BiPoly quadric_residual(const VectorCurve& f) {
    return bilinear_pairing(f, f);
}

VectorCurve harmonic_next(const VectorCurve& f) {
    BiPoly norm2 = hermitian_pairing(f, f);
    VectorCurve df = d_z(f);
    BiPoly proj = hermitian_pairing(df, f);
    VectorCurve out;
    out.components.reserve(f.dim());
    for (std::size_t k = 0; k < f.dim(); ++k) {
        out.components.push_back(norm2 * df.components[k] - proj * f.components[k]);
    }
    return out;
}

namespace {

// Determinant by expansion over column subsets, memoized per row count.
BiPoly determinant(const std::vector<std::vector<BiPoly>>& m) {
    std::size_t n = m.size();
    if (n == 0) return BiPoly::one();
    std::map<std::uint64_t, BiPoly> minors;
    for (std::size_t j = 0; j < n; ++j) minors[std::uint64_t(1) << j] = m[n - 1][j];
    for (std::size_t rows = 2; rows <= n; ++rows) {
        std::map<std::uint64_t, BiPoly> next;
        std::size_t row = n - rows;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
            if (std::size_t(__builtin_popcountll(mask)) != rows) continue;
            BiPoly acc;
            int sign = 1;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(mask & (std::uint64_t(1) << j))) continue;
                const BiPoly& entry = m[row][j];
                if (!entry.is_zero()) {
                    BiPoly sub = minors.at(mask & ~(std::uint64_t(1) << j));
                    BiPoly prod = entry * sub;
                    if (sign < 0) prod = -prod;
                    acc += prod;
                }
                sign = -sign;
            }
            next.emplace(mask, std::move(acc));
        }
        minors = std::move(next);
    }
    return minors.at((std::uint64_t(1) << n) - 1);
}

}  // namespace

BiPoly gram_det(const VectorCurve& f0, int i) {
    if (!is_holomorphic(f0)) throw PreconditionError("gram_det: base must be holomorphic");
    if (i < 0) throw PreconditionError("gram_det: negative index");
    std::vector<VectorCurve> derivs;
    derivs.reserve(i + 1);
    derivs.push_back(f0);
    for (int a = 1; a <= i; ++a) derivs.push_back(d_z(derivs.back()));
    std::vector<std::vector<BiPoly>> gram(i + 1, std::vector<BiPoly>(i + 1));
    for (int a = 0; a <= i; ++a) {
        for (int b = 0; b <= i; ++b) {
            gram[a][b] = hermitian_pairing(derivs[a], derivs[b]);
        }
    }
    return determinant(gram);
}

OsculatingFlag OsculatingFlag::build(const VectorCurve& f0, int max_index) {
    if (!is_holomorphic(f0)) throw PreconditionError("flag base must be holomorphic");
    if (f0.is_zero()) throw PreconditionError("flag base must not vanish");
    OsculatingFlag flag;
    flag.base = f0;
    int top = max_index < 0 ? int(f0.dim()) - 1 : max_index;
    for (int i = 0; i <= top; ++i) {
        BiPoly det = gram_det(f0, i);
        if (det.is_zero()) break;
        flag.degrees.push_back(int(det.deg_z()));
        flag.l_coeffs.push_back(log_laplacian(det));
        flag.gram_dets.push_back(std::move(det));
    }
    return flag;
}

RationalFn OsculatingFlag::l(int i) const {
    if (i < 0 || i >= int(l_coeffs.size())) return RationalFn::zero();
    return l_coeffs[std::size_t(i)];
}

RationalFn l_coefficient(const OsculatingFlag& flag, int i) {
    if (i < 0 || i >= int(flag.l_coeffs.size())) {
        throw PreconditionError("l_coefficient: index out of range");
    }
    return flag.l_coeffs[std::size_t(i)];
}

int holomorphic_degree(const OsculatingFlag& flag, int i) {
    if (i < 0 || i >= int(flag.degrees.size())) {
        throw PreconditionError("holomorphic_degree: index out of range");
    }
    return flag.degrees[std::size_t(i)];
}

VectorCurve wedge(const VectorCurve& f, const VectorCurve& g) {
    if (f.dim() != g.dim()) throw DimensionMismatch("wedge: dimension mismatch");
    VectorCurve out;
    std::size_t n = f.dim();
    out.components.reserve(n * (n - 1) / 2);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            out.components.push_back(f.components[a] * g.components[b] -
                                     f.components[b] * g.components[a]);
        }
    }
    return out;
}

std::vector<bool> isotropy_conditions(const VectorCurve& f0, int k) {
    if (!is_holomorphic(f0)) throw PreconditionError("isotropy_conditions: base must be holomorphic");
    std::vector<bool> out;
    out.reserve(k + 1);
    VectorCurve member = f0;
    for (int i = 0; i <= k; ++i) {
        out.push_back(bilinear_pairing(member, f0).is_zero());
        if (i < k) member = content_normalized(harmonic_next(member));
    }
    return out;
}

RfVector::RfVector(const VectorCurve& f) {
    components.reserve(f.dim());
    for (const auto& c : f.components) components.emplace_back(c);
}

bool RfVector::is_zero() const {
    return std::all_of(components.begin(), components.end(),
                       [](const RationalFn& r) { return r.is_zero(); });
}

RfVector d_z(const RfVector& v) {
    RfVector out;
    out.components.reserve(v.dim());
    for (const auto& c : v.components) out.components.push_back(d_z(c));
    return out;
}

RfVector d_zbar(const RfVector& v) {
    RfVector out;
    out.components.reserve(v.dim());
    for (const auto& c : v.components) out.components.push_back(d_zbar(c));
    return out;
}

RfVector operator+(const RfVector& a, const RfVector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("RfVector addition: dimension mismatch");
    RfVector out;
    out.components.reserve(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        out.components.push_back(a.components[k] + b.components[k]);
    }
    return out;
}

RfVector operator-(const RfVector& a, const RfVector& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("RfVector subtraction: dimension mismatch");
    RfVector out;
    out.components.reserve(a.dim());
    for (std::size_t k = 0; k < a.dim(); ++k) {
        out.components.push_back(a.components[k] - b.components[k]);
    }
    return out;
}

RfVector operator*(const RfVector& a, const RationalFn& s) {
    RfVector out;
    out.components.reserve(a.dim());
    for (const auto& c : a.components) out.components.push_back(c * s);
    return out;
}

RationalFn hermitian_pairing(const RfVector& f, const RfVector& g) {
    if (f.dim() != g.dim()) throw DimensionMismatch("hermitian_pairing: dimension mismatch");
    RationalFn out;
    for (std::size_t k = 0; k < f.dim(); ++k) {
        out += f.components[k] * conj_swap(g.components[k]);
    }
    return out;
}

RationalFn bilinear_pairing(const RfVector& f, const RfVector& g) {
    if (f.dim() != g.dim()) throw DimensionMismatch("bilinear_pairing: dimension mismatch");
    RationalFn out;
    for (std::size_t k = 0; k < f.dim(); ++k) {
        out += f.components[k] * g.components[k];
    }
    return out;
}

std::vector<RfVector> harmonic_sections(const VectorCurve& f0, int count) {
    std::vector<RfVector> out;
    if (count <= 0) return out;
    out.emplace_back(f0);
    for (int i = 1; i < count; ++i) {
        const RfVector& prev = out.back();
        RationalFn norm2 = hermitian_pairing(prev, prev);
        if (norm2.is_zero()) break;
        RfVector dprev = d_z(prev);
        RationalFn proj = hermitian_pairing(dprev, prev) / norm2;
        RfVector next = dprev - prev * proj;
        if (next.is_zero()) break;
        out.push_back(std::move(next));
    }
    return out;
}

}  // namespace q4v
