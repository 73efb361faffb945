#include "q4v/construct.hpp"

#include <utility>

namespace q4v {

ScalarMatrix::ScalarMatrix(std::size_t n, std::vector<RadicalScalar> entries)
    : n_(n), e_(std::move(entries)) {
    if (e_.size() != n * n) throw DimensionMismatch("ScalarMatrix: wrong entry count");
}

ScalarMatrix ScalarMatrix::identity(std::size_t n) {
    ScalarMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RadicalScalar(1);
    return m;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = at(j, i);
    }
    return m;
}

ScalarMatrix ScalarMatrix::dagger() const {
    ScalarMatrix m(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) m.at(i, j) = at(j, i).conjugate();
    }
    return m;
}

bool ScalarMatrix::is_symmetric() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i + 1; j < n_; ++j) {
            if (!(at(i, j) == at(j, i))) return false;
        }
    }
    return true;
}

bool ScalarMatrix::is_unitary() const {
    ScalarMatrix product = *this * dagger();
    return product == identity(n_);
}

VectorCurve ScalarMatrix::apply(const VectorCurve& f) const {
    if (f.dim() != n_) throw DimensionMismatch("ScalarMatrix::apply: dimension mismatch");
    VectorCurve out;
    out.components.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        BiPoly acc;
        for (std::size_t j = 0; j < n_; ++j) {
            if (at(i, j).is_zero()) continue;
            acc += f.components[j].scaled(at(i, j));
        }
        out.components.push_back(std::move(acc));
    }
    return out;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("ScalarMatrix product: dimension mismatch");
    std::size_t n = a.dim();
    ScalarMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            RadicalScalar acc;
            for (std::size_t k = 0; k < n; ++k) acc += a.at(i, k) * b.at(k, j);
            out.at(i, j) = std::move(acc);
        }
    }
    return out;
}

SymmetricUnitary::SymmetricUnitary(ScalarMatrix m) : entries(std::move(m)) {
    if (!entries.is_symmetric()) throw PreconditionError("W is not symmetric");
    if (!entries.is_unitary()) throw PreconditionError("W is not unitary");
}

std::string to_string(WPatternTag tag) {
    switch (tag) {
        case WPatternTag::P413: return "P413";
        case WPatternTag::P415: return "P415";
        case WPatternTag::P417: return "P417";
    }
    return "?";
}

std::optional<WPatternTag> parse_w_pattern(const std::string& name) {
    if (name == "P413" || name == "p413") return WPatternTag::P413;
    if (name == "P415" || name == "p415") return WPatternTag::P415;
    if (name == "P417" || name == "p417") return WPatternTag::P417;
    return std::nullopt;
}

WPattern WPattern::of(WPatternTag tag) {
    WPattern p;
    p.tag = tag;
    RadicalScalar two_thirds_sqrt3 = RadicalScalar(Rational(2, 3)) * RadicalScalar::sqrt_of(3);
    switch (tag) {
        case WPatternTag::P413:
            p.zeros = {{0, 0}, {0, 1}, {2, 3}, {3, 3}};
            p.relations = {
                {1, 1, 0, 2, two_thirds_sqrt3},
                {1, 2, 0, 3, RadicalScalar(Rational(1, 3))},
                {2, 2, 1, 3, two_thirds_sqrt3},
            };
            break;
        case WPatternTag::P415:
            p.zeros = {{0, 0}, {0, 1}, {1, 2}, {2, 2}};
            p.relations = {{1, 1, 0, 2, RadicalScalar(1)}};
            p.nonzeros = {{0, 2}};
            break;
        case WPatternTag::P417:
            p.zeros = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};
            break;
    }
    return p;
}

namespace {

std::string entry_name(std::size_t i, std::size_t j) {
    return "w" + std::to_string(i) + std::to_string(j);
}

}  // namespace

WPatternReport w_pattern_check(const SymmetricUnitary& w, const WPattern& pattern) {
    WPatternReport report;
    const ScalarMatrix& m = w.entries;
    for (const auto& z : pattern.zeros) {
        bool pass = m.at(z.i, z.j).is_zero();
        report.items.push_back({entry_name(z.i, z.j) + " = 0", pass});
        report.all_pass = report.all_pass && pass;
    }
    for (const auto& r : pattern.relations) {
        RadicalScalar residual = m.at(r.ai, r.aj) + r.coeff * m.at(r.bi, r.bj);
        bool pass = residual.is_zero();
        report.items.push_back({entry_name(r.ai, r.aj) + " + (" + r.coeff.to_string() + ")*" +
                                    entry_name(r.bi, r.bj) + " = 0",
                                pass});
        report.all_pass = report.all_pass && pass;
    }
    for (const auto& nz : pattern.nonzeros) {
        bool pass = !m.at(nz.i, nz.j).is_zero();
        report.items.push_back({entry_name(nz.i, nz.j) + " != 0", pass});
        report.all_pass = report.all_pass && pass;
    }
    return report;
}

WPatternReport w_pattern_check(const SymmetricUnitary& w, WPatternTag tag) {
    return w_pattern_check(w, WPattern::of(tag));
}

VectorCurve antiderivative(const VectorCurve& f) {
    if (!is_holomorphic(f)) throw PreconditionError("antiderivative: input must be holomorphic");
    VectorCurve out;
    out.components.reserve(f.dim());
    for (const auto& comp : f.components) {
        BiPoly h;
        for (const auto& [m, c] : comp.terms()) {
            h.add_term(Monomial{m.z + 1, 0}, c * RadicalScalar(Rational(1, m.z + 1)));
        }
        out.components.push_back(std::move(h));
    }
    return out;
}

VectorCurve mixed_pair_seed(const VectorCurve& f0) {
    if (!is_holomorphic(f0)) throw PreconditionError("mixed_pair_seed: seed must be polynomial in z");
    if (bilinear_pairing(f0, f0).is_zero()) {
        throw PreconditionError("mixed_pair_seed: seed is isotropic");
    }
    VectorCurve h = antiderivative(f0);
    BiPoly s = bilinear_pairing(h, h);
    VectorCurve out;
    out.components.reserve(f0.dim() + 2);
    RadicalScalar two(2);
    for (const auto& comp : h.components) out.components.push_back(comp.scaled(two));
    out.components.push_back(BiPoly::one() - s);
    out.components.push_back((BiPoly::one() + s).scaled(RadicalScalar::i()));
    return out;
}

namespace {

VectorCurve padded(const VectorCurve& f, std::size_t dim) {
    if (f.dim() > dim) throw DimensionMismatch("padded: curve larger than target dimension");
    VectorCurve out = f;
    out.components.resize(dim);
    return out;
}

}  // namespace

std::array<BiPoly, 3> fundamental_identity_check(const ScalarMatrix& u, int m) {
    if (!u.is_unitary()) throw PreconditionError("fundamental_identity_check: matrix is not unitary");
    return fundamental_identity_from_w(u.transpose() * u, m);
}

std::array<BiPoly, 3> fundamental_identity_from_w(const ScalarMatrix& w, int m) {
    std::array<BiPoly, 3> out;
    VectorCurve v0 = padded(veronese(m, 0), w.dim());
    for (int i = 0; i <= 2; ++i) {
        VectorCurve vi = padded(veronese(m, i), w.dim());
        BiPoly acc;
        for (std::size_t a = 0; a < w.dim(); ++a) {
            for (std::size_t b = 0; b < w.dim(); ++b) {
                if (w.at(a, b).is_zero()) continue;
                acc += (v0.components[b] * vi.components[a]).scaled(w.at(a, b));
            }
        }
        out[std::size_t(i)] = std::move(acc);
    }
    return out;
}

RationalFn coefficient_ode_residual(const RationalFn& x, const VectorCurve& f0) {
    BiPoly norm2 = hermitian_pairing(f0, f0);
    if (norm2.is_zero()) throw PreconditionError("coefficient_ode_residual: zero curve");
    RationalFn dlog(d_z(norm2), norm2);
    return d_z(x) + x * dlog;
}

ProjectionMap assemble_real_pair(const VectorCurve& f) {
    if (!quadric_residual(f).is_zero()) {
        throw PreconditionError("assemble_real_pair: curve does not lie in the quadric");
    }
    return projector({conj_swap(f), f});
}

ProjectionMap assemble_sum_pair(const VectorCurve& f, const VectorCurve& g) {
    if (!hermitian_pairing(f, g).is_zero()) {
        throw PreconditionError("assemble_sum_pair: summands are not orthogonal");
    }
    return projector({f, g});
}

// --- bundled exact fixtures -------------------------------------------------

namespace {

BiPoly mono(std::uint32_t a, std::uint32_t b, RadicalScalar c) {
    return BiPoly::monomial(a, b, c);
}

RadicalScalar rt(std::uint64_t n) { return RadicalScalar::sqrt_of(n); }
RadicalScalar im() { return RadicalScalar::i(); }
RadicalScalar rq(long long num, long long den) { return RadicalScalar(Rational(num, den)); }

// 1/sqrt(2) etc., kept exact as rational multiples of sqrt(2).
RadicalScalar inv_sqrt2() { return rq(1, 2) * rt(2); }

}  // namespace

VectorCurve curve_eq414() {
    RadicalScalar one(1);
    VectorCurve f;
    f.components = {
        mono(0, 0, one) + mono(3, 0, one),
        mono(0, 0, im()) - mono(3, 0, im()),
        mono(1, 0, rt(3)) - mono(2, 0, rq(1, 3) * rt(3)),
        mono(1, 0, im() * rt(3)) + mono(2, 0, rq(1, 3) * im() * rt(3)),
        mono(2, 0, rq(2, 3) * rt(6)),
        mono(2, 0, rq(2, 3) * im() * rt(6)),
    };
    return f;
}

VectorCurve curve_eq416() {
    RadicalScalar one(1);
    VectorCurve f;
    f.components = {
        mono(0, 0, one) + mono(2, 0, rq(1, 2)),
        mono(0, 0, im()) - mono(2, 0, rq(1, 2) * im()),
        mono(2, 0, -(rq(1, 2) * im() * rt(3))),
        mono(2, 0, -(rq(1, 2) * rt(3))),
        mono(1, 0, one),
        mono(1, 0, -(im() * rt(3))),
    };
    return f;
}

VectorCurve curve_eq420() {
    RadicalScalar one(1);
    VectorCurve f;
    f.components = {
        mono(0, 0, one),
        mono(0, 0, im()),
        mono(1, 0, rt(2)),
        mono(1, 0, im() * rt(2)),
        mono(2, 0, one),
        mono(2, 0, im()),
    };
    return f;
}

VectorCurve curve_eq421() {
    RadicalScalar one(1);
    RadicalScalar third_rt3 = rq(1, 3) * rt(3);
    VectorCurve f;
    f.components = {
        mono(2, 0, one) + mono(0, 2, one),
        mono(0, 2, im()) - mono(2, 0, im()),
        mono(2, 1, one) + mono(1, 2, one) - mono(1, 0, one) - mono(0, 1, one),
        mono(1, 2, im()) + mono(1, 0, im()) - mono(2, 1, im()) - mono(0, 1, im()),
        (mono(0, 0, one) - mono(1, 1, rq(4, 1)) + mono(2, 2, one)).scaled(third_rt3),
        BiPoly::zero(),
    };
    return f;
}

VectorCurve curve_eq521() {
    RadicalScalar one(1);
    VectorCurve f;
    f.components = {
        mono(0, 1, -rt(2)),
        mono(0, 1, -(im() * rt(2))),
        mono(0, 0, one) - mono(1, 1, one),
        mono(0, 0, im()) - mono(1, 1, im()),
        mono(1, 0, rt(2)),
        mono(1, 0, im() * rt(2)),
    };
    return f;
}

VectorCurve curve_fphi() {
    RadicalScalar one(1);
    RadicalScalar r3 = rt(3);
    VectorCurve f;
    f.components = {
        (mono(2, 0, one) + mono(0, 2, one)).scaled(r3),
        (mono(0, 2, one) - mono(2, 0, one)).scaled(im() * r3),
        (mono(2, 1, one) + mono(1, 2, one) - mono(1, 0, one) - mono(0, 1, one)).scaled(r3),
        (mono(1, 2, one) + mono(1, 0, one) - mono(2, 1, one) - mono(0, 1, one)).scaled(im() * r3),
        mono(0, 0, one) - mono(1, 1, rq(4, 1)) + mono(2, 2, one),
        (mono(0, 0, one) + mono(1, 1, rq(2, 1)) + mono(2, 2, one)).scaled(im()),
    };
    return f;
}

VectorCurve curve_c0() {
    VectorCurve f;
    f.components.assign(6, BiPoly::zero());
    f.components[5] = BiPoly::one();
    return f;
}

ScalarMatrix unitary_u413() {
    RadicalScalar z;
    RadicalScalar a = inv_sqrt2();            // 1/sqrt(2)
    RadicalScalar ia = im() * a;
    RadicalScalar b = rq(1, 6) * rt(2);       // 1/(3 sqrt(2))
    RadicalScalar ib = im() * b;
    RadicalScalar t = rq(2, 3);
    RadicalScalar it = im() * t;
    return ScalarMatrix(6, {
        a,  z,  z,   a,  z,   z,
        ia, z,  z,   -ia, z,  z,
        z,  a,  -b,  z,  t,   z,
        z,  ia, ib,  z,  -it, z,
        z,  z,  t,   z,  b,   a,
        z,  z,  it,  z,  ib,  -ia,
    });
}

ScalarMatrix unitary_u415() {
    RadicalScalar z;
    RadicalScalar a = inv_sqrt2();              // 1/sqrt(2)
    RadicalScalar ia = im() * a;
    RadicalScalar c = rq(1, 4) * rt(2);         // 1/(2 sqrt(2))
    RadicalScalar ic = im() * c;
    RadicalScalar d = rq(1, 4) * rt(6);         // sqrt(3)/(2 sqrt(2))
    RadicalScalar id = im() * d;
    RadicalScalar h = rq(1, 2);
    RadicalScalar ih = im() * h;
    RadicalScalar s = rq(1, 2) * rt(3);         // sqrt(3)/2
    RadicalScalar is = im() * s;
    return ScalarMatrix(6, {
        a,  z,   c,   z,  z,   -d,
        ia, z,   -ic, z,  z,   id,
        z,  z,   -id, -ia, z,  -ic,
        z,  z,   -d,  a,  z,   -c,
        z,  h,   z,   z,  -s,  z,
        z,  -is, z,   z,  -ih, z,
    });
}

ScalarMatrix unitary_u417() {
    RadicalScalar z;
    RadicalScalar a = inv_sqrt2();
    RadicalScalar ia = im() * a;
    return ScalarMatrix(6, {
        a,  z,  z,  a,   z,  z,
        ia, z,  z,  -ia, z,  z,
        z,  a,  z,  z,   a,  z,
        z,  ia, z,  z,   -ia, z,
        z,  z,  a,  z,   z,  a,
        z,  z,  ia, z,   z,  -ia,
    });
}

ScalarMatrix unitary_u419() {
    RadicalScalar z;
    RadicalScalar a = inv_sqrt2();
    RadicalScalar ia = im() * a;
    RadicalScalar one(1);
    return ScalarMatrix(5, {
        a,  z,  z,   z,  a,
        ia, z,  z,   z,  -ia,
        z,  a,  z,   -a, z,
        z,  ia, z,   ia, z,
        z,  z,  one, z,  z,
    });
}

SymmetricUnitary w_fixture_413() {
    RadicalScalar z;
    RadicalScalar one(1);
    RadicalScalar third = rq(1, 3);
    RadicalScalar e = rq(2, 3) * rt(2);  // sqrt(8)/3
    return SymmetricUnitary(ScalarMatrix(6, {
        z,   z,      z,      one, z,      z,
        z,   z,      -third, z,   e,      z,
        z,   -third, z,      z,   z,      e,
        one, z,      z,      z,   z,      z,
        z,   e,      z,      z,   z,      third,
        z,   z,      e,      z,   third,  z,
    }));
}

SymmetricUnitary w_fixture_415() {
    RadicalScalar z;
    RadicalScalar h = rq(1, 2);
    RadicalScalar s = rq(1, 2) * rt(3);
    return SymmetricUnitary(ScalarMatrix(6, {
        z,  z,  h,  z,  z,  -s,
        z,  -h, z,  z,  -s, z,
        h,  z,  z,  -s, z,  z,
        z,  z,  -s, z,  z,  -h,
        z,  -s, z,  z,  h,  z,
        -s, z,  z,  -h, z,  z,
    }));
}

SymmetricUnitary w_fixture_417() {
    ScalarMatrix u = unitary_u417();
    return SymmetricUnitary(u.transpose() * u);
}

}  // namespace q4v
