#include "q4v/geometry.hpp"

#include <utility>

namespace q4v {

RfMatrix RfMatrix::identity(std::size_t n) {
    RfMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) out.at(i, i) = RationalFn::one();
    return out;
}

RfMatrix& RfMatrix::operator+=(const RfMatrix& rhs) {
    if (n_ != rhs.n_) throw DimensionMismatch("matrix addition: dimension mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += rhs.e_[k];
    return *this;
}

RfMatrix& RfMatrix::operator-=(const RfMatrix& rhs) {
    if (n_ != rhs.n_) throw DimensionMismatch("matrix subtraction: dimension mismatch");
    for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= rhs.e_[k];
    return *this;
}

RationalFn RfMatrix::trace() const {
    RationalFn out;
    for (std::size_t i = 0; i < n_; ++i) out += at(i, i);
    return out;
}

RfMatrix RfMatrix::dagger() const {
    RfMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            out.at(i, j) = conj_swap(at(j, i));
        }
    }
    return out;
}

bool RfMatrix::is_zero() const {
    for (const auto& r : e_) {
        if (!r.is_zero()) return false;
    }
    return true;
}

bool operator==(const RfMatrix& a, const RfMatrix& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t k = 0; k < a.e_.size(); ++k) {
        if (!(a.e_[k] == b.e_[k])) return false;
    }
    return true;
}

RfMatrix operator+(RfMatrix a, const RfMatrix& b) {
    a += b;
    return a;
}

RfMatrix operator-(RfMatrix a, const RfMatrix& b) {
    a -= b;
    return a;
}

RfMatrix operator*(const RfMatrix& a, const RfMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("matrix product: dimension mismatch");
    std::size_t n = a.dim();
    RfMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            RationalFn acc;
            for (std::size_t k = 0; k < n; ++k) {
                if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
                acc += a.at(i, k) * b.at(k, j);
            }
            out.at(i, j) = std::move(acc);
        }
    }
    return out;
}

RationalFn trace_of_product(const RfMatrix& a, const RfMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch("trace_of_product: dimension mismatch");
    RationalFn out;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
            if (a.at(i, k).is_zero() || b.at(k, i).is_zero()) continue;
            out += a.at(i, k) * b.at(k, i);
        }
    }
    return out;
}

RfMatrix operator*(const RfMatrix& a, const RationalFn& s) {
    RfMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out.at(i, j) = a.at(i, j) * s;
        }
    }
    return out;
}

RfMatrix d_z(const RfMatrix& a) {
    RfMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out.at(i, j) = d_z(a.at(i, j));
        }
    }
    return out;
}

RfMatrix d_zbar(const RfMatrix& a) {
    RfMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out.at(i, j) = d_zbar(a.at(i, j));
        }
    }
    return out;
}

RfMatrix conj_swap_entrywise(const RfMatrix& a) {
    RfMatrix out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            out.at(i, j) = conj_swap(a.at(i, j));
        }
    }
    return out;
}

int validate_projector(const ProjectionMap& phi) {
    const RfMatrix& m = phi.entries;
    if (m.dim() != phi.dim) throw PreconditionError("projector: entry matrix has wrong size");
    if (!(m * m == m)) throw PreconditionError("projector: not idempotent");
    if (!(m.dagger() == m)) throw PreconditionError("projector: not Hermitian");
    auto tr = m.trace().is_constant();
    if (!tr) throw PreconditionError("projector: trace is not constant");
    auto q = tr->as_rational();
    if (!q || denominator(*q) != 1) throw PreconditionError("projector: trace is not an integer");
    return int(numerator(*q).convert_to<long long>());
}

bool is_sigma_real(const ProjectionMap& phi) {
    return conj_swap_entrywise(phi.entries) == phi.entries;
}

ProjectionMap projector(const std::vector<VectorCurve>& frames) {
    if (frames.empty()) throw PreconditionError("projector: no frames");
    std::size_t n = frames.front().dim();
    for (std::size_t a = 0; a < frames.size(); ++a) {
        if (frames[a].dim() != n) throw DimensionMismatch("projector: frame dimension mismatch");
        if (frames[a].is_zero()) throw PreconditionError("projector: frame " + std::to_string(a) + " vanishes");
        for (std::size_t b = a + 1; b < frames.size(); ++b) {
            if (!hermitian_pairing(frames[a], frames[b]).is_zero()) {
                throw PreconditionError("projector: frames " + std::to_string(a) + " and " +
                                        std::to_string(b) + " are not orthogonal");
            }
        }
    }
    RfMatrix m(n);
    for (const auto& f : frames) {
        BiPoly norm2 = hermitian_pairing(f, f);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                BiPoly num = f.components[i] * conj_swap(f.components[j]);
                if (num.is_zero()) continue;
                m.at(i, j) += RationalFn(std::move(num), norm2);
            }
        }
    }
    ProjectionMap phi{n, std::move(m), 0};
    phi.rank = validate_projector(phi);
    return phi;
}

RfMatrix reflection(const ProjectionMap& phi) {
    RfMatrix s = phi.entries;
    s += phi.entries;
    s -= RfMatrix::identity(phi.dim);
    return s;
}

TangentData tangent_data(const RfMatrix& s) {
    RationalFn half(Rational(1, 2));
    TangentData t;
    t.a_z = (s * d_z(s)) * half;
    t.a_zbar = (s * d_zbar(s)) * half;
    t.lambda2 = -trace_of_product(t.a_z, t.a_zbar);
    return t;
}

RationalFn gauss_curvature(const RationalFn& lambda2) {
    if (lambda2.is_zero()) throw PreconditionError("gauss_curvature: zero metric");
    RationalFn minus_two(Rational(-2));
    return minus_two * log_laplacian(lambda2) / lambda2;
}

RationalFn sff_norm(const TangentData& t) {
    if (t.lambda2.is_zero()) throw PreconditionError("sff_norm: zero metric");
    RationalFn inv = t.lambda2.reciprocal();
    RfMatrix p = d_z(t.a_z * inv);
    RfMatrix pstar = d_zbar(t.a_zbar * inv);
    RationalFn out = trace_of_product(p, pstar);
    out *= RationalFn(Rational(-4));
    return out;
}

RationalFn mixed_pair_sff_closed_form(const OsculatingFlag& flag) {
    auto iso = isotropy_conditions(flag.base, 1);
    if (!(iso[0] && iso[1])) {
        throw PreconditionError("mixed_pair_sff_closed_form: base has isotropy order < 1");
    }
    if (flag.degrees.size() < 2) {
        throw PreconditionError("mixed_pair_sff_closed_form: flag too short");
    }
    auto secs = harmonic_sections(flag.base, 3);
    if (secs.size() < 3) {
        throw PreconditionError("mixed_pair_sff_closed_form: harmonic sequence too short");
    }
    RfVector f0(flag.base);
    RationalFn contact = bilinear_pairing(f0, secs[2]);
    RationalFn n1 = hermitian_pairing(secs[1], secs[1]);
    RationalFn second = RationalFn(Rational(2)) * contact * conj_swap(contact) / (n1 * n1);
    RationalFn first(Rational(2 * flag.degrees[1], flag.degrees[0]));
    return first - second;
}

RfMatrix harmonicity_residual(const TangentData& t) {
    RfMatrix commutator = t.a_z * t.a_zbar - t.a_zbar * t.a_z;
    return d_zbar(t.a_z) - commutator;
}

RfVector cpn_minimality_residual(const VectorCurve& f) {
    if (f.is_zero()) throw PreconditionError("cpn_minimality_residual: zero curve");
    BiPoly norm2 = hermitian_pairing(f, f);
    RfVector fv(f);
    RationalFn norm2_rf{norm2};
    RfVector next(harmonic_next(f));
    RfVector section = next * norm2_rf.reciprocal();
    RfVector db = d_zbar(section);
    RationalFn along_f = hermitian_pairing(db, fv) / norm2_rf;
    RfVector residual = db - fv * along_f;
    RationalFn next_norm2 = hermitian_pairing(section, section);
    if (!next_norm2.is_zero()) {
        RationalFn along_next = hermitian_pairing(db, section) / next_norm2;
        residual = residual - section * along_next;
    }
    return residual;
}

DegreeRelationReport degree_relation_check(const OsculatingFlag& flag) {
    DegreeRelationReport report;
    const auto& d = flag.degrees;
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        long long prev = (i == 0) ? 0 : d[i - 1];
        long long value = prev - 2LL * d[i] + d[i + 1];
        bool pass = (value == -2);
        report.items.push_back({int(i), value, pass});
        report.all_pass = report.all_pass && pass;
    }
    return report;
}

}  // namespace q4v
