#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "q4v/curves.hpp"

namespace q4v {

/// Square matrix of rational functions.
class RfMatrix {
public:
    RfMatrix() = default;
    explicit RfMatrix(std::size_t n) : n_(n), e_(n * n) {}

    static RfMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    RationalFn& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const RationalFn& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    RfMatrix& operator+=(const RfMatrix& rhs);
    RfMatrix& operator-=(const RfMatrix& rhs);

    RationalFn trace() const;
    /// Conjugate transpose: transpose plus entrywise conj_swap.
    RfMatrix dagger() const;
    bool is_zero() const;

    /// Cross-multiplication equality, entrywise.
    friend bool operator==(const RfMatrix& a, const RfMatrix& b);

private:
    std::size_t n_ = 0;
    std::vector<RationalFn> e_;
};

RfMatrix operator+(RfMatrix a, const RfMatrix& b);
RfMatrix operator-(RfMatrix a, const RfMatrix& b);
RfMatrix operator*(const RfMatrix& a, const RfMatrix& b);
/// tr(a*b) without forming the off-diagonal entries of the product.
RationalFn trace_of_product(const RfMatrix& a, const RfMatrix& b);
RfMatrix operator*(const RfMatrix& a, const RationalFn& s);
RfMatrix d_z(const RfMatrix& a);
RfMatrix d_zbar(const RfMatrix& a);
RfMatrix conj_swap_entrywise(const RfMatrix& a);

/// Hermitian idempotent of constant rank: the Grassmannian point/bundle.
struct ProjectionMap {
    std::size_t dim = 0;
    RfMatrix entries;
    int rank = 0;
};

/// Checks idempotence, Hermitian symmetry and integer constant trace;
/// returns the rank. Throws PreconditionError on violation.
int validate_projector(const ProjectionMap& phi);
/// True iff every entry is fixed by conj_swap (the reality condition
/// cutting out G(k,n;R) inside G(k,n;C)).
bool is_sigma_real(const ProjectionMap& phi);

/// phi = sum_f f f* / |f|^2 over pairwise Hermitian-orthogonal frames.
ProjectionMap projector(const std::vector<VectorCurve>& frames);

/// s = 2 phi - I; satisfies s^2 = I and s Hermitian.
RfMatrix reflection(const ProjectionMap& phi);

struct TangentData {
    RfMatrix a_z;
    RfMatrix a_zbar;
    RationalFn lambda2;
};

/// a_z = (1/2) s ds, a_zbar = (1/2) s dbar s, lambda2 = -tr(a_z a_zbar).
TangentData tangent_data(const RfMatrix& s);

/// K = -(2/lambda2) d dbar log lambda2.
RationalFn gauss_curvature(const RationalFn& lambda2);

/// |B|^2 = 4 tr(P P*) with P = d(a_z/lambda2), P* = -dbar(a_zbar/lambda2).
RationalFn sff_norm(const TangentData& t);

/// 2 delta_1/delta_0 - 2 |<f0, f2bar>|^2 / |f1|^4 for a mixed-pair base with
/// isotropy order at least one; the pairing is the bilinear self-contact of
/// the normalized sequence sections.
RationalFn mixed_pair_sff_closed_form(const OsculatingFlag& flag);

/// dbar a_z - [a_z, a_zbar]; the zero matrix certifies harmonicity.
RfMatrix harmonicity_residual(const TangentData& t);

/// Component of dbar(harmonic_next(f)/|f|^2) orthogonal to the osculating
/// span {f, harmonic_next(f)}; identically zero iff [f] satisfies the
/// projective-space harmonic map equation.
RfVector cpn_minimality_residual(const VectorCurve& f);

struct DegreeRelationReport {
    struct Item {
        int index;
        long long value;  // delta_{i-1} - 2 delta_i + delta_{i+1}
        bool pass;        // value == -2
    };
    std::vector<Item> items;
    bool all_pass = true;
};

/// Verifies delta_{i-1} - 2 delta_i + delta_{i+1} = -2 along the flag,
/// with delta_{-1} = 0.
DegreeRelationReport degree_relation_check(const OsculatingFlag& flag);

}  // namespace q4v
