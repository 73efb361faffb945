#pragma once

#include <vector>

#include "q4v/polyring.hpp"

namespace q4v {

/// Projective representative of a curve S^2 -> CP^(n-1): an n-tuple of
/// polynomial components, defined up to scalar-function multiples.
struct VectorCurve {
    std::vector<BiPoly> components;

    VectorCurve() = default;
    explicit VectorCurve(std::vector<BiPoly> comps) : components(std::move(comps)) {}

    std::size_t dim() const { return components.size(); }
    bool is_zero() const;

    friend bool operator==(const VectorCurve&, const VectorCurve&) = default;
};

VectorCurve d_z(const VectorCurve& f);
VectorCurve d_zbar(const VectorCurve& f);
VectorCurve conj_swap(const VectorCurve& f);
bool is_holomorphic(const VectorCurve& f);
VectorCurve scaled(const VectorCurve& f, const RadicalScalar& c);
/// Divides out the shared rational content; a projective rescale by a constant.
VectorCurve content_normalized(const VectorCurve& f);

/// The i-th member of the Veronese sequence in CP^n, as the projective
/// representative with the (1+z zbar)^(-i) prefactor cleared.
VectorCurve veronese(int n, int i);

/// sum_k f_k * conj_swap(g_k)  (the Hermitian inner product <f, g>).
BiPoly hermitian_pairing(const VectorCurve& f, const VectorCurve& g);
/// sum_k f_k * g_k, no conjugation.
BiPoly bilinear_pairing(const VectorCurve& f, const VectorCurve& g);
/// sum_k f_k^2; identically zero iff [f] lies in the hyperquadric.
BiPoly quadric_residual(const VectorCurve& f);

/// Projective representative |f|^2 * df - <df, f> * f of the next harmonic
/// sequence member; Hermitian-orthogonal to f as a polynomial identity.
VectorCurve harmonic_next(const VectorCurve& f);

/// det of the (i+1)x(i+1) Gram matrix <d^a f0, d^b f0>, 0 <= a,b <= i.
BiPoly gram_det(const VectorCurve& f0, int i);

/// Osculating data of a holomorphic curve: Gram determinants |F_i|^2 up to the
/// first identically zero one, their log-Laplacians l_i, and exact degrees
/// delta_i = z-degree of |F_i|^2.
struct OsculatingFlag {
    VectorCurve base;
    std::vector<BiPoly> gram_dets;
    std::vector<RationalFn> l_coeffs;
    std::vector<int> degrees;

    /// Builds Gram determinants for i = 0..max_index (default: dim-1),
    /// stopping at the first identically zero determinant.
    static OsculatingFlag build(const VectorCurve& f0, int max_index = -1);

    /// l_i, with l_i = 0 outside the stored range (covers l_{-1} and l_top).
    RationalFn l(int i) const;
};

RationalFn l_coefficient(const OsculatingFlag& flag, int i);
int holomorphic_degree(const OsculatingFlag& flag, int i);

/// Components are the 2x2 minors in lexicographic index order.
VectorCurve wedge(const VectorCurve& f, const VectorCurve& g);

/// b_i for i = 0..k: true iff the bilinear pairing of the i-th harmonic
/// sequence member with f0 is identically zero.
std::vector<bool> isotropy_conditions(const VectorCurve& f0, int k);

/// Vector of rational functions; carries the normalized sequence sections.
struct RfVector {
    std::vector<RationalFn> components;

    RfVector() = default;
    explicit RfVector(std::vector<RationalFn> comps) : components(std::move(comps)) {}
    explicit RfVector(const VectorCurve& f);

    std::size_t dim() const { return components.size(); }
    bool is_zero() const;
};

RfVector d_z(const RfVector& v);
RfVector d_zbar(const RfVector& v);
RfVector operator+(const RfVector& a, const RfVector& b);
RfVector operator-(const RfVector& a, const RfVector& b);
RfVector operator*(const RfVector& a, const RationalFn& s);

RationalFn hermitian_pairing(const RfVector& f, const RfVector& g);
RationalFn bilinear_pairing(const RfVector& f, const RfVector& g);

/// Normalized sequence sections f_0, f_1, ..., f_{count-1} with f_0 the given
/// representative and f_{i+1} = d_z f_i - (<d_z f_i, f_i>/|f_i|^2) f_i.
/// Stops early (returning fewer sections) once a section vanishes identically.
std::vector<RfVector> harmonic_sections(const VectorCurve& f0, int count);

}  // namespace q4v
