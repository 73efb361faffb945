#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "q4v/geometry.hpp"

namespace q4v {

/// Square matrix with exact RadicalScalar entries.
class ScalarMatrix {
public:
    ScalarMatrix() = default;
    explicit ScalarMatrix(std::size_t n) : n_(n), e_(n * n) {}
    ScalarMatrix(std::size_t n, std::vector<RadicalScalar> entries);

    static ScalarMatrix identity(std::size_t n);

    std::size_t dim() const { return n_; }
    RadicalScalar& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const RadicalScalar& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    ScalarMatrix transpose() const;
    /// Conjugate transpose.
    ScalarMatrix dagger() const;
    bool is_symmetric() const;
    bool is_unitary() const;  // M M* == I, exact

    /// Applies the matrix to a curve: (M f)_i = sum_j M_ij f_j.
    VectorCurve apply(const VectorCurve& f) const;

    friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<RadicalScalar> e_;
};

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);

/// Symmetric unitary matrix W = U^T U; validated on construction.
struct SymmetricUnitary {
    ScalarMatrix entries;

    explicit SymmetricUnitary(ScalarMatrix m);
    std::size_t dim() const { return entries.dim(); }
};

enum class WPatternTag { P413, P415, P417 };

std::string to_string(WPatternTag tag);
std::optional<WPatternTag> parse_w_pattern(const std::string& name);

/// Constraint system on the entries w_ij of a symmetric unitary: forced
/// zeros, two-entry linear relations, and required-nonzero positions.
struct WPattern {
    struct ZeroAt {
        std::size_t i, j;
    };
    struct Linear {
        // w(ai,aj) + coeff * w(bi,bj) == 0
        std::size_t ai, aj, bi, bj;
        RadicalScalar coeff;
    };
    struct NonZeroAt {
        std::size_t i, j;
    };

    WPatternTag tag;
    std::vector<ZeroAt> zeros;
    std::vector<Linear> relations;
    std::vector<NonZeroAt> nonzeros;

    static WPattern of(WPatternTag tag);
};

struct WPatternReport {
    struct Item {
        std::string constraint;
        bool pass;
    };
    std::vector<Item> items;
    bool all_pass = true;
};

WPatternReport w_pattern_check(const SymmetricUnitary& w, const WPattern& pattern);
WPatternReport w_pattern_check(const SymmetricUnitary& w, WPatternTag tag);

/// Componentwise antiderivative H with dH/dz = f and H(0) = 0.
VectorCurve antiderivative(const VectorCurve& f);

/// (2H, 1 - <H,Hbar>, i(1 + <H,Hbar>)) from a non-isotropic polynomial seed;
/// the output lies in the quadric and has isotropy order exactly one for
/// generic seeds.
VectorCurve mixed_pair_seed(const VectorCurve& f0);

/// tr(U^T U V_0^(m) V_i^(m)T) for i = 0, 1, 2, with the Veronese
/// representatives padded to the matrix dimension.
std::array<BiPoly, 3> fundamental_identity_check(const ScalarMatrix& u, int m);
/// Same residuals computed directly from W = U^T U.
std::array<BiPoly, 3> fundamental_identity_from_w(const ScalarMatrix& w, int m);

/// dx + x * d log|f0|^2, as an exact rational function.
RationalFn coefficient_ode_residual(const RationalFn& x, const VectorCurve& f0);

/// Projector onto span{conj(f), f}; requires the quadric residual of f to
/// vanish so that the two frames are orthogonal.
ProjectionMap assemble_real_pair(const VectorCurve& f);

/// Projector onto span{f, g} for Hermitian-orthogonal summands.
ProjectionMap assemble_sum_pair(const VectorCurve& f, const VectorCurve& g);

// --- bundled exact fixtures -------------------------------------------------

VectorCurve curve_eq414();
VectorCurve curve_eq416();
VectorCurve curve_eq420();
VectorCurve curve_eq421();  // padded to dimension 6 with a zero component
VectorCurve curve_eq521();
VectorCurve curve_fphi();
VectorCurve curve_c0();

ScalarMatrix unitary_u413();
ScalarMatrix unitary_u415();
ScalarMatrix unitary_u417();  // the block completion of the displayed columns
ScalarMatrix unitary_u419();  // 5x5
SymmetricUnitary w_fixture_413();
SymmetricUnitary w_fixture_415();
SymmetricUnitary w_fixture_417();

}  // namespace q4v
