#include <doctest.h>

#include "q4v/construct.hpp"
#include "q4v/geometry.hpp"

using namespace q4v;

namespace {

BiPoly u_pow(unsigned n) {
    return (BiPoly::one() + BiPoly::monomial(1, 1, RadicalScalar(1))).pow(n);
}

RationalFn over_u2(int c) {
    return RationalFn(BiPoly::constant(RadicalScalar(c)), u_pow(2));
}

VectorCurve constant_e1(std::size_t dim) {
    VectorCurve f;
    f.components.assign(dim, BiPoly::zero());
    f.components[0] = BiPoly::one();
    return f;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("projector basics") {
    ProjectionMap p = projector({constant_e1(2)});
    CHECK(p.rank == 1);
    CHECK(p.entries.at(0, 0) == RationalFn::one());
    CHECK(p.entries.at(1, 1).is_zero());

    // non-orthogonal frames are rejected with the offending pair
    VectorCurve f = constant_e1(2);
    VectorCurve g;
    g.components = {BiPoly::one(), BiPoly::variable_z()};
    CHECK_THROWS_WITH_AS(projector({f, g}), doctest::Contains("0 and 1"), PreconditionError);

    ProjectionMap pair = assemble_real_pair(curve_eq521());
    CHECK(pair.rank == 2);
    CHECK(is_sigma_real(pair));
}

TEST_CASE("reflection") {
    ProjectionMap p = projector({constant_e1(2)});
    RfMatrix s = reflection(p);
    CHECK(s.at(0, 0) == RationalFn::one());
    CHECK(s.at(1, 1) == -RationalFn::one());

    ProjectionMap pair = assemble_real_pair(curve_eq521());
    RfMatrix spair = reflection(pair);
    CHECK(spair * spair == RfMatrix::identity(6));
    CHECK(spair.dagger() == spair);
    // trace s = 2k - n
    auto tr = spair.trace().is_constant();
    REQUIRE(tr.has_value());
    CHECK(tr->as_rational().value() == Rational(-2));
}

TEST_CASE("tangent data invariants and metric values") {
    TangentData t = tangent_data(reflection(assemble_real_pair(curve_eq521())));
    CHECK(t.lambda2 == over_u2(8));
    CHECK(t.a_zbar == t.a_z.dagger() * RationalFn(Rational(-1)));
    CHECK(conj_swap(t.lambda2) == t.lambda2);

    TangentData t416 = tangent_data(reflection(assemble_real_pair(curve_eq416())));
    CHECK(t416.lambda2 == over_u2(4));

    // constant projector has a degenerate metric
    TangentData tconst = tangent_data(reflection(projector({constant_e1(2)})));
    CHECK(tconst.lambda2.is_zero());
    CHECK_THROWS_AS(gauss_curvature(tconst.lambda2), PreconditionError);
    CHECK_THROWS_AS(sff_norm(tconst), PreconditionError);
}

TEST_CASE("gauss curvature closed forms") {
    // lambda2 = n/(1+u)^2 has K = 4/n
    for (int n : {1, 2, 3, 6}) {
        RationalFn k = gauss_curvature(over_u2(n));
        auto c = k.is_constant();
        REQUIRE(c.has_value());
        CHECK(c->as_rational().value() == Rational(4, n));
    }
}

TEST_CASE("totally geodesic pair") {
    TangentData t = tangent_data(reflection(assemble_real_pair(curve_eq521())));
    RationalFn k = gauss_curvature(t.lambda2);
    CHECK(k == RationalFn(Rational(1, 2)));
    CHECK(sff_norm(t).is_zero());
    CHECK(harmonicity_residual(t).is_zero());
}

TEST_CASE("holomorphic pair of curvature one") {
    TangentData t = tangent_data(reflection(assemble_real_pair(curve_eq416())));
    CHECK(gauss_curvature(t.lambda2) == RationalFn(Rational(1)));
    RationalFn b = sff_norm(t);
    CHECK(b == RationalFn(Rational(3, 2)));
    CHECK(harmonicity_residual(t).is_zero());
}

TEST_CASE("curvature is invariant under constant frame rescaling") {
    VectorCurve f = curve_eq521();
    ProjectionMap p1 = assemble_real_pair(f);
    ProjectionMap p2 = projector({scaled(conj_swap(f), RadicalScalar(3)),
                                  scaled(f, RadicalScalar(Rational(1, 2)) * RadicalScalar::i())});
    CHECK(p1.entries == p2.entries);
    RationalFn k1 = gauss_curvature(tangent_data(reflection(p1)).lambda2);
    RationalFn k2 = gauss_curvature(tangent_data(reflection(p2)).lambda2);
    CHECK(k1 == k2);
}

TEST_CASE("mixed pair closed form") {
    OsculatingFlag flag414 = OsculatingFlag::build(curve_eq414(), 1);
    RationalFn closed = mixed_pair_sff_closed_form(flag414);
    BiPoly num = BiPoly::constant(RadicalScalar(24)) + BiPoly::monomial(1, 1, RadicalScalar(16)) +
                 BiPoly::monomial(2, 2, RadicalScalar(24));
    CHECK(closed == RationalFn(num, u_pow(2).scaled(RadicalScalar(9))));
    CHECK_FALSE(closed.is_constant().has_value());

    OsculatingFlag flag416 = OsculatingFlag::build(curve_eq416(), 1);
    CHECK(mixed_pair_sff_closed_form(flag416) == RationalFn(Rational(3, 2)));

    // vanishing second contact leaves the constant 2 delta_1/delta_0
    OsculatingFlag flag420 = OsculatingFlag::build(curve_eq420(), 1);
    CHECK(mixed_pair_sff_closed_form(flag420) == RationalFn(Rational(2)));

    OsculatingFlag bad = OsculatingFlag::build(veronese(2, 0), 1);
    CHECK_THROWS_AS(mixed_pair_sff_closed_form(bad), PreconditionError);
}

TEST_CASE("harmonicity negative control") {
    // (1, z + zbar) is neither holomorphic nor antiholomorphic, hence not harmonic
    VectorCurve g;
    g.components = {BiPoly::one(), BiPoly::variable_z() + BiPoly::variable_zbar()};
    TangentData tg = tangent_data(reflection(projector({g})));
    CHECK_FALSE(harmonicity_residual(tg).is_zero());

    // while the antiholomorphic line is harmonic
    VectorCurve a;
    a.components = {BiPoly::one(), BiPoly::variable_zbar()};
    TangentData ta = tangent_data(reflection(projector({a})));
    CHECK(harmonicity_residual(ta).is_zero());
}

TEST_CASE("projective-space minimality residual") {
    CHECK(cpn_minimality_residual(veronese(2, 1)).is_zero());
    CHECK(cpn_minimality_residual(curve_eq420()).is_zero());
    CHECK_FALSE(cpn_minimality_residual(curve_fphi()).is_zero());
    CHECK_THROWS_AS(cpn_minimality_residual(VectorCurve{{BiPoly::zero()}}), PreconditionError);
}

TEST_CASE("degree relation checker") {
    CHECK(degree_relation_check(OsculatingFlag::build(veronese(4, 0))).all_pass);
    CHECK(degree_relation_check(OsculatingFlag::build(veronese(2, 0))).all_pass);

    VectorCurve ramified;
    ramified.components = {BiPoly::one(), BiPoly::monomial(2, 0, RadicalScalar(1))};
    DegreeRelationReport report = degree_relation_check(OsculatingFlag::build(ramified));
    REQUIRE(!report.items.empty());
    CHECK_FALSE(report.items[0].pass);
    CHECK_FALSE(report.all_pass);
}

}  // TEST_SUITE
