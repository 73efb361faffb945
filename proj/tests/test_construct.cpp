#include <doctest.h>

#include <random>

#include "q4v/construct.hpp"

using namespace q4v;

namespace {

VectorCurve random_seed(std::mt19937& gen) {
    std::uniform_int_distribution<std::size_t> dims(1, 3);
    std::uniform_int_distribution<int> degree(0, 2);
    std::uniform_int_distribution<long long> num(-3, 3);
    std::uniform_int_distribution<int> use_i(0, 1);
    VectorCurve f;
    std::size_t dim = dims(gen);
    for (std::size_t k = 0; k < dim; ++k) {
        BiPoly comp;
        int d = degree(gen);
        for (int a = 0; a <= d; ++a) {
            GaussianRational c(Rational(num(gen)), use_i(gen) ? Rational(num(gen)) : Rational(0));
            comp.add_term(Monomial{std::uint32_t(a), 0}, RadicalScalar(c));
        }
        f.components.push_back(comp);
    }
    return f;
}

}  // namespace

TEST_SUITE("construct") {

TEST_CASE("antiderivative") {
    VectorCurve one{{BiPoly::one()}};
    VectorCurve h = antiderivative(one);
    CHECK(h.components[0] == BiPoly::variable_z());

    VectorCurve f{{BiPoly::variable_z(), BiPoly::monomial(2, 0, RadicalScalar(1))}};
    VectorCurve hf = antiderivative(f);
    CHECK(hf.components[0] == BiPoly::monomial(2, 0, RadicalScalar(Rational(1, 2))));
    CHECK(hf.components[1] == BiPoly::monomial(3, 0, RadicalScalar(Rational(1, 3))));

    // d/dz of the antiderivative returns the input, and H(0) = 0
    std::mt19937 gen(42);
    for (int trial = 0; trial < 20; ++trial) {
        VectorCurve seed = random_seed(gen);
        VectorCurve anti = antiderivative(seed);
        CHECK(d_z(anti) == seed);
        for (const auto& comp : anti.components) CHECK(comp.coeff(0, 0).is_zero());
    }

    VectorCurve bad{{BiPoly::variable_zbar()}};
    CHECK_THROWS_AS(antiderivative(bad), PreconditionError);
}

TEST_CASE("antiderivative of a constant-matrix cubic frame") {
    // F0 = A (1, z, z^2, z^3)^T for a concrete rational A; H must be
    // componentwise a_i0 z + a_i1 z^2/2 + a_i2 z^3/3 + a_i3 z^4/4.
    std::mt19937 gen(7);
    std::uniform_int_distribution<long long> entry(-4, 4);
    std::vector<std::vector<Rational>> a(4, std::vector<Rational>(4));
    VectorCurve f0;
    for (int i = 0; i < 4; ++i) {
        BiPoly comp;
        for (int j = 0; j < 4; ++j) {
            a[i][j] = Rational(entry(gen));
            comp.add_term(Monomial{std::uint32_t(j), 0}, RadicalScalar(a[i][j]));
        }
        f0.components.push_back(comp);
    }
    VectorCurve h = antiderivative(f0);
    for (int i = 0; i < 4; ++i) {
        BiPoly expect;
        for (int j = 0; j < 4; ++j) {
            expect.add_term(Monomial{std::uint32_t(j + 1), 0},
                            RadicalScalar(a[i][j] / Rational(j + 1)));
        }
        CHECK(h.components[i] == expect);
    }
}

TEST_CASE("mixed pair seed") {
    VectorCurve one{{BiPoly::one()}};
    VectorCurve f1 = mixed_pair_seed(one);
    REQUIRE(f1.dim() == 3);
    CHECK(f1.components[0] == BiPoly::monomial(1, 0, RadicalScalar(2)));
    CHECK(f1.components[1] == BiPoly::one() - BiPoly::monomial(2, 0, RadicalScalar(1)));
    CHECK(f1.components[2] ==
          BiPoly::constant(RadicalScalar::i()) + BiPoly::monomial(2, 0, RadicalScalar::i()));

    VectorCurve isotropic{{BiPoly::one(), BiPoly::constant(RadicalScalar::i())}};
    CHECK_THROWS_AS(mixed_pair_seed(isotropic), PreconditionError);
}

TEST_CASE("mixed pair seed output lies in the quadric with isotropy order one") {
    std::mt19937 gen(20260810);
    int done = 0;
    while (done < 25) {
        VectorCurve seed = random_seed(gen);
        if (seed.is_zero() || bilinear_pairing(seed, seed).is_zero()) continue;
        VectorCurve f1 = mixed_pair_seed(seed);
        CHECK(quadric_residual(f1).is_zero());
        auto iso = isotropy_conditions(f1, 1);
        CHECK(iso[0]);
        CHECK(iso[1]);
        ++done;
    }
}

TEST_CASE("w pattern constraints") {
    SymmetricUnitary w413 = w_fixture_413();
    CHECK(w_pattern_check(w413, WPatternTag::P413).all_pass);
    CHECK_FALSE(w_pattern_check(w413, WPatternTag::P415).all_pass);

    SymmetricUnitary w415 = w_fixture_415();
    CHECK(w_pattern_check(w415, WPatternTag::P415).all_pass);
    WPatternReport cross = w_pattern_check(w415, WPatternTag::P413);
    CHECK_FALSE(cross.all_pass);
    bool named = false;
    for (const auto& item : cross.items) {
        if (!item.pass && item.constraint.find("w11") != std::string::npos) named = true;
    }
    CHECK(named);

    SymmetricUnitary w417 = w_fixture_417();
    CHECK(w_pattern_check(w417, WPatternTag::P417).all_pass);

    SymmetricUnitary id(ScalarMatrix::identity(6));
    WPatternReport id_report = w_pattern_check(id, WPatternTag::P417);
    CHECK_FALSE(id_report.all_pass);
    CHECK_FALSE(id_report.items[0].pass);  // w00 = 0 violated

    ScalarMatrix not_symmetric = ScalarMatrix::identity(6);
    not_symmetric.at(0, 1) = RadicalScalar(1);
    CHECK_THROWS_AS(SymmetricUnitary{not_symmetric}, PreconditionError);
}

TEST_CASE("bundled unitary fixtures") {
    CHECK(unitary_u413().is_unitary());
    CHECK(unitary_u415().is_unitary());
    CHECK(unitary_u417().is_unitary());
    CHECK(unitary_u419().is_unitary());
    CHECK((unitary_u413().transpose() * unitary_u413()) == w_fixture_413().entries);
    CHECK((unitary_u415().transpose() * unitary_u415()) == w_fixture_415().entries);
}

TEST_CASE("displayed curves come from the unitary fixtures") {
    RadicalScalar rt2 = RadicalScalar::sqrt_of(2);

    VectorCurve v30(veronese(3, 0));
    v30.components.resize(6);
    CHECK(scaled(unitary_u413().apply(v30), rt2) == curve_eq414());

    VectorCurve v20(veronese(2, 0));
    v20.components.resize(6);
    CHECK(scaled(unitary_u415().apply(v20), rt2) == curve_eq416());
    CHECK(scaled(unitary_u417().apply(v20), rt2) == curve_eq420());

    VectorCurve v21(veronese(2, 1));
    v21.components.resize(6);
    CHECK(unitary_u417().apply(v21) == curve_eq521());

    VectorCurve middle = unitary_u419().apply(veronese(4, 2));
    VectorCurve truncated = curve_eq421();
    truncated.components.pop_back();
    CHECK(middle == scaled(truncated, RadicalScalar(6) * rt2));
}

TEST_CASE("fundamental identities") {
    auto r413 = fundamental_identity_check(unitary_u413(), 3);
    CHECK(r413[0].is_zero());
    CHECK(r413[1].is_zero());
    CHECK_FALSE(r413[2].is_zero());

    auto r415 = fundamental_identity_check(unitary_u415(), 2);
    CHECK(r415[0].is_zero());
    CHECK(r415[1].is_zero());
    CHECK_FALSE(r415[2].is_zero());

    // the zero-block pattern kills every contact, the strongly isotropic case
    auto r417 = fundamental_identity_check(unitary_u417(), 2);
    CHECK(r417[0].is_zero());
    CHECK(r417[1].is_zero());
    CHECK(r417[2].is_zero());

    auto rid = fundamental_identity_check(ScalarMatrix::identity(6), 2);
    VectorCurve v20 = veronese(2, 0);
    CHECK(rid[0] == bilinear_pairing(v20, v20));

    ScalarMatrix not_unitary(6);
    CHECK_THROWS_AS(fundamental_identity_check(not_unitary, 2), PreconditionError);
}

TEST_CASE("coefficient ODE residual") {
    VectorCurve v20 = veronese(2, 0);
    CHECK(coefficient_ode_residual(RationalFn::zero(), v20).is_zero());
    RationalFn x(BiPoly::constant(RadicalScalar(5)), hermitian_pairing(v20, v20));
    CHECK(coefficient_ode_residual(x, v20).is_zero());
    CHECK_FALSE(coefficient_ode_residual(RationalFn{BiPoly::variable_z()}, v20).is_zero());
}

TEST_CASE("pair assembly preconditions") {
    CHECK_THROWS_AS(assemble_real_pair(veronese(2, 0)), PreconditionError);
    VectorCurve e1{{BiPoly::one(), BiPoly::zero()}};
    VectorCurve e2{{BiPoly::zero(), BiPoly::one()}};
    ProjectionMap constant_pair = assemble_sum_pair(e1, e2);
    CHECK(constant_pair.rank == 2);
    CHECK(tangent_data(reflection(constant_pair)).lambda2.is_zero());
    CHECK_THROWS_AS(assemble_sum_pair(e1, e1), PreconditionError);
}

}  // TEST_SUITE
