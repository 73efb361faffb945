// Regenerates the bundled fixture files (curves and matrices) under a target
// directory. The catalog with expected values and citation strings lives next
// to them as hand-maintained data; run with --print-expected to dump exact
// JSON snippets for the catalog's expected-value fields.

#include <filesystem>
#include <iostream>
#include <string>

#include "q4v/construct.hpp"
#include "q4v/serialize.hpp"

namespace fs = std::filesystem;
using namespace q4v;

namespace {

BiPoly one_plus_u_pow(unsigned n) {
    return (BiPoly::one() + BiPoly::monomial(1, 1, RadicalScalar(1))).pow(n);
}

void print_expected(const std::string& label, const RationalFn& value) {
    std::cout << "--- " << label << "\n" << rational_fn_to_json(value, -1) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::string dir = "fixtures";
    bool print = false;
    for (int k = 1; k < argc; ++k) {
        std::string arg = argv[k];
        if (arg == "--print-expected") {
            print = true;
        } else {
            dir = arg;
        }
    }

    fs::create_directories(dir + "/curves/veronese");
    fs::create_directories(dir + "/matrices");

    save_curve(dir + "/curves/eq414.json", curve_eq414());
    save_curve(dir + "/curves/eq416.json", curve_eq416());
    save_curve(dir + "/curves/eq420.json", curve_eq420());
    save_curve(dir + "/curves/eq421.json", curve_eq421());
    save_curve(dir + "/curves/eq521.json", curve_eq521());
    save_curve(dir + "/curves/fphi.json", curve_fphi());
    save_curve(dir + "/curves/c0.json", curve_c0());

    for (int n = 1; n <= 5; ++n) {
        for (int i = 0; i <= n; ++i) {
            save_curve(dir + "/curves/veronese/v" + std::to_string(n) + "_" + std::to_string(i) +
                           ".json",
                       veronese(n, i));
        }
    }

    save_matrix(dir + "/matrices/w413.json", w_fixture_413().entries);
    save_matrix(dir + "/matrices/u413.json", unitary_u413());
    save_matrix(dir + "/matrices/w415.json", w_fixture_415().entries);
    save_matrix(dir + "/matrices/u415.json", unitary_u415());
    save_matrix(dir + "/matrices/w417.json", w_fixture_417().entries);
    save_matrix(dir + "/matrices/u417.json", unitary_u417());
    save_matrix(dir + "/matrices/u419.json", unitary_u419());

    std::cout << "fixture files written under " << dir << "\n";

    if (print) {
        auto constant = [](const Rational& q) { return RationalFn(q); };
        print_expected("2/3", constant(Rational(2, 3)));
        print_expected("1", constant(Rational(1)));
        print_expected("1/2", constant(Rational(1, 2)));
        print_expected("1/3", constant(Rational(1, 3)));
        print_expected("3/2", constant(Rational(3, 2)));
        print_expected("2", constant(Rational(2)));
        print_expected("0", RationalFn::zero());
        for (int c : {4, 6, 8, 12}) {
            print_expected(std::to_string(c) + "/(1+u)^2",
                           RationalFn(BiPoly::constant(RadicalScalar(c)), one_plus_u_pow(2)));
        }
        // 8/3 - 32 u / (9 (1+u)^2) = (24 + 16 u + 24 u^2) / (9 (1+u)^2)
        BiPoly num = BiPoly::constant(RadicalScalar(24)) +
                     BiPoly::monomial(1, 1, RadicalScalar(16)) +
                     BiPoly::monomial(2, 2, RadicalScalar(24));
        print_expected("sff eq414", RationalFn(num, one_plus_u_pow(2).scaled(RadicalScalar(9))));
    }
    return 0;
}
