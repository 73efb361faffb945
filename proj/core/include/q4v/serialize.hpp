#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "q4v/construct.hpp"

namespace q4v {

// Text forms: a scalar is a list of {radicand, re, im} terms, a polynomial a
// list of {z, zbar, coeff} terms, a rational function {num, den}. All exact
// and bit-exact under round-trip.

std::string scalar_to_json(const RadicalScalar& s, int indent = -1);
RadicalScalar scalar_from_json(const std::string& text);

std::string bipoly_to_json(const BiPoly& p, int indent = -1);
BiPoly bipoly_from_json(const std::string& text);

std::string rational_fn_to_json(const RationalFn& r, int indent = -1);
RationalFn rational_fn_from_json(const std::string& text);

std::string curve_to_json(const VectorCurve& f, int indent = 2);
VectorCurve curve_from_json(const std::string& text);

std::string matrix_to_json(const ScalarMatrix& m, int indent = 2);
ScalarMatrix matrix_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

VectorCurve load_curve(const std::string& path);
void save_curve(const std::string& path, const VectorCurve& f);
ScalarMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ScalarMatrix& m);

/// Expected-value records for a fixture; absent fields are not checked.
struct FixtureExpected {
    std::optional<RationalFn> lambda2;
    std::optional<RationalFn> curvature;
    std::optional<RationalFn> sff;
    std::optional<bool> sff_constant;
    std::optional<bool> closed_form;
    std::optional<std::vector<bool>> isotropy;
    std::optional<std::vector<int>> degrees;
    std::optional<std::array<std::string, 3>> fundamental;  // "zero" | "nonzero"
    std::optional<bool> cpn_minimal;
};

struct FixtureRecord {
    std::string id;
    std::string kind;  // "real-pair" | "sum-pair" | "w-matrix"
    std::string source;
    std::map<std::string, std::string> citations;  // check name -> citation
    std::optional<std::string> curve_file;
    std::optional<std::string> partner_file;
    std::optional<std::string> unitary_file;
    std::optional<std::string> w_file;
    std::optional<std::string> pattern;
    FixtureExpected expected;
};

struct FixtureCatalog {
    std::vector<FixtureRecord> records;

    const FixtureRecord* find(const std::string& id) const;
};

/// Reads <dir>/catalog.json.
FixtureCatalog load_catalog(const std::string& dir);

}  // namespace q4v
