#include "q4v/serialize.hpp"

#include <fstream>
#include <sstream>

#include "json_detail.hpp"

namespace q4v {

namespace detail {

ordered_json scalar_json(const RadicalScalar& s) {
    ordered_json out = ordered_json::array();
    for (const auto& [rad, c] : s.terms()) {
        out.push_back({{"radicand", rad},
                       {"re", rational_to_string(c.re)},
                       {"im", rational_to_string(c.im)}});
    }
    return out;
}

RadicalScalar scalar_unjson(const ordered_json& j) {
    if (!j.is_array()) throw ParseError("scalar: expected a term array");
    RadicalScalar out;
    for (const auto& term : j) {
        std::uint64_t rad = term.at("radicand").get<std::uint64_t>();
        GaussianRational c(parse_rational(term.at("re").get<std::string>()),
                           parse_rational(term.at("im").get<std::string>()));
        out += RadicalScalar::term(rad, c);
    }
    return out;
}

ordered_json bipoly_json(const BiPoly& p) {
    ordered_json out = ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        out.push_back({{"z", m.z}, {"zbar", m.zbar}, {"coeff", scalar_json(c)}});
    }
    return out;
}

BiPoly bipoly_unjson(const ordered_json& j) {
    if (!j.is_array()) throw ParseError("polynomial: expected a term array");
    BiPoly out;
    for (const auto& term : j) {
        Monomial m{term.at("z").get<std::uint32_t>(), term.at("zbar").get<std::uint32_t>()};
        out.add_term(m, scalar_unjson(term.at("coeff")));
    }
    return out;
}

ordered_json rational_fn_json(const RationalFn& r) {
    return {{"num", bipoly_json(r.num())}, {"den", bipoly_json(r.den())}};
}

RationalFn rational_fn_unjson(const ordered_json& j) {
    return RationalFn(bipoly_unjson(j.at("num")), bipoly_unjson(j.at("den")));
}

ordered_json curve_json(const VectorCurve& f) {
    ordered_json comps = ordered_json::array();
    for (const auto& c : f.components) comps.push_back(bipoly_json(c));
    return {{"dim", f.dim()}, {"components", std::move(comps)}};
}

VectorCurve curve_unjson(const ordered_json& j) {
    VectorCurve f;
    std::size_t dim = j.at("dim").get<std::size_t>();
    for (const auto& c : j.at("components")) f.components.push_back(bipoly_unjson(c));
    if (f.dim() != dim) throw ParseError("curve: dim does not match component count");
    if (f.components.empty()) throw ParseError("curve: no components");
    return f;
}

ordered_json matrix_json(const ScalarMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) row.push_back(scalar_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

ScalarMatrix matrix_unjson(const ordered_json& j) {
    std::size_t dim = j.at("dim").get<std::size_t>();
    ScalarMatrix m(dim);
    const auto& rows = j.at("entries");
    if (rows.size() != dim) throw ParseError("matrix: row count mismatch");
    for (std::size_t i = 0; i < dim; ++i) {
        if (rows[i].size() != dim) throw ParseError("matrix: column count mismatch");
        for (std::size_t k = 0; k < dim; ++k) m.at(i, k) = scalar_unjson(rows[i][k]);
    }
    return m;
}

}  // namespace detail

namespace {

detail::ordered_json parse_json(const std::string& text) {
    try {
        return detail::ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

std::string dump(const detail::ordered_json& j, int indent) {
    return indent < 0 ? j.dump() : j.dump(indent);
}

}  // namespace

std::string scalar_to_json(const RadicalScalar& s, int indent) {
    return dump(detail::scalar_json(s), indent);
}

RadicalScalar scalar_from_json(const std::string& text) {
    return detail::scalar_unjson(parse_json(text));
}

std::string bipoly_to_json(const BiPoly& p, int indent) {
    return dump(detail::bipoly_json(p), indent);
}

BiPoly bipoly_from_json(const std::string& text) {
    return detail::bipoly_unjson(parse_json(text));
}

std::string rational_fn_to_json(const RationalFn& r, int indent) {
    return dump(detail::rational_fn_json(r), indent);
}

RationalFn rational_fn_from_json(const std::string& text) {
    return detail::rational_fn_unjson(parse_json(text));
}

std::string curve_to_json(const VectorCurve& f, int indent) {
    return dump(detail::curve_json(f), indent);
}

VectorCurve curve_from_json(const std::string& text) {
    return detail::curve_unjson(parse_json(text));
}

std::string matrix_to_json(const ScalarMatrix& m, int indent) {
    return dump(detail::matrix_json(m), indent);
}

ScalarMatrix matrix_from_json(const std::string& text) {
    return detail::matrix_unjson(parse_json(text));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

VectorCurve load_curve(const std::string& path) {
    return curve_from_json(read_file(path));
}

void save_curve(const std::string& path, const VectorCurve& f) {
    write_file(path, curve_to_json(f) + "\n");
}

ScalarMatrix load_matrix(const std::string& path) {
    return matrix_from_json(read_file(path));
}

void save_matrix(const std::string& path, const ScalarMatrix& m) {
    write_file(path, matrix_to_json(m) + "\n");
}

const FixtureRecord* FixtureCatalog::find(const std::string& id) const {
    for (const auto& r : records) {
        if (r.id == id) return &r;
    }
    return nullptr;
}

FixtureCatalog load_catalog(const std::string& dir) {
    detail::ordered_json j = parse_json(read_file(dir + "/catalog.json"));
    FixtureCatalog catalog;
    for (const auto& entry : j.at("fixtures")) {
        FixtureRecord r;
        r.id = entry.at("id").get<std::string>();
        r.kind = entry.at("kind").get<std::string>();
        r.source = entry.value("source", std::string{});
        if (entry.contains("citations")) {
            for (const auto& [key, value] : entry.at("citations").items()) {
                r.citations[key] = value.get<std::string>();
            }
        }
        auto file_of = [&](const char* key) -> std::optional<std::string> {
            if (!entry.contains(key)) return std::nullopt;
            return entry.at(key).get<std::string>();
        };
        r.curve_file = file_of("curve");
        r.partner_file = file_of("partner");
        r.unitary_file = file_of("unitary");
        r.w_file = file_of("w");
        r.pattern = file_of("pattern");
        if (entry.contains("expected")) {
            const auto& e = entry.at("expected");
            if (e.contains("lambda2")) r.expected.lambda2 = detail::rational_fn_unjson(e.at("lambda2"));
            if (e.contains("curvature")) r.expected.curvature = detail::rational_fn_unjson(e.at("curvature"));
            if (e.contains("sff")) r.expected.sff = detail::rational_fn_unjson(e.at("sff"));
            if (e.contains("sff_constant")) r.expected.sff_constant = e.at("sff_constant").get<bool>();
            if (e.contains("closed_form")) r.expected.closed_form = e.at("closed_form").get<bool>();
            if (e.contains("isotropy")) r.expected.isotropy = e.at("isotropy").get<std::vector<bool>>();
            if (e.contains("degrees")) r.expected.degrees = e.at("degrees").get<std::vector<int>>();
            if (e.contains("fundamental")) {
                auto v = e.at("fundamental").get<std::vector<std::string>>();
                if (v.size() != 3) throw ParseError("fixture " + r.id + ": fundamental needs 3 entries");
                r.expected.fundamental = std::array<std::string, 3>{v[0], v[1], v[2]};
            }
            if (e.contains("cpn_minimal")) r.expected.cpn_minimal = e.at("cpn_minimal").get<bool>();
        }
        catalog.records.push_back(std::move(r));
    }
    return catalog;
}

}  // namespace q4v
