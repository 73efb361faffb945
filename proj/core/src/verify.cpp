#include "q4v/verify.hpp"

#include <functional>
#include <utility>

#include "json_detail.hpp"

namespace q4v {

namespace {

std::string describe(const RationalFn& r) {
    auto c = r.is_constant();
    if (c) return c->to_string();
    return r.to_string();
}

class CheckRunner {
public:
    explicit CheckRunner(const Fixture& fixture) : fixture_(fixture) {
        report_.fixture_id = fixture.record.id;
        report_.source = fixture.record.source;
    }

    void run(const std::string& name, const std::string& expected,
             const std::function<std::pair<bool, std::string>()>& body) {
        CheckResult result;
        result.name = name;
        auto it = fixture_.record.citations.find(name);
        result.citation = it != fixture_.record.citations.end() ? it->second
                                                                : fixture_.record.source;
        result.expected = expected;
        try {
            auto [pass, computed] = body();
            result.pass = pass;
            result.computed = computed;
            if (!pass) result.witness = computed;
        } catch (const Error& e) {
            result.pass = false;
            result.computed = std::string("error: ") + e.what();
            result.witness = result.computed;
        }
        report_.all_pass = report_.all_pass && result.pass;
        report_.checks.push_back(std::move(result));
    }

    VerificationReport take() { return std::move(report_); }

private:
    const Fixture& fixture_;
    VerificationReport report_;
};

std::string bool_vector_to_string(const std::vector<bool>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i] ? "true" : "false";
    }
    return out + ")";
}

std::string int_vector_to_string(const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

void run_pair_checks(CheckRunner& runner, const Fixture& fixture, const ProjectionMap& pair) {
    const FixtureExpected& expected = fixture.record.expected;
    const VectorCurve& curve = *fixture.curve;

    runner.run("projector", "rank-2 sigma-real Hermitian idempotent", [&] {
        int rank = validate_projector(pair);
        bool real = is_sigma_real(pair);
        bool pass = (rank == 2) && real;
        return std::make_pair(pass, "rank " + std::to_string(rank) +
                                        (real ? ", sigma-real" : ", not sigma-real"));
    });

    TangentData tangent = tangent_data(reflection(pair));

    if (expected.lambda2) {
        runner.run("metric", describe(*expected.lambda2), [&] {
            bool pass = tangent.lambda2 == *expected.lambda2;
            return std::make_pair(pass, describe(tangent.lambda2));
        });
    }

    if (expected.curvature) {
        runner.run("curvature", describe(*expected.curvature) + " (constant)", [&] {
            RationalFn k = gauss_curvature(tangent.lambda2);
            bool pass = k == *expected.curvature;
            auto c = k.is_constant();
            return std::make_pair(pass && c.has_value(),
                                  c ? c->to_string() + " (constant)" : k.to_string());
        });
    }

    RationalFn sff;
    bool have_sff = false;
    if (expected.sff || expected.sff_constant || expected.closed_form) {
        sff = sff_norm(tangent);
        have_sff = true;
    }

    if (expected.sff) {
        runner.run("sff_norm", describe(*expected.sff), [&] {
            bool pass = sff == *expected.sff;
            return std::make_pair(pass, describe(sff));
        });
    }

    if (expected.sff_constant) {
        runner.run("sff_constancy", *expected.sff_constant ? "constant" : "non-constant", [&] {
            bool constant = sff.is_constant().has_value();
            bool pass = constant == *expected.sff_constant;
            return std::make_pair(pass, constant ? "constant" : "non-constant");
        });
    }

    if (expected.closed_form && *expected.closed_form && have_sff) {
        runner.run("sff_closed_form", "matches the tangent-data route", [&] {
            OsculatingFlag flag = OsculatingFlag::build(curve, 1);
            RationalFn closed = mixed_pair_sff_closed_form(flag);
            bool pass = closed == sff;
            return std::make_pair(pass, describe(closed));
        });
    }

    runner.run("harmonicity", "zero residual", [&] {
        RfMatrix residual = harmonicity_residual(tangent);
        bool pass = residual.is_zero();
        return std::make_pair(pass, pass ? "zero residual" : "nonzero residual");
    });
}

void run_real_pair(CheckRunner& runner, const Fixture& fixture) {
    const FixtureExpected& expected = fixture.record.expected;
    const VectorCurve& curve = *fixture.curve;

    runner.run("quadric", "0", [&] {
        BiPoly residual = quadric_residual(curve);
        return std::make_pair(residual.is_zero(), residual.to_string());
    });

    if (expected.isotropy) {
        runner.run("isotropy", bool_vector_to_string(*expected.isotropy), [&] {
            auto flags = isotropy_conditions(curve, int(expected.isotropy->size()) - 1);
            bool pass = flags == *expected.isotropy;
            return std::make_pair(pass, bool_vector_to_string(flags));
        });
    }

    if (expected.degrees) {
        runner.run("degrees", int_vector_to_string(*expected.degrees), [&] {
            OsculatingFlag flag = OsculatingFlag::build(curve);
            bool pass = flag.degrees == *expected.degrees;
            return std::make_pair(pass, int_vector_to_string(flag.degrees));
        });
    }

    ProjectionMap pair = assemble_real_pair(curve);
    run_pair_checks(runner, fixture, pair);

    if (expected.cpn_minimal) {
        runner.run("cpn_minimality", *expected.cpn_minimal ? "zero residual" : "nonzero residual",
                   [&] {
                       RfVector residual = cpn_minimality_residual(curve);
                       bool zero = residual.is_zero();
                       bool pass = zero == *expected.cpn_minimal;
                       return std::make_pair(pass, zero ? "zero residual" : "nonzero residual");
                   });
    }
}

void run_sum_pair(CheckRunner& runner, const Fixture& fixture) {
    const VectorCurve& curve = *fixture.curve;
    const VectorCurve& partner = *fixture.partner;

    runner.run("orthogonality", "0", [&] {
        BiPoly pairing = hermitian_pairing(curve, partner);
        return std::make_pair(pairing.is_zero(), pairing.to_string());
    });

    ProjectionMap pair = assemble_sum_pair(curve, partner);
    run_pair_checks(runner, fixture, pair);
}

void run_w_matrix(CheckRunner& runner, const Fixture& fixture) {
    const FixtureExpected& expected = fixture.record.expected;

    ScalarMatrix w_entries = fixture.w ? *fixture.w
                                       : fixture.unitary->transpose() * *fixture.unitary;

    runner.run("w_symmetric_unitary", "W^T = W and W W* = I", [&] {
        bool pass = w_entries.is_symmetric() && w_entries.is_unitary();
        return std::make_pair(pass, pass ? "holds" : "violated");
    });

    if (fixture.unitary) {
        runner.run("u_unitary", "U U* = I", [&] {
            bool pass = fixture.unitary->is_unitary();
            return std::make_pair(pass, pass ? "holds" : "violated");
        });
        if (fixture.w) {
            runner.run("w_equals_utu", "W = U^T U", [&] {
                bool pass = (fixture.unitary->transpose() * *fixture.unitary) == *fixture.w;
                return std::make_pair(pass, pass ? "holds" : "violated");
            });
        }
    }

    std::optional<WPatternTag> tag;
    if (fixture.record.pattern) tag = parse_w_pattern(*fixture.record.pattern);

    if (tag) {
        runner.run("pattern", to_string(*tag) + " constraints hold", [&] {
            SymmetricUnitary w(w_entries);
            WPatternReport pattern_report = w_pattern_check(w, *tag);
            std::string detail;
            for (const auto& item : pattern_report.items) {
                if (!item.pass) detail += (detail.empty() ? "" : "; ") + item.constraint;
            }
            return std::make_pair(pattern_report.all_pass,
                                  pattern_report.all_pass ? "all constraints hold"
                                                          : "violated: " + detail);
        });
    }

    if (expected.fundamental && fixture.unitary && tag) {
        int m = (*tag == WPatternTag::P413) ? 3 : 2;
        runner.run("fundamental_identity",
                   (*expected.fundamental)[0] + ", " + (*expected.fundamental)[1] + ", " +
                       (*expected.fundamental)[2],
                   [&] {
                       auto residuals = fundamental_identity_check(*fixture.unitary, m);
                       std::string computed;
                       bool pass = true;
                       for (std::size_t i = 0; i < 3; ++i) {
                           std::string status = residuals[i].is_zero() ? "zero" : "nonzero";
                           pass = pass && (status == (*expected.fundamental)[i]);
                           computed += (i ? ", " : "") + status;
                       }
                       return std::make_pair(pass, computed);
                   });
    }
}

}  // namespace

Fixture load_fixture(const std::string& dir, const FixtureRecord& record) {
    Fixture fixture;
    fixture.record = record;
    if (record.curve_file) fixture.curve = load_curve(dir + "/" + *record.curve_file);
    if (record.partner_file) fixture.partner = load_curve(dir + "/" + *record.partner_file);
    if (record.unitary_file) fixture.unitary = load_matrix(dir + "/" + *record.unitary_file);
    if (record.w_file) fixture.w = load_matrix(dir + "/" + *record.w_file);
    return fixture;
}

VerificationReport run_fixture_checks(const Fixture& fixture) {
    CheckRunner runner(fixture);
    const std::string& kind = fixture.record.kind;
    if (kind == "real-pair") {
        if (!fixture.curve) throw PreconditionError("fixture " + fixture.record.id + ": missing curve");
        run_real_pair(runner, fixture);
    } else if (kind == "sum-pair") {
        if (!fixture.curve || !fixture.partner) {
            throw PreconditionError("fixture " + fixture.record.id + ": missing curve or partner");
        }
        run_sum_pair(runner, fixture);
    } else if (kind == "w-matrix") {
        if (!fixture.w && !fixture.unitary) {
            throw PreconditionError("fixture " + fixture.record.id + ": missing matrix");
        }
        run_w_matrix(runner, fixture);
    } else {
        throw PreconditionError("fixture " + fixture.record.id + ": unknown kind " + kind);
    }
    return runner.take();
}

std::string report_to_text(const VerificationReport& report) {
    std::string out = "fixture " + report.fixture_id;
    if (!report.source.empty()) out += "  [" + report.source + "]";
    out += "\n";
    for (const auto& check : report.checks) {
        out += check.pass ? "  [PASS] " : "  [FAIL] ";
        out += check.name;
        if (!check.citation.empty()) out += "  (" + check.citation + ")";
        out += "\n          expected: " + check.expected;
        out += "\n          computed: " + check.computed + "\n";
    }
    return out;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports, int indent) {
    detail::ordered_json out;
    out["fixtures"] = detail::ordered_json::array();
    bool all = true;
    for (const auto& report : reports) {
        detail::ordered_json checks = detail::ordered_json::array();
        for (const auto& check : report.checks) {
            checks.push_back({{"name", check.name},
                              {"citation", check.citation},
                              {"status", check.pass ? "pass" : "fail"},
                              {"expected", check.expected},
                              {"computed", check.computed},
                              {"witness", check.witness}});
        }
        out["fixtures"].push_back({{"id", report.fixture_id},
                                   {"source", report.source},
                                   {"pass", report.all_pass},
                                   {"checks", std::move(checks)}});
        all = all && report.all_pass;
    }
    out["pass"] = all;
    return indent < 0 ? out.dump() : out.dump(indent);
}

}  // namespace q4v
