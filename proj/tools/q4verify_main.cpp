#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <iostream>
#include <thread>
#include <vector>

#include "q4v/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitInputError = 2;

struct JsonSink {
    std::string path;

    void write(const std::string& content) const {
        if (path.empty()) return;
        q4v::write_file(path, content);
    }
};

int cmd_verify(const std::string& fixtures_dir, const std::string& id, bool all,
               const JsonSink& sink, unsigned jobs) {
    q4v::FixtureCatalog catalog = q4v::load_catalog(fixtures_dir);
    std::vector<q4v::FixtureRecord> records;
    if (all) {
        records = catalog.records;
    } else {
        const q4v::FixtureRecord* record = catalog.find(id);
        if (record == nullptr) {
            std::cerr << "unknown fixture id: " << id << "\n";
            return kExitInputError;
        }
        records.push_back(*record);
    }

    std::vector<q4v::VerificationReport> reports(records.size());
    jobs = std::max(1u, jobs);
    if (jobs == 1 || records.size() <= 1) {
        for (std::size_t k = 0; k < records.size(); ++k) {
            reports[k] = q4v::run_fixture_checks(q4v::load_fixture(fixtures_dir, records[k]));
        }
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> workers;
        std::atomic<bool> failed{false};
        std::string first_error;
        std::mutex error_mutex;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, records.size()); ++t) {
            workers.emplace_back([&] {
                for (;;) {
                    std::size_t k = cursor.fetch_add(1);
                    if (k >= records.size()) return;
                    try {
                        reports[k] =
                            q4v::run_fixture_checks(q4v::load_fixture(fixtures_dir, records[k]));
                    } catch (const std::exception& e) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!failed.exchange(true)) first_error = e.what();
                    }
                }
            });
        }
        for (auto& w : workers) w.join();
        if (failed.load()) throw q4v::Error(first_error);
    }

    bool all_pass = true;
    for (const auto& report : reports) {
        std::cout << q4v::report_to_text(report);
        all_pass = all_pass && report.all_pass;
    }
    std::size_t total = 0;
    std::size_t passed = 0;
    for (const auto& report : reports) {
        total += report.checks.size();
        for (const auto& check : report.checks) passed += check.pass ? 1 : 0;
    }
    std::cout << "summary: " << passed << "/" << total << " checks passed, " << reports.size()
              << (reports.size() == 1 ? " fixture\n" : " fixtures\n");
    sink.write(q4v::reports_to_json(reports));
    return all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_curvature(const std::string& curve_file, const std::string& mode,
                  const std::string& partner_file, const JsonSink& sink) {
    q4v::VectorCurve curve = q4v::load_curve(curve_file);
    q4v::ProjectionMap pair;
    if (mode == "real-pair") {
        pair = q4v::assemble_real_pair(curve);
    } else if (mode == "sum-pair") {
        if (partner_file.empty()) {
            std::cerr << "sum-pair mode needs --partner\n";
            return kExitInputError;
        }
        pair = q4v::assemble_sum_pair(curve, q4v::load_curve(partner_file));
    } else {
        std::cerr << "unknown mode: " << mode << "\n";
        return kExitInputError;
    }
    q4v::TangentData tangent = q4v::tangent_data(q4v::reflection(pair));
    q4v::RationalFn k = q4v::gauss_curvature(tangent.lambda2);
    auto constant = k.is_constant();
    std::string rendered =
        constant ? constant->to_string() + " (constant)" : k.to_string() + " (non-constant)";
    std::cout << "K = " << rendered << "\n";
    if (!sink.path.empty()) {
        sink.write(std::string("{\n  \"curvature\": \"") + rendered + "\",\n  \"exact\": " +
                   q4v::rational_fn_to_json(k) + "\n}\n");
    }
    return kExitOk;
}

int cmd_sequence(const std::string& curve_file, int steps, const JsonSink& sink) {
    q4v::VectorCurve curve = q4v::load_curve(curve_file);
    if (!q4v::is_holomorphic(curve)) {
        std::cerr << "sequence command needs a holomorphic curve\n";
        return kExitInputError;
    }
    q4v::OsculatingFlag flag = q4v::OsculatingFlag::build(curve);
    q4v::DegreeRelationReport relation = q4v::degree_relation_check(flag);
    std::vector<bool> isotropy = q4v::isotropy_conditions(curve, steps);

    std::cout << "degrees:";
    for (int d : flag.degrees) std::cout << " " << d;
    std::cout << "\nl_coefficients:\n";
    for (std::size_t i = 0; i < flag.l_coeffs.size(); ++i) {
        std::cout << "  l_" << i << " = " << flag.l_coeffs[i].to_string() << "\n";
    }
    std::cout << "degree relation (unramifiedness proxy):\n";
    bool relation_ok = true;
    for (const auto& item : relation.items) {
        std::cout << "  i=" << item.index << "  value=" << item.value << "  "
                  << (item.pass ? "pass" : "fail") << "\n";
        relation_ok = relation_ok && item.pass;
    }
    std::cout << "isotropy:";
    for (bool b : isotropy) std::cout << " " << (b ? "true" : "false");
    std::cout << "\n";

    if (!sink.path.empty()) {
        std::string json = "{\n  \"degrees\": [";
        for (std::size_t i = 0; i < flag.degrees.size(); ++i) {
            json += (i ? ", " : "") + std::to_string(flag.degrees[i]);
        }
        json += "],\n  \"degree_relation_pass\": ";
        json += relation_ok ? "true" : "false";
        json += ",\n  \"isotropy\": [";
        for (std::size_t i = 0; i < isotropy.size(); ++i) {
            json += (i ? ", " : "");
            json += isotropy[i] ? "true" : "false";
        }
        json += "]\n}\n";
        sink.write(json);
    }
    return relation_ok ? kExitOk : kExitCheckFailure;
}

int cmd_check_w(const std::string& matrix_file, const std::string& pattern_name,
                const JsonSink& sink) {
    auto tag = q4v::parse_w_pattern(pattern_name);
    if (!tag) {
        std::cerr << "unknown pattern: " << pattern_name << "\n";
        return kExitInputError;
    }
    q4v::ScalarMatrix m = q4v::load_matrix(matrix_file);
    if (!m.is_symmetric()) {
        std::cerr << "input matrix is not symmetric\n";
        return kExitInputError;
    }
    if (!m.is_unitary()) {
        std::cerr << "input matrix is not unitary\n";
        return kExitInputError;
    }
    q4v::SymmetricUnitary w(std::move(m));
    q4v::WPatternReport report = q4v::w_pattern_check(w, *tag);
    for (const auto& item : report.items) {
        std::cout << (item.pass ? "  [PASS] " : "  [FAIL] ") << item.constraint << "\n";
    }
    int mm = (*tag == q4v::WPatternTag::P413) ? 3 : 2;
    std::cout << "fundamental identity residuals (m=" << mm << "):";
    std::array<q4v::BiPoly, 3> residuals = q4v::fundamental_identity_from_w(w.entries, mm);
    std::string statuses;
    for (std::size_t i = 0; i < 3; ++i) {
        std::string status = residuals[i].is_zero() ? "zero" : "nonzero";
        std::cout << " " << status;
        statuses += (i ? ", \"" : "\"") + status + "\"";
    }
    std::cout << "\n";
    if (!sink.path.empty()) {
        sink.write(std::string("{\n  \"pattern\": \"") + q4v::to_string(*tag) +
                   "\",\n  \"pattern_pass\": " + (report.all_pass ? "true" : "false") +
                   ",\n  \"fundamental\": [" + statuses + "]\n}\n");
    }
    return report.all_pass ? kExitOk : kExitCheckFailure;
}

int cmd_mixed_pair(const std::string& seed_file, std::string out_file, const JsonSink& sink) {
    q4v::VectorCurve seed = q4v::load_curve(seed_file);
    q4v::VectorCurve f1 = q4v::mixed_pair_seed(seed);
    if (out_file.empty()) {
        out_file = std::filesystem::path(seed_file).stem().string() + "_f1.json";
    }
    q4v::save_curve(out_file, f1);
    bool quadric_ok = q4v::quadric_residual(f1).is_zero();
    std::vector<bool> isotropy = q4v::isotropy_conditions(f1, 2);
    std::cout << "wrote " << out_file << "\n";
    std::cout << (quadric_ok ? "  [PASS] " : "  [FAIL] ") << "quadric residual\n";
    bool membership = isotropy[0] && isotropy[1];
    std::cout << (membership ? "  [PASS] " : "  [FAIL] ") << "isotropy (";
    for (std::size_t i = 0; i < isotropy.size(); ++i) {
        std::cout << (i ? ", " : "") << (isotropy[i] ? "true" : "false");
    }
    std::cout << ")\n";
    if (!sink.path.empty()) {
        std::string json = std::string("{\n  \"output\": \"") + out_file +
                           "\",\n  \"quadric_pass\": " + (quadric_ok ? "true" : "false") +
                           ",\n  \"isotropy\": [";
        for (std::size_t i = 0; i < isotropy.size(); ++i) {
            json += (i ? ", " : "");
            json += isotropy[i] ? "true" : "false";
        }
        json += "]\n}\n";
        sink.write(json);
    }
    return (quadric_ok && membership) ? kExitOk : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of constant-curvature minimal two-spheres in the "
                 "complex hyperquadric Q4 = G(2,6;R)"};
    app.require_subcommand(1);

    std::string fixtures_dir = "fixtures";
    std::string json_path;
    unsigned jobs = 1;

    auto* verify = app.add_subcommand("verify", "Run the bundled fixture verification suite");
    std::string fixture_id;
    bool verify_all = false;
    verify->add_option("id", fixture_id, "Fixture id");
    verify->add_flag("--all", verify_all, "Verify every fixture in the catalog");
    verify->add_option("--fixtures", fixtures_dir, "Fixture directory");
    verify->add_option("--json", json_path, "Write a machine-readable report to this path");
    verify->add_option("--jobs", jobs, "Parallel fixture workers");

    auto* curvature = app.add_subcommand("curvature", "Gauss curvature of an assembled pair");
    std::string curve_file, mode = "real-pair", partner_file;
    curvature->add_option("curve", curve_file, "Curve JSON file")->required();
    curvature->add_option("--mode", mode, "real-pair | sum-pair");
    curvature->add_option("--partner", partner_file, "Partner curve for sum-pair mode");
    curvature->add_option("--json", json_path, "Write a machine-readable report to this path");

    auto* sequence = app.add_subcommand("sequence", "Degrees and isotropy of a holomorphic curve");
    std::string seq_file;
    int steps = 2;
    sequence->add_option("curve", seq_file, "Curve JSON file")->required();
    sequence->add_option("--steps", steps, "Isotropy order to test");
    sequence->add_option("--json", json_path, "Write a machine-readable report to this path");

    auto* checkw = app.add_subcommand("check-w", "Check a symmetric unitary against a pattern");
    std::string matrix_file, pattern_name;
    checkw->add_option("matrix", matrix_file, "Matrix JSON file")->required();
    checkw->add_option("--pattern", pattern_name, "P413 | P415 | P417")->required();
    checkw->add_option("--json", json_path, "Write a machine-readable report to this path");

    auto* mixed = app.add_subcommand("mixed-pair", "Build the quadric curve of a polynomial seed");
    std::string seed_file, out_file;
    mixed->add_option("seed", seed_file, "Seed curve JSON file")->required();
    mixed->add_option("--out", out_file, "Output path for the constructed curve");
    mixed->add_option("--json", json_path, "Write a machine-readable report to this path");

    CLI11_PARSE(app, argc, argv);

    JsonSink sink{json_path};
    try {
        if (verify->parsed()) {
            if (!verify_all && fixture_id.empty()) {
                std::cerr << "verify needs a fixture id or --all\n";
                return kExitInputError;
            }
            return cmd_verify(fixtures_dir, fixture_id, verify_all, sink, jobs);
        }
        if (curvature->parsed()) return cmd_curvature(curve_file, mode, partner_file, sink);
        if (sequence->parsed()) return cmd_sequence(seq_file, steps, sink);
        if (checkw->parsed()) return cmd_check_w(matrix_file, pattern_name, sink);
        if (mixed->parsed()) return cmd_mixed_pair(seed_file, out_file, sink);
    } catch (const q4v::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
