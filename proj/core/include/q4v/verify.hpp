#pragma once

#include <string>
#include <vector>

#include "q4v/serialize.hpp"

namespace q4v {

struct CheckResult {
    std::string name;
    std::string citation;
    std::string expected;
    std::string computed;
    std::string witness;  // failure evidence, empty on pass
    bool pass = false;
};

struct VerificationReport {
    std::string fixture_id;
    std::string source;
    std::vector<CheckResult> checks;
    bool all_pass = true;
};

/// A fixture record together with its loaded data files.
struct Fixture {
    FixtureRecord record;
    std::optional<VectorCurve> curve;
    std::optional<VectorCurve> partner;
    std::optional<ScalarMatrix> unitary;
    std::optional<ScalarMatrix> w;
};

Fixture load_fixture(const std::string& dir, const FixtureRecord& record);

/// Runs every check the fixture's kind and expected records call for.
/// Exceptions from precondition violations become failed checks, never skips.
VerificationReport run_fixture_checks(const Fixture& fixture);

std::string report_to_text(const VerificationReport& report);
std::string reports_to_json(const std::vector<VerificationReport>& reports, int indent = 2);

}  // namespace q4v
