#pragma once

#include <optional>
#include <string>
#include <vector>

#include "colpart/colour.hpp"

namespace colpart {

struct ClaimParams {
    int n = 0;          // 0 = claim default
    int order = 0;      // series truncation / weight bound, 0 = claim default
    std::string table = "mp";  // "mp", "alt", or a JSON file path
    bool force = false;        // ignore the enumeration node budget
    bool corrupt = false;      // test mode: perturb one coefficient before comparing
    unsigned long long node_budget = 100'000'000ull;
};

struct Mismatch {
    int q = 0;
    std::string monomial;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string claim;
    int n = 0;
    int order = 0;
    std::string table;
    bool pass = false;
    long long checked_terms = 0;
    std::optional<Mismatch> first_mismatch;
    double wall_seconds = 0.0;
    std::string detail;  // free-form notes (sub-checks, oracles used)

    std::string to_json() const;  // schema_version 1
    std::string to_text() const;
};

/// Raised when an enumeration would exceed the configured node budget.
struct InfeasibleBounds : std::runtime_error {
    explicit InfeasibleBounds(const std::string& what) : std::runtime_error(what) {}
};

std::vector<std::string> claim_ids();

/// Runs one verification claim. Unknown ids throw std::invalid_argument;
/// bounds whose enumeration blows the node budget throw InfeasibleBounds
/// (unless params.force is set).
VerificationReport run_claim(const std::string& id, const ClaimParams& params);

/// Resolves "mp"/"alt" or a JSON file of shape
/// {"n": 3, "delta": {"k,l": v, ...}, "gamma": {"k1,l1|k2,l2": v, ...}};
/// the table is validated and rejected with the violation list otherwise.
DeltaGammaTable load_table(const std::string& name_or_path, int n);

std::string table_to_json(const DeltaGammaTable& table);

}  // namespace colpart
