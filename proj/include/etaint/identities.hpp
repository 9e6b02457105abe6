#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "etaint/types.hpp"

namespace etaint {

enum class CheckKind { equality, inequality, warn_only, skipped };

const char* to_string(CheckKind k);

struct RunConfig {
    double tol = 1e-10;  // quadrature tolerance ceiling
    std::int64_t max_terms = 1000000;
    int jobs = 1;
};

// One evaluated instance of an identity. For inequalities the claim is
// lhs < rhs and margin = rhs - lhs.
struct CheckCase {
    std::string label;
    Complex lhs;
    Complex rhs;
    double err_budget = 0.0;  // summed error estimates of both sides
};

struct IdentityCheck {
    std::string id;
    std::string description;
    std::string anchor;
    CheckKind kind = CheckKind::equality;
    double tol = 1e-9;
    std::vector<std::string> tags;
    std::function<std::vector<CheckCase>(const RunConfig&)> evaluate;
    std::string note;  // fixed remark carried into the report
};

struct CaseResult {
    std::string label;
    Complex lhs;
    Complex rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double margin = 0.0;
    double err_budget = 0.0;
    bool pass = false;
};

struct CheckResult {
    std::string id;
    std::string description;
    std::string anchor;
    CheckKind kind = CheckKind::equality;
    // worst case
    Complex lhs_value;
    Complex rhs_value;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    double wall_time = 0.0;
    double err_budget = 0.0;
    std::string note;
    std::vector<CaseResult> cases;

    // counted toward the suite verdict
    bool gating() const { return kind == CheckKind::equality || kind == CheckKind::inequality; }
    std::string status() const;
};

const std::vector<IdentityCheck>& registry();
const IdentityCheck& find_check(const std::string& id);

// A check matches when the filter equals one of its tags, or is a prefix of
// its id not followed by a digit ("prop1" selects prop1_* but not prop10a).
bool matches_filter(const IdentityCheck& c, const std::string& filter);
std::vector<const IdentityCheck*> select_checks(const std::optional<std::string>& filter);

CheckResult run_check(const std::string& id, const RunConfig& cfg = {});
CheckResult run_check(const IdentityCheck& c, const RunConfig& cfg = {});
// Results are sorted by id whatever the job count.
std::vector<CheckResult> run_all(const std::optional<std::string>& filter,
                                 const RunConfig& cfg = {});

bool suite_passed(const std::vector<CheckResult>& results);

}  // namespace etaint
