#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace bhdeco {

enum class CheckStatus { pass, warn, fail };

std::string_view to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct VerifyOptions {
    /// Relative perturbation applied to zeta(3) in the closed-form side of the
    /// saturation check. Zero in normal runs; used to confirm the check bites.
    double zeta3_relative_perturbation = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(std::string_view name) const;
};

/// Cross-checks every closed form against its independent route and the
/// published reference values. Documented discrepancies come back as WARN.
VerifyReport run_verification(const VerifyOptions& opts = {});

}  // namespace bhdeco
