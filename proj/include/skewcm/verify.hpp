#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewcm/classify.hpp"
#include "skewcm/clifford.hpp"

namespace skewcm {

// All routes run against one input, with every disagreement surfaced
// as a failure string rather than a throw.
struct AgreementReport {
    bool agree = false;
    std::optional<Classification> matrix_route;
    std::optional<Classification> reduction_route; // AInfinity only
    std::optional<OracleReport> oracle;
    std::vector<std::string> failures;
};

// AInfinity: matrix route vs reduction route (case kind, r, factor
// count), plus the oracle cross-check when requested. A1: the
// semisimple classification checked against the oracle.
AgreementReport agreement_check(const SignMatrix& eps, Variant variant = Variant::AInfinity,
                                bool with_oracle = true);

} // namespace skewcm
