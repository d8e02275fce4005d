#include "skewcm/verify.hpp"

namespace skewcm {

AgreementReport agreement_check(const SignMatrix& eps, Variant variant, bool with_oracle) {
    AgreementReport rep;
    try {
        if (variant == Variant::AInfinity) {
            const Classification m = classify_a_infinity(eps);
            const Classification g = classify_a_infinity_via_reduction(eps);
            rep.matrix_route = m;
            rep.reduction_route = g;

            if (m.case_kind != g.case_kind)
                rep.failures.push_back("case kind: matrix route says " + std::string(case_name(m.case_kind)) +
                                       ", reduction route says " + case_name(g.case_kind));
            if (m.r != g.r)
                rep.failures.push_back("r: matrix route says " + std::to_string(m.r) + ", reduction route says " +
                                       std::to_string(g.r));
            if (m.factor_exponent != g.factor_exponent)
                rep.failures.push_back("factor count: matrix route says " + m.factor_count() +
                                       ", reduction route says " + g.factor_count());
            if (m.case_kind == CaseKind::LambdaPower && m.r < 1)
                rep.failures.push_back("lambda case with r < 1");

            if (with_oracle) {
                OracleReport oracle = verify_against_classification(eps, m);
                rep.failures.insert(rep.failures.end(), oracle.failures.begin(), oracle.failures.end());
                rep.oracle = std::move(oracle);
            }
        } else {
            const Classification m = classify_a1(eps);
            rep.matrix_route = m;
            // The algebra cross-check needs at least one generator.
            if (with_oracle && eps.size() >= 2) {
                OracleReport oracle = verify_against_classification(eps, m);
                rep.failures.insert(rep.failures.end(), oracle.failures.begin(), oracle.failures.end());
                rep.oracle = std::move(oracle);
            }
        }
    } catch (const std::exception& e) {
        rep.failures.push_back(std::string("route raised: ") + e.what());
    }
    rep.agree = rep.failures.empty();
    return rep;
}

} // namespace skewcm
