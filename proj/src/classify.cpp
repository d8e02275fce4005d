#include "skewcm/classify.hpp"

#include <stdexcept>

namespace skewcm {

std::string pow2_decimal(unsigned exponent) {
    std::string digits = "1"; // little-endian
    for (unsigned e = 0; e < exponent; ++e) {
        int carry = 0;
        for (char& c : digits) {
            const int d = (c - '0') * 2 + carry;
            c = static_cast<char>('0' + d % 10);
            carry = d / 10;
        }
        if (carry) digits.push_back(static_cast<char>('0' + carry));
    }
    return {digits.rbegin(), digits.rend()};
}

const char* case_name(CaseKind k) {
    switch (k) {
        case CaseKind::SemisimplePower: return "semisimple_power";
        case CaseKind::LambdaPower: return "lambda_power";
        case CaseKind::GammaPower: return "gamma_power";
    }
    return "?";
}

const char* variant_name(Variant v) {
    return v == Variant::A1 ? "a1" : "a_infinity";
}

std::string Classification::category(bool unicode) const {
    std::string base;
    switch (case_kind) {
        case CaseKind::SemisimplePower: base = "k"; break;
        case CaseKind::LambdaPower: base = unicode ? "Λ" : "Lambda"; break;
        case CaseKind::GammaPower: base = unicode ? "Γ" : "Gamma"; break;
    }
    std::string s = "D^b(mod " + base;
    if (factor_exponent > 0) s += "^" + pow2_decimal(factor_exponent);
    s += ")";
    return s;
}

Classification classify_a_infinity(const SignMatrix& eps) {
    const int n = eps.size();
    if (n < 2) throw std::invalid_argument("classify_a_infinity: need n >= 2");

    const F2Matrix d = delta(graph_from_signs(eps));
    const int r = static_cast<int>(d.nullity());
    const bool span = column_in_span(d, static_cast<std::size_t>(n)).in_span;

    Classification c;
    c.variant = Variant::AInfinity;
    c.r = r;
    if (span) {
        if (r < 1) throw std::logic_error("classify_a_infinity: column in span forces r >= 1");
        c.case_kind = CaseKind::LambdaPower;
        c.factor_exponent = static_cast<unsigned>(r - 1);
    } else {
        c.case_kind = CaseKind::GammaPower;
        c.factor_exponent = static_cast<unsigned>(r);
    }
    c.cm_type = CmType::CountablyInfinite;
    c.isolated_singularity = false;
    return c;
}

Classification classify_a_infinity_via_reduction(const SignMatrix& eps) {
    const int n = eps.size();
    if (n < 2) throw std::invalid_argument("classify_a_infinity_via_reduction: need n >= 2");

    const ReductionReport rep = full_reduction(eps);
    const int beta = rep.shape.beta;

    Classification c;
    c.variant = Variant::AInfinity;
    c.r = beta - 1;
    if (rep.last_status == LastVertexStatus::IsolatedVertex) {
        if (beta < 2) throw std::logic_error("classify_a_infinity_via_reduction: isolated last vertex forces beta >= 2");
        c.case_kind = CaseKind::LambdaPower;
        c.factor_exponent = static_cast<unsigned>(beta - 2);
    } else {
        c.case_kind = CaseKind::GammaPower;
        c.factor_exponent = static_cast<unsigned>(beta - 1);
    }
    c.cm_type = CmType::CountablyInfinite;
    c.isolated_singularity = false;
    return c;
}

Classification classify_a1(const SignMatrix& eps) {
    const F2Matrix d = delta(graph_from_signs(eps));
    const int r = static_cast<int>(d.nullity());

    Classification c;
    c.variant = Variant::A1;
    c.case_kind = CaseKind::SemisimplePower;
    c.r = r;
    c.factor_exponent = static_cast<unsigned>(r);
    c.cm_type = CmType::Finite;
    c.cm_exponent = static_cast<unsigned>(r);
    c.isolated_singularity = true;
    return c;
}

} // namespace skewcm
