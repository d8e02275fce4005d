#pragma once

#include <string>
#include <vector>

#include "skewcm/reduction.hpp"
#include "skewcm/sign_matrix.hpp"

namespace skewcm {

enum class Variant { A1, AInfinity };
enum class CaseKind { SemisimplePower, LambdaPower, GammaPower };
enum class CmType { Finite, CountablyInfinite };

// Decimal rendering of 2^exponent. Factor counts are always powers of
// two, so an exponent plus this renderer stands in for a big integer.
std::string pow2_decimal(unsigned exponent);

struct Classification {
    Variant variant = Variant::AInfinity;
    CaseKind case_kind = CaseKind::GammaPower;
    int r = 0;                   // nullity of the bordered matrix
    unsigned factor_exponent = 0; // factor count = 2^factor_exponent
    CmType cm_type = CmType::CountablyInfinite;
    unsigned cm_exponent = 0;    // Finite count = 2^cm_exponent
    bool isolated_singularity = false;

    std::string factor_count() const { return pow2_decimal(factor_exponent); }
    std::string cm_count() const { return pow2_decimal(cm_exponent); }
    // e.g. "D^b(mod Gamma^2)"; with unicode, Greek letters instead.
    std::string category(bool unicode = false) const;

    bool operator==(const Classification&) const = default;
};

const char* case_name(CaseKind k);
const char* variant_name(Variant v);

// Case split on whether column n of the bordered matrix lies in the
// span of the remaining columns: yes -> LambdaPower with 2^(r-1)
// factors, no -> GammaPower with 2^r factors. Requires n >= 2.
Classification classify_a_infinity(const SignMatrix& eps);

// Same verdict derived from the switching pipeline alone: r = beta - 1,
// LambdaPower when vertex n ends isolated (2^(beta-2) factors),
// GammaPower when it ends on an isolated edge (2^(beta-1) factors).
Classification classify_a_infinity_via_reduction(const SignMatrix& eps);

// Semisimple case: 2^r simple factors, finite type, isolated.
Classification classify_a1(const SignMatrix& eps);

} // namespace skewcm
