#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "skewcm/verify.hpp"

namespace skewcm {

// One verification pass over a family of sign matrices of a fixed size:
// exhaustive over all 2^(n(n-1)/2) of them, or seeded random samples.
// Inputs are independent, so the parallel driver splits the index space
// into contiguous slices; tallies merge by addition and kept failures
// are the globally first few by input index, making the result
// identical to the serial reference for every worker count.
struct SweepOptions {
    int n = 4;
    Variant variant = Variant::AInfinity;
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool with_oracle = true;
    bool classify_only = false; // tally verdicts without cross-checking
    int workers = 0;            // parallel driver only; 0 = all cores
    std::size_t max_failures = 8;
};

struct SweepFailure {
    std::uint64_t index = 0;
    std::vector<std::string> reasons;
    bool operator==(const SweepFailure&) const = default;
};

struct SweepCounts {
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::map<std::string, std::uint64_t> cases;  // case name -> count
    std::map<int, std::uint64_t> r_histogram;
    std::vector<SweepFailure> failures; // ascending by index, capped
    bool operator==(const SweepCounts&) const = default;
};

// The sign matrix a sweep examines at `index` (exhaustive: the
// lexicographic code; sampled: seeded per-index randomness, stable
// across worker counts).
SignMatrix sweep_input(const SweepOptions& opt, std::uint64_t index);
std::uint64_t sweep_size(const SweepOptions& opt);

SweepCounts sweep_serial(const SweepOptions& opt);
SweepCounts sweep_parallel(const SweepOptions& opt);

} // namespace skewcm
