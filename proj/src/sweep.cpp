#include "skewcm/sweep.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace skewcm {

namespace {

SignMatrix random_signs(int n, std::uint64_t seed, std::uint64_t index) {
    // Per-index stream keyed on (seed, index): splitmix64 scramble, then
    // one engine draw per pair. Identical for any work partition.
    std::uint64_t z = seed ^ (index + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    std::mt19937_64 rng(z ^ (z >> 31));
    SignMatrix m(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng() & 1u) m.set_sign(i, j, -1);
    return m;
}

void tally_one(const SweepOptions& opt, std::uint64_t index, SweepCounts& acc) {
    const SignMatrix eps = sweep_input(opt, index);
    ++acc.total;

    if (opt.classify_only) {
        const Classification c =
            opt.variant == Variant::A1 ? classify_a1(eps) : classify_a_infinity(eps);
        ++acc.cases[case_name(c.case_kind)];
        ++acc.r_histogram[c.r];
        ++acc.passed;
        return;
    }

    const AgreementReport rep = agreement_check(eps, opt.variant, opt.with_oracle);
    if (rep.matrix_route) {
        ++acc.cases[case_name(rep.matrix_route->case_kind)];
        ++acc.r_histogram[rep.matrix_route->r];
    }
    if (rep.agree) {
        ++acc.passed;
    } else if (acc.failures.size() < opt.max_failures) {
        acc.failures.push_back({index, rep.failures});
    }
}

void merge(SweepCounts& into, SweepCounts&& part, std::size_t max_failures) {
    into.total += part.total;
    into.passed += part.passed;
    for (const auto& [k, v] : part.cases) into.cases[k] += v;
    for (const auto& [k, v] : part.r_histogram) into.r_histogram[k] += v;
    into.failures.insert(into.failures.end(), part.failures.begin(), part.failures.end());
    std::sort(into.failures.begin(), into.failures.end(),
              [](const SweepFailure& a, const SweepFailure& b) { return a.index < b.index; });
    if (into.failures.size() > max_failures) into.failures.resize(max_failures);
}

} // namespace

SignMatrix sweep_input(const SweepOptions& opt, std::uint64_t index) {
    return opt.exhaustive ? signs_from_index(opt.n, index) : random_signs(opt.n, opt.seed, index);
}

std::uint64_t sweep_size(const SweepOptions& opt) {
    if (!opt.exhaustive) return opt.samples;
    const std::uint64_t pairs = pair_count(opt.n);
    if (pairs > 62) throw std::invalid_argument("sweep_size: exhaustive space too large");
    return std::uint64_t{1} << pairs;
}

SweepCounts sweep_serial(const SweepOptions& opt) {
    SweepCounts acc;
    const std::uint64_t total = sweep_size(opt);
    for (std::uint64_t i = 0; i < total; ++i) tally_one(opt, i, acc);
    return acc;
}

SweepCounts sweep_parallel(const SweepOptions& opt) {
    const std::uint64_t total = sweep_size(opt);
#ifdef _OPENMP
    int workers = opt.workers > 0 ? opt.workers : omp_get_max_threads();
    if (static_cast<std::uint64_t>(workers) > total && total > 0) workers = static_cast<int>(total);
    if (workers < 1) workers = 1;

    std::vector<SweepCounts> parts(static_cast<std::size_t>(workers));
#pragma omp parallel num_threads(workers)
    {
        const int t = omp_get_thread_num();
        // Contiguous slice of the index space.
        const std::uint64_t lo = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(workers);
        const std::uint64_t hi = total * (static_cast<std::uint64_t>(t) + 1) / static_cast<std::uint64_t>(workers);
        for (std::uint64_t i = lo; i < hi; ++i) tally_one(opt, i, parts[static_cast<std::size_t>(t)]);
    }

    SweepCounts acc;
    for (auto& part : parts) merge(acc, std::move(part), opt.max_failures);
    return acc;
#else
    (void)total;
    return sweep_serial(opt);
#endif
}

} // namespace skewcm
