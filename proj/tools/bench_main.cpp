// Compares the serial reference sweep against the OpenMP one on the
// exhaustive verification workload and prints a small timing table.
// The two drivers must report identical tallies.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "skewcm/sweep.hpp"

using namespace skewcm;

namespace {

double run_ms(const SweepOptions& opt, bool parallel, SweepCounts& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = parallel ? sweep_parallel(opt) : sweep_serial(opt);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv) {
    int max_n = 6;
    if (argc > 1) max_n = std::stoi(argv[1]);

    std::cout << "n        inputs   serial_ms   omp2_ms   omp4_ms   match\n";
    for (int n = 4; n <= max_n; ++n) {
        SweepOptions opt;
        opt.n = n;
        opt.variant = Variant::AInfinity;
        opt.exhaustive = true;

        SweepCounts serial, par2, par4;
        const double t_serial = run_ms(opt, false, serial);
        opt.workers = 2;
        const double t2 = run_ms(opt, true, par2);
        opt.workers = 4;
        const double t4 = run_ms(opt, true, par4);

        const bool match = serial == par2 && serial == par4;
        std::printf("%-8d %-8llu %-11.1f %-9.1f %-9.1f %s\n", n,
                    static_cast<unsigned long long>(serial.total), t_serial, t2, t4,
                    match ? "yes" : "NO");
        if (!match) return 1;
        if (serial.passed != serial.total) {
            std::cout << "verification failures at n=" << n << "\n";
            return 1;
        }
    }
    return 0;
}
