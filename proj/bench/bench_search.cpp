// Compares the three enumeration kernels on growing boxes: the plain
// odometer reference, the pruned search run serially, and the pruned
// search with its parallel outer loop. Results must agree exactly.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "evensets/search.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Case {
    evensets::Ambient ambient;
    std::size_t k;
    long long bound;
    bool run_reference; // the odometer walks the whole box: keep it off the big ones
};

} // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--quick") quick = true;

    std::vector<Case> cases = {
        {evensets::Ambient::Plane, 6, 2, true},
        {evensets::Ambient::Quadric, 6, 2, true},
        {evensets::Ambient::Plane, 6, 3, true},
        {evensets::Ambient::Plane, 8, 2, true},
        {evensets::Ambient::Plane, 10, 2, false},
        {evensets::Ambient::Plane, 11, 3, false},
    };
    if (quick) cases.resize(3);

    std::cout << "ambient  k  bound |   classes | reference ms |  serial ms | parallel ms\n";
    for (const auto& c : cases) {
        evensets::SurfaceLattice lat = evensets::make_lattice(c.ambient, c.k);

        auto t0 = Clock::now();
        std::vector<evensets::DivClass> serial =
            evensets::enumerate_neg4_classes(lat, c.bound, false);
        double serial_ms = ms_since(t0);

        t0 = Clock::now();
        std::vector<evensets::DivClass> parallel =
            evensets::enumerate_neg4_classes(lat, c.bound, true);
        double parallel_ms = ms_since(t0);

        double reference_ms = -1.0;
        if (c.run_reference) {
            t0 = Clock::now();
            std::vector<evensets::DivClass> reference =
                evensets::enumerate_neg4_classes_reference(lat, c.bound);
            reference_ms = ms_since(t0);
            if (reference != serial) {
                std::cerr << "MISMATCH: reference and pruned kernels disagree\n";
                return 1;
            }
        }
        if (serial != parallel) {
            std::cerr << "MISMATCH: serial and parallel kernels disagree\n";
            return 1;
        }

        std::printf("%-8s %2zu  %5lld | %9zu | ", c.ambient == evensets::Ambient::Plane ? "plane" : "quadric",
                    c.k, c.bound, serial.size());
        if (reference_ms < 0)
            std::printf("%12s | ", "skipped");
        else
            std::printf("%12.1f | ", reference_ms);
        std::printf("%10.1f | %11.1f\n", serial_ms, parallel_ms);
    }
    return 0;
}
