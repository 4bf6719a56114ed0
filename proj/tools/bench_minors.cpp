// Timing comparison for minor enumeration: serial reference vs the
// parallel path used by minor_ideal. Prints one line per case plus a
// mismatch count (which must stay zero).
#include <chrono>
#include <iostream>

#include "bruns/invariants.hpp"

using namespace bruns;
using clock_type = std::chrono::steady_clock;

static double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

int main(int argc, char** argv) {
    int size = argc > 1 ? std::atoi(argv[1]) : 7;
    int degree = argc > 2 ? std::atoi(argv[2]) : 2;
    uint64_t seed = argc > 3 ? std::strtoull(argv[3], nullptr, 10) : 42;

    Ring ring = make_ring(32003, {"x", "y", "z"});
    RandomSource rng(seed);
    int mismatches = 0;
    for (int n = 3; n <= size; ++n) {
        PolyMatrix f(ring, FreeModuleSpec(n), FreeModuleSpec(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                f.at(i, j) = random_form(ring, degree, rng, true);
        int t = n / 2 + 1;

        auto t0 = clock_type::now();
        IdealData serial = minor_ideal_serial(f, t);
        double serial_ms = ms_since(t0);

        t0 = clock_type::now();
        IdealData parallel = minor_ideal(f, t);
        double parallel_ms = ms_since(t0);

        bool same = serial.generators.size() == parallel.generators.size();
        if (same)
            for (size_t k = 0; k < serial.generators.size(); ++k)
                same = same && serial.generators[k] == parallel.generators[k];
        if (!same) ++mismatches;

        std::cout << n << "x" << n << " t=" << t << " minors=" << serial.generators.size()
                  << " serial=" << serial_ms << "ms parallel=" << parallel_ms
                  << "ms speedup=" << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
                  << (same ? "" : "  MISMATCH") << '\n';
    }
    std::cout << "mismatches: " << mismatches << '\n';
    return mismatches == 0 ? 0 : 1;
}
