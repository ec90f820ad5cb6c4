#include "mvone/generators.hpp"
#include "mvone/mixed_volume.hpp"

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

// Compares the OpenMP-parallel mixed volume against the serial reference on
// a batch of random tuples and on batches processed as a parallel corpus.

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 42;
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: disabled in this build\n";
#endif
    for (int n = 3; n <= 4; ++n) {
        mvone::Rng rng(seed + static_cast<std::uint64_t>(n));
        std::vector<mvone::PolytopeTuple> batch;
        for (int i = 0; i < 20; ++i) batch.push_back(mvone::random_tuple(n, 6, 4, rng));

        auto t0 = std::chrono::steady_clock::now();
        std::vector<mvone::Int> serial;
        for (const auto& a : batch) serial.push_back(mvone::mixed_volume_serial(a));
        const double ts = seconds_since(t0);

        t0 = std::chrono::steady_clock::now();
        std::vector<mvone::Int> parallel(batch.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t i = 0; i < batch.size(); ++i) parallel[i] = mvone::mixed_volume(batch[i]);
        const double tp = seconds_since(t0);

        bool agree = serial == parallel;
        std::cout << "n=" << n << "  serial " << ts << "s  parallel " << tp << "s  speedup "
                  << (tp > 0 ? ts / tp : 0.0) << "  results " << (agree ? "match" : "MISMATCH")
                  << "\n";
        if (!agree) return 1;
    }
    return 0;
}
