#include "mvone/selftest.hpp"

#include "mvone/certifier.hpp"
#include "mvone/errors.hpp"
#include "mvone/essentiality.hpp"
#include "mvone/generators.hpp"
#include "mvone/solver.hpp"

#include <atomic>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mvone {

namespace {

// Each iteration reseeds from (seed, index) so results do not depend on the
// scheduling of the parallel loop.
Rng seeded(std::uint64_t seed, std::uint64_t idx) { return Rng(seed * 0x9e3779b97f4a7c15ull + idx); }

bool suite_oracle(std::uint64_t seed, bool verbose, std::ostream& out) {
    std::atomic<int> bad{0};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < 60; ++i) {
        Rng rng = seeded(seed, static_cast<std::uint64_t>(i));
        const int n = 2 + i % 2;
        PolytopeTuple a = random_tuple(n, 4, 3, rng);
        if (mixed_volume(a) != mixed_volume_oracle(a)) ++bad;
        if (mixed_volume(a) != mixed_volume_serial(a)) ++bad;
    }
    if (verbose) out << "  oracle agreement: " << (bad == 0 ? "ok" : "failed") << "\n";
    return bad == 0;
}

bool suite_zero_criterion(std::uint64_t seed, bool verbose, std::ostream& out) {
    std::atomic<int> bad{0};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < 60; ++i) {
        Rng rng = seeded(seed ^ 0xa5a5a5a5ull, static_cast<std::uint64_t>(i));
        const int n = 2 + i % 2;
        PolytopeTuple a = random_tuple(n, 3, 2, rng);
        const bool zero = mixed_volume(a) == 0;
        auto rep = minimal_deficient_subtuple(a);
        const bool witness = rep && rep->deficiency > 0;
        if (zero != witness) ++bad;
    }
    if (verbose) out << "  zero criterion: " << (bad == 0 ? "ok" : "failed") << "\n";
    return bad == 0;
}

bool suite_certify(std::uint64_t seed, bool verbose, std::ostream& out) {
    std::atomic<int> bad{0};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < 40; ++i) {
        Rng rng = seeded(seed ^ 0x5c5c5c5cull, static_cast<std::uint64_t>(i));
        const int n = 2 + i % 3;
        PolytopeTuple a = random_essential_mv1_tuple(n, rng);
        try {
            UnitCertificate c = certify_unit(a);
            if (!verify_certificate(a, c) || mixed_volume(a) != 1) ++bad;
        } catch (const std::exception&) {
            ++bad;
        }
    }
    if (verbose) out << "  certificate round trip: " << (bad == 0 ? "ok" : "failed") << "\n";
    return bad == 0;
}

bool suite_negatives(std::uint64_t seed, bool verbose, std::ostream& out) {
    std::atomic<int> bad{0};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < 20; ++i) {
        Rng rng = seeded(seed ^ 0x3c3c3c3cull, static_cast<std::uint64_t>(i));
        const int n = 2 + i % 3;
        PolytopeTuple a = random_essential_mv2_tuple(n, rng);
        try {
            certify_unit(a);
            ++bad;  // must not certify a mixed-volume-2 tuple
        } catch (const NotMixedVolumeOne&) {
        } catch (const std::exception&) {
            ++bad;
        }
    }
    if (verbose) out << "  negative detection: " << (bad == 0 ? "ok" : "failed") << "\n";
    return bad == 0;
}

bool suite_solver(std::uint64_t seed, bool verbose, std::ostream& out) {
    std::atomic<int> bad{0};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < 30; ++i) {
        const int n = 2 + i % 2;
        bool done = false;
        for (std::uint64_t attempt = 0; attempt < 8 && !done; ++attempt) {
            Rng rng = seeded(seed ^ 0x77777777ull, static_cast<std::uint64_t>(i) * 131 + attempt);
            LaurentSystem s = random_mv1_system(n, rng);
            try {
                auto [p, plan] = solve_unique(s);
                if (!verify_solution(s, p)) ++bad;
                done = true;
            } catch (const SingularBlock&) {  // non-generic draw; redraw
            } catch (const ZeroCoordinate&) {
            } catch (const std::exception&) {
                ++bad;
                done = true;
            }
        }
        if (!done) ++bad;  // eight degenerate draws in a row is a bug
    }
    if (verbose) out << "  solver exactness: " << (bad == 0 ? "ok" : "failed") << "\n";
    return bad == 0;
}

}  // namespace

bool run_selftest(std::uint64_t seed, bool verbose, std::ostream& out) {
    bool ok = true;
    struct Suite {
        const char* name;
        bool (*fn)(std::uint64_t, bool, std::ostream&);
    };
    const Suite suites[] = {
        {"mixed volume oracle", suite_oracle},
        {"zero criterion", suite_zero_criterion},
        {"certificates", suite_certify},
        {"negative detection", suite_negatives},
        {"solver", suite_solver},
    };
    for (const auto& s : suites) {
        const bool pass = s.fn(seed, verbose, out);
        out << "selftest " << s.name << ": " << (pass ? "pass" : "FAIL") << "\n";
        ok = ok && pass;
    }
    return ok;
}

}  // namespace mvone
