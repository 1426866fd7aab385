// Benchmark: OpenMP trial loop against the serial reference on a type-1
// experiment at the k=40 instance. Prints one row per thread count.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "bdet/detectors.hpp"
#include "bdet/extremal.hpp"
#include "bdet/montecarlo.hpp"

using namespace bdet;
namespace mcx = bdet::mc;

namespace {

double time_run(const mcx::Experiment& exp, const TestSpec& test, const ProblemSpec& spec,
                std::uint64_t trials, int threads, std::uint64_t* count)
{
    const auto t0 = std::chrono::steady_clock::now();
    mcx::MCReport rep;
    if (threads == 1) {
        rep = mcx::run_serial(exp, test, spec, trials, 99);
    } else {
        mcx::RunOptions opt;
        opt.threads = threads;
        rep = mcx::run(exp, test, spec, trials, 99, opt);
    }
    const auto t1 = std::chrono::steady_clock::now();
    *count = rep.rejections;
    return std::chrono::duration<double>(t1 - t0).count();
}

} // namespace

int main(int argc, char** argv)
{
    std::uint64_t trials = 20000;
    if (argc > 1)
        trials = std::strtoull(argv[1], nullptr, 10);

    const ProblemSpec spec(0.004363, 1.0, 1.0, 3.0 / 3200.0, 0.05);
    const ExtremalWeights w = build_weights(spec);
    const TestSpec test = make_plain_test(w, spec);
    const mcx::Experiment exp = mcx::Experiment::type1();

    std::uint64_t ref_count = 0;
    const double serial = time_run(exp, test, spec, trials, 1, &ref_count);
    std::printf("%-10s %10s %10s %10s %10s\n", "impl", "threads", "seconds", "trials/s",
                "speedup");
    std::printf("%-10s %10d %10.3f %10.0f %10.2f\n", "serial", 1, serial,
                trials / serial, 1.0);

#if defined(_OPENMP)
    const int max_threads = omp_get_max_threads();
    for (int t = 1; t <= max_threads; t *= 2) {
        std::uint64_t count = 0;
        const double secs = time_run(exp, test, spec, trials, t, &count);
        std::printf("%-10s %10d %10.3f %10.0f %10.2f\n", "openmp", t, secs, trials / secs,
                    serial / secs);
        if (count != ref_count) {
            std::printf("MISMATCH: parallel count %llu != serial %llu\n",
                        static_cast<unsigned long long>(count),
                        static_cast<unsigned long long>(ref_count));
            return 1;
        }
    }
#endif
    return 0;
}
