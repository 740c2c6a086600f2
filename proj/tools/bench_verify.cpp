// Times the verification sweep: serial reference loop vs the OpenMP fan-out,
// on the same case list, and checks the two reports stay byte-identical.

#include <chrono>
#include <iostream>

#include "stirsum/verify.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    stirsum::SuiteConfig cfg;
    if (argc > 1) cfg.k_max = std::stol(argv[1]);
    if (argc > 2) cfg.n_max = std::stol(argv[2]);

    long cases = static_cast<long>(stirsum::enumerate_cases(cfg).size());
    std::cout << "grid: k_max=" << cfg.k_max << " n_max=" << cfg.n_max << " r_max=" << cfg.r_max
              << " m_max=" << cfg.m_max << " (" << cases << " cases)\n";
#ifdef _OPENMP
    std::cout << "openmp threads available: " << omp_get_max_threads() << "\n";
#else
    std::cout << "built without openmp; both paths are serial\n";
#endif

    std::string serial_json, parallel_json;
    double t_serial = time_best_of(3, [&] { serial_json = stirsum::run_suites_serial(cfg).to_json(); });
    double t_parallel = time_best_of(3, [&] { parallel_json = stirsum::run_suites(cfg).to_json(); });

    std::cout << "serial:   " << t_serial << " s\n";
    std::cout << "parallel: " << t_parallel << " s\n";
    std::cout << "speedup:  " << (t_parallel > 0 ? t_serial / t_parallel : 0.0) << "x\n";

    if (serial_json != parallel_json) {
        std::cout << "ERROR: serial and parallel reports differ\n";
        return 1;
    }
    std::cout << "reports byte-identical: yes\n";
    return 0;
}
