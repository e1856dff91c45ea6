// Timing harness comparing the parallel kernels against their serial
// reference implementations: the balanced product tree vs the sequential
// factor fold, and an estimator sweep with/without OpenMP.

#include <momentpoly/asymptotics.hpp>
#include <momentpoly/exact.hpp>
#include <momentpoly/logvalue.hpp>

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
    const auto t0 = Clock::now();
    fn();
    const auto t1 = Clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void set_threads(int n) {
#ifdef _OPENMP
    omp_set_num_threads(n);
#else
    (void)n;
#endif
}

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> ks = {10, 20, 30};
    if (argc > 1) {
        ks.clear();
        for (int i = 1; i < argc; ++i) ks.push_back(std::stoi(argv[i]));
    }
    const int hw = max_threads();
    std::printf("product tree vs sequential fold (ms); %d thread(s) available\n", hw);
    std::printf("%6s %14s %14s %14s %10s\n", "k", "seq_fold", "tree_1t", "tree_nt", "speedup");
    for (int k : ks) {
        momentpoly::CoefficientTable serial, tree1, treen;
        const double t_serial = time_ms([&] { serial = momentpoly::expand_product_serial(k); });
        set_threads(1);
        const double t_tree1 = time_ms([&] { tree1 = momentpoly::expand_product(k); });
        set_threads(hw);
        const double t_treen = time_ms([&] { treen = momentpoly::expand_product(k); });
        const bool same = serial.b == tree1.b && tree1.b == treen.b;
        std::printf("%6d %14.1f %14.1f %14.1f %9.2fx %s\n", k, t_serial, t_tree1, t_treen,
                    t_tree1 / t_treen, same ? "" : "MISMATCH");
    }

    const int k = ks.back();
    const long n = static_cast<long>(k) * k;
    std::printf("\nuniform-estimate sweep over r = 1..%ld at k=%d (ms)\n", n - 1, k);
    std::vector<double> out(n - 1);
    set_threads(1);
    const double t1 = time_ms([&] {
        for (long r = 1; r < n; ++r)
            out[r - 1] = momentpoly::uniform_estimate(k, r).logmag;
    });
    set_threads(hw);
    const double tn = time_ms([&] {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (long r = 1; r < n; ++r)
            out[r - 1] = momentpoly::uniform_estimate(k, r).logmag;
    });
    std::printf("%14s %14s %10s\n", "serial", "parallel", "speedup");
    std::printf("%14.1f %14.1f %9.2fx\n", t1, tn, t1 / tn);
    return 0;
}
