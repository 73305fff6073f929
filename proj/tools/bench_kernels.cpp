// Benchmark: serial reference kernels vs the OpenMP variants on realistic
// operator patterns (generator realizations and their products).

#include <chrono>
#include <functional>
#include <iostream>

#include "confock/confmap.hpp"
#include "confock/fock.hpp"
#include "confock/suites.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace confock;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    // warm-up
    fn();
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main(int argc, char** argv) {
    int reps = 5;
    if (argc > 1) reps = std::atoi(argv[1]);

    std::cout << "case,dim,nnz_a,nnz_b,serial_ms,omp_ms,speedup,max_diff\n";
    const Constants consts;
    for (const auto& [modes, n_max] : std::vector<std::pair<int, int>>{
             {8, 3}, {12, 4}, {16, 4}, {24, 4}, {16, 5}}) {
        const FrequencyGrid g = make_grid(modes, 8.0 / modes);
        const DerivativeStencil st = derivative_matrix(g, 2);
        const FockBasis basis = build_basis(g, n_max, 2000000);
        const CsrMatrix a = realize(qf_T_k(g, consts, st, 2), basis).mat;
        const CsrMatrix b = m_total(basis, st).mat;

        CsrMatrix r_serial, r_omp;
        const double ts = time_ms([&] { r_serial = spmm_serial(a, b); }, reps);
        const double to = time_ms([&] { r_omp = spmm_omp(a, b); }, reps);
        const double diff =
            spadd(r_serial, r_omp, {1.0, 0.0}, {-1.0, 0.0}).max_abs();
        std::cout << "spmm_T2_x_m," << basis.dim() << "," << a.nnz() << "," << b.nnz() << ","
                  << ts << "," << to << "," << ts / to << "," << diff << "\n";
    }

    {
        // quadrature kernel: one Bogoliubov row block, serial vs threaded
        std::vector<double> freqs;
        for (int j = 0; j < 16; ++j) freqs.push_back(0.5 + 0.25 * j);
        WindowedDomain window{-120.0, 120.0, 40.0, 40.0};
        const ConformalMap map = make_map_translation(1.3, window.lo, window.hi);
#ifdef _OPENMP
        const int saved = omp_get_max_threads();
        omp_set_num_threads(1);
#endif
        const double ts = time_ms([&] { bogoliubov(map, freqs, freqs, window, {}); }, 1);
#ifdef _OPENMP
        omp_set_num_threads(saved);
#endif
        const double to = time_ms([&] { bogoliubov(map, freqs, freqs, window, {}); }, 1);
        std::cout << "bogoliubov_16x16,-,-,-," << ts << "," << to << "," << ts / to << ",0\n";
    }
    return 0;
}
