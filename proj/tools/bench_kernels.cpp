// Benchmark: OpenMP-parallel kernels vs the serial reference implementations.
// Verifies both paths agree entry-for-entry before reporting timings.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <omp.h>

#include "lambert/convolution.hpp"
#include "lambert/factorization.hpp"
#include "lambert/series.hpp"
#include "lambert/tri_matrix.hpp"

using namespace lambert;
using clk = std::chrono::steady_clock;

namespace {

double seconds_since(clk::time_point t0) {
    return std::chrono::duration<double>(clk::now() - t0).count();
}

template <class F>
double timed(F&& fn) {
    auto t0 = clk::now();
    fn();
    return seconds_since(t0);
}

template <class T>
bool same(const TriMatrix<T>& a, const TriMatrix<T>& b) {
    if (a.n != b.n) return false;
    for (int r = 1; r <= a.n; ++r)
        for (int c = 1; c <= r; ++c)
            if (a.at(r, c) != b.at(r, c)) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    int N = argc > 1 ? std::atoi(argv[1]) : 400;
    if (N < 2) {
        std::fprintf(stderr, "usage: bench_kernels [N >= 2]\n");
        return 2;
    }
    std::printf("threads available: %d\n", omp_get_max_threads());
    partition_warm(static_cast<long long>(N) + 1);

    // Inversion of the ordinary factorization matrix (dense lower triangle,
    // big-integer arithmetic).
    TriMatrix<BigInt> s = ordinary_snk(N);
    TriMatrix<BigInt> inv_par(1), inv_ser(1);
    double t_par = timed([&] { inv_par = tri_invert_or_throw(s); });
    double t_ser = timed([&] { inv_ser = std::get<TriMatrix<BigInt>>(tri_invert_serial(s)); });
    if (!same(inv_par, inv_ser)) {
        std::fprintf(stderr, "FAIL: parallel and serial inverses differ (N=%d)\n", N);
        return 1;
    }
    std::printf("tri_invert       N=%4d  parallel %.3fs  serial %.3fs  speedup %.2fx\n", N, t_par, t_ser,
                t_ser / t_par);

    // Same comparison over Z[d] at a smaller size (polynomial entries grow fast).
    int Nd = std::min(N / 4, 120);
    if (Nd >= 2) {
        TriMatrix<PolyD> sd = snk_matrix_poly(pochhammer(1, 1, Nd), LambertParams{1, 0, 2, 1}, Nd);
        TriMatrix<PolyD> dinv_par(1), dinv_ser(1);
        double td_par = timed([&] { dinv_par = std::get<TriMatrix<PolyD>>(tri_invert(sd)); });
        double td_ser = timed([&] { dinv_ser = std::get<TriMatrix<PolyD>>(tri_invert_serial(sd)); });
        if (!same(dinv_par, dinv_ser)) {
            std::fprintf(stderr, "FAIL: parallel and serial Z[d] inverses differ (N=%d)\n", Nd);
            return 1;
        }
        std::printf("tri_invert Z[d]  N=%4d  parallel %.3fs  serial %.3fs  speedup %.2fx\n", Nd, td_par,
                    td_ser, td_ser / td_par);
    }

    // Triangular product (used by every inverse-verification path).
    TriMatrix<BigInt> prod(1);
    double tm = timed([&] { prod = tri_mul(s, inv_par); });
    bool is_id = same(prod, TriMatrix<BigInt>::identity(N));
    std::printf("tri_mul          N=%4d  %.3fs  (s * s^-1 == I: %s)\n", N, tm, is_id ? "yes" : "NO");

    return is_id ? 0 : 1;
}
