#pragma once
// Generalized Lambert series factorizations: building the coefficient
// matrices s_{n,k} from a factorization pair (C(q), exponent scheme),
// verifying the factorization identity, the shift relation, the
// gamma-defined inverse construction, and the pentagonal B-sums.

#include <stdexcept>
#include <vector>

#include "lambert/arith.hpp"
#include "lambert/ring.hpp"
#include "lambert/series.hpp"
#include "lambert/tri_matrix.hpp"

namespace lambert {

// Exponent scheme: column k of the matrix comes from the Lambert term
// q^{a k + b} / (1 - q^{c k + d}); both exponent maps must stay positive.
struct LambertParams {
    long long a = 1, b = 0, c = 1, d = 0;

    void validate() const {
        if (a < 1 || c < 1 || a + b < 1 || c + d < 1)
            throw std::invalid_argument(
                "LambertParams: need a,c >= 1 and positive exponents for every k >= 1");
    }
};

struct FactorizationPair {
    IntSeries C;  // unit constant term
    LambertParams params;
    bool d_param = false;

    void validate() const {
        params.validate();
        if (C.empty() || !is_unit(C[0]))
            throw std::invalid_argument("FactorizationPair: C must have unit constant term");
    }
};

// s_{n,k} = [q^n] q^{a k + b} / (1 - q^{c k + d}) * C(q): with E = a k + b and
// F = c k + d this is sum_{j>=0} C[n - E - jF]; the d-weighted variant places
// C[n - E - jF] at degree j of a polynomial in d.
inline TriMatrix<BigInt> snk_matrix_int(const IntSeries& C, const LambertParams& p, int N) {
    p.validate();
    if (N < 1) throw std::invalid_argument("snk_matrix: N must be >= 1");
    TriMatrix<BigInt> m(N);
#pragma omp parallel for schedule(dynamic)
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) {
            long long E = p.a * k + p.b, F = p.c * k + p.d;
            BigInt s = 0;
            for (long long e = E; e <= n; e += F)
                if (n - e < static_cast<long long>(C.size())) s += C[n - e];
            m.at(n, k) = s;
        }
    return m;
}

inline TriMatrix<PolyD> snk_matrix_poly(const IntSeries& C, const LambertParams& p, int N) {
    p.validate();
    if (N < 1) throw std::invalid_argument("snk_matrix: N must be >= 1");
    TriMatrix<PolyD> m(N);
#pragma omp parallel for schedule(dynamic)
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) {
            long long E = p.a * k + p.b, F = p.c * k + p.d;
            PolyD s;
            int j = 0;
            for (long long e = E; e <= n; e += F, ++j)
                if (n - e < static_cast<long long>(C.size()) && C[n - e] != 0)
                    s += PolyD(C[n - e]).shifted(j);
            m.at(n, k) = s;
        }
    return m;
}

inline TriMatrix<BigInt> snk_matrix(const FactorizationPair& fp, int N) {
    if (fp.d_param)
        throw std::invalid_argument("snk_matrix: d-weighted pair requires snk_matrix_poly");
    fp.validate();
    return snk_matrix_int(fp.C, fp.params, N);
}

// True iff [q^n] C(q) * sum_k a_k q^{a k + b}/(1 - q^{c k + d}) equals
// sum_k s_{n,k} a_k for all n <= N (the factorization identity).
inline bool factorization_check(const IntFn& a, const FactorizationPair& fp, int N) {
    fp.validate();
    if (static_cast<int>(fp.C.size()) <= N)
        throw std::invalid_argument("factorization_check: C truncated below N");
    IntSeries lhs(static_cast<size_t>(N) + 1, BigInt(0));
    for (long long m = 1; m <= N; ++m) {
        long long E = fp.params.a * m + fp.params.b, F = fp.params.c * m + fp.params.d;
        if (E > N) continue;
        BigInt am = a(m);
        if (am == 0) continue;
        for (long long e = E; e <= N; e += F) lhs[e] += am;
    }
    lhs = series_mul(lhs, fp.C);
    TriMatrix<BigInt> s = snk_matrix_int(fp.C, fp.params, N);
    for (int n = 1; n <= N; ++n) {
        BigInt rhs = 0;
        for (int k = 1; k <= n; ++k) rhs += s.at(n, k) * a(k);
        if (lhs[n] != rhs) return false;
    }
    return true;
}

// Shift relation: the matrix built with numerator exponent (alpha k - beta) + delta
// and denominator exponent alpha k - beta equals the ordinary matrix
// re-indexed by (n - delta, alpha k - beta).
inline bool shift_relation_check(long long alpha, long long beta, long long delta, int N) {
    if (alpha < 1 || beta < 0 || beta >= alpha)
        throw std::invalid_argument("shift_relation_check: need alpha >= 1, 0 <= beta < alpha");
    IntSeries C = pochhammer(1, 1, N);
    TriMatrix<BigInt> ordinary = snk_matrix_int(C, {1, 0, 1, 0}, N);
    TriMatrix<BigInt> shifted = snk_matrix_int(C, {alpha, delta - beta, alpha, -beta}, N);
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) {
            long long nn = n - delta, kk = alpha * k - beta;
            BigInt want = 0;
            if (1 <= kk && kk <= nn && nn <= N) want = ordinary.at(static_cast<int>(nn), static_cast<int>(kk));
            if (shifted.at(n, k) != want) return false;
        }
    return true;
}

// Inverse-matrix construction from a generating function gamma:
//   entry (n,k) = sum_{d|n} [q^{d-k}] (1/C(q)) * gamma(n/d)  (zero when d < k).
inline TriMatrix<BigInt> gamma_inverse_matrix(const IntFn& gamma, const IntSeries& C, int N) {
    IntSeries cinv = series_inverse(C);
    std::vector<BigInt> g(static_cast<size_t>(N) + 1);
    std::vector<std::vector<long long>> divs(static_cast<size_t>(N) + 1);
    for (long long n = 1; n <= N; ++n) {
        g[n] = gamma(n);
        divs[n] = divisors(n);
    }
    TriMatrix<BigInt> m(N);
#pragma omp parallel for schedule(dynamic)
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) {
            BigInt s = 0;
            for (long long d : divs[n])
                if (d >= k) s += cinv[d - k] * g[n / d];
            m.at(n, k) = s;
        }
    return m;
}

// The series whose k-th coefficient weights row sums against the inverse
// matrix: B_{k-1} = [q^k] C(q) * sum_m a_m q^{e(m)}/(1 - q^{e(m)}), with
// e(m) = alpha*m + beta (plus route) or alpha*m - beta (minus route).
inline IntSeries b_weight_series(const IntFn& a, long long alpha, long long beta, const IntSeries& C,
                                 int N) {
    IntSeries lhs(static_cast<size_t>(N) + 1, BigInt(0));
    for (long long m = 1; m <= N; ++m) {
        long long e0 = alpha * m + beta;
        if (e0 < 1 || e0 > N) continue;
        BigInt am = a(m);
        if (am == 0) continue;
        for (long long e = e0; e <= N; e += e0) lhs[e] += am;
    }
    return series_mul(lhs, C);
}

// Closed form: bar_a(n) = sum over divisors d of n with d ≡ beta (mod alpha),
// d > beta, of a_{(d-beta)/alpha} * gamma~(n/d), gamma~ = gamma * 1.
inline BigInt bar_a_closed(const IntFn& a, const IntFn& gamma, long long alpha, long long beta,
                           long long n) {
    if (alpha < 1) throw std::invalid_argument("bar_a_closed: alpha must be >= 1");
    BigInt s = 0;
    for (long long d : divisors(n)) {
        if (d <= beta || (d - beta) % alpha != 0) continue;
        BigInt gt = 0;
        for (long long e : divisors(n / d)) gt += gamma(e);
        s += a((d - beta) / alpha) * gt;
    }
    return s;
}

// Matrix route: bar_a(n) = sum_k gamma_inverse_matrix(n,k) * B_{k-1} with the
// plus-route weights (numerator exponents alpha*m + beta).
inline BigInt bar_a_via_matrix(const IntFn& a, const IntFn& gamma, long long alpha, long long beta,
                               const IntSeries& C, long long n) {
    int N = static_cast<int>(C.size()) - 1;
    if (n > N) throw std::invalid_argument("bar_a_via_matrix: C truncated below n");
    IntSeries B = b_weight_series(a, alpha, beta, C, N);
    IntSeries cinv = series_inverse(C);
    BigInt s = 0;
    for (long long k = 1; k <= n; ++k) {
        BigInt entry = 0;
        for (long long d : divisors(n))
            if (d >= k) entry += cinv[d - k] * gamma(n / d);
        s += entry * B[k];
    }
    return s;
}

// Minus-route duals (numerator exponents alpha*m - beta; the divisor
// congruence flips to d ≡ -beta (mod alpha) with index (d+beta)/alpha).
inline BigInt bar_a_closed_minus(const IntFn& a, const IntFn& gamma, long long alpha,
                                 long long beta, long long n) {
    if (alpha < 1) throw std::invalid_argument("bar_a_closed_minus: alpha must be >= 1");
    BigInt s = 0;
    for (long long d : divisors(n)) {
        if ((d + beta) % alpha != 0 || (d + beta) / alpha < 1) continue;
        BigInt gt = 0;
        for (long long e : divisors(n / d)) gt += gamma(e);
        s += a((d + beta) / alpha) * gt;
    }
    return s;
}

inline BigInt bar_a_via_matrix_minus(const IntFn& a, const IntFn& gamma, long long alpha,
                                     long long beta, const IntSeries& C, long long n) {
    return bar_a_via_matrix(a, gamma, alpha, -beta, C, n);
}

// Pentagonal B-sum of a sequence b (b[0] supplied by the caller; zero for
// Lambert-coefficient sequences):
//   B(b, k) = b_k + sum_{s=+-1} sum_{j=1}^{floor((sqrt(24k+1)-s)/6)} (-1)^j b_{k-j(3j+s)/2}.
// Equals [q^k] (q;q)_inf * sum_m b_m q^m.
template <class T>
inline T pentagonal_B(const std::vector<T>& b, long long k) {
    if (k < 0 || k >= static_cast<long long>(b.size()))
        throw std::out_of_range("pentagonal_B: k out of range");
    T s = b[static_cast<size_t>(k)];
    for (int sign : {+1, -1}) {
        for (long long j = 1;; ++j) {
            long long idx = k - j * (3 * j + sign) / 2;
            if (idx < 0) break;
            if (j % 2 == 1) s -= b[static_cast<size_t>(idx)];
            else s += b[static_cast<size_t>(idx)];
        }
    }
    return s;
}

}  // namespace lambert
