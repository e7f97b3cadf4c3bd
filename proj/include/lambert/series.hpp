#pragma once
// Truncated formal power series in q with exact coefficients, and the
// q-Pochhammer / theta / Lambert-term constructions built on them.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lambert/partitions.hpp"
#include "lambert/ring.hpp"

namespace lambert {

// A truncated series is its coefficient vector c[0..N] (order N = size-1).
template <class T>
using Series = std::vector<T>;

using IntSeries = Series<BigInt>;

template <class T>
inline Series<T> series_const_one(int N) {
    Series<T> s(static_cast<size_t>(N) + 1, ring_zero<T>());
    s[0] = ring_one<T>();
    return s;
}

// Cauchy product truncated to order min(order(a), order(b)).
template <class T>
inline Series<T> series_mul(const Series<T>& a, const Series<T>& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("series_mul: empty series");
    int N = static_cast<int>(std::min(a.size(), b.size())) - 1;
    Series<T> r(static_cast<size_t>(N) + 1, ring_zero<T>());
    for (int i = 0; i <= N; ++i) {
        if (is_zero(a[i])) continue;
        for (int j = 0; i + j <= N; ++j)
            if (!is_zero(b[j])) r[i + j] += a[i] * b[j];
    }
    return r;
}

// Multiplicative inverse to the series' own order; constant term must be a unit.
template <class T>
inline Series<T> series_inverse(const Series<T>& a) {
    if (a.empty() || !is_unit(a[0]))
        throw std::domain_error("series_inverse: constant term is not a unit");
    int N = static_cast<int>(a.size()) - 1;
    Series<T> b(static_cast<size_t>(N) + 1, ring_zero<T>());
    T c0inv = unit_inverse(a[0]);
    b[0] = c0inv;
    for (int n = 1; n <= N; ++n) {
        T s = ring_zero<T>();
        for (int i = 1; i <= n; ++i)
            if (!is_zero(a[i])) s += a[i] * b[n - i];
        b[n] = -(c0inv * s);
    }
    return b;
}

// (q^a; q^b)_inf = prod_{j>=0} (1 - q^{a+jb}), truncated at order N.
// The (1,1) case is expanded directly by the pentagonal number theorem.
inline IntSeries pochhammer(long long a, long long b, int N) {
    if (a < 1 || b < 1) throw std::invalid_argument("pochhammer: exponents must be >= 1");
    IntSeries s(static_cast<size_t>(N) + 1, BigInt(0));
    if (a == 1 && b == 1) {
        s[0] = 1;
        for (long long j = 1;; ++j) {
            long long g1 = j * (3 * j - 1) / 2, g2 = j * (3 * j + 1) / 2;
            if (g1 > N && g2 > N) break;
            BigInt sign = (j % 2 == 1) ? -1 : 1;
            if (g1 <= N) s[g1] = sign;
            if (g2 <= N) s[g2] = sign;
        }
        return s;
    }
    s[0] = 1;
    for (long long e = a; e <= N; e += b) {
        // multiply in place by (1 - q^e)
        for (long long i = N; i >= e; --i) s[i] -= s[i - e];
    }
    return s;
}

// prod_{j>=1} (1 + q^j) truncated at order N, i.e. (-q; q)_inf.
inline IntSeries neg_pochhammer(int N) {
    IntSeries s(static_cast<size_t>(N) + 1, BigInt(0));
    s[0] = 1;
    for (long long e = 1; e <= N; ++e)
        for (long long i = N; i >= e; --i) s[i] += s[i - e];
    return s;
}

// theta3(q) = 1 + 2 sum_{n>=1} q^{n^2}.
inline IntSeries theta3(int N) {
    IntSeries s(static_cast<size_t>(N) + 1, BigInt(0));
    s[0] = 1;
    for (long long n = 1; n * n <= N; ++n) s[n * n] = 2;
    return s;
}

// q^{e_num} / (1 - q^{e_den}) = sum_{j>=0} q^{e_num + j*e_den}, order N.
inline IntSeries lambert_term(long long e_num, long long e_den, int N) {
    if (e_num < 1 || e_den < 1) throw std::invalid_argument("lambert_term: exponents must be >= 1");
    IntSeries s(static_cast<size_t>(N) + 1, BigInt(0));
    for (long long e = e_num; e <= N; e += e_den) s[e] = 1;
    return s;
}

// q^{e_num} / (1 - d q^{e_den}) = sum_{j>=0} d^j q^{e_num + j*e_den}, over Z[d].
inline Series<PolyD> lambert_term_d(long long e_num, long long e_den, int N) {
    if (e_num < 1 || e_den < 1) throw std::invalid_argument("lambert_term_d: exponents must be >= 1");
    Series<PolyD> s(static_cast<size_t>(N) + 1);
    long long j = 0;
    for (long long e = e_num; e <= N; e += e_den, ++j)
        s[e] = PolyD(BigInt(1)).shifted(static_cast<int>(j));
    return s;
}

// Lift an integer series into another coefficient ring.
template <class T>
inline Series<T> series_lift(const IntSeries& a) {
    Series<T> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = T(a[i]);
    return r;
}

// tilde_q(n) := [q^n] (q; q^2)_inf  (even-length minus odd-length partitions
// of n into distinct odd parts, by the enumeration identity tested alongside).
inline BigInt tilde_q(long long n) {
    if (n < 0) return BigInt(0);
    static IntSeries cache = pochhammer(1, 2, 64);
    if (n >= static_cast<long long>(cache.size()))
        cache = pochhammer(1, 2, static_cast<int>(n) + 64);
    return cache[static_cast<size_t>(n)];
}

// distinct_odd_q(n) := [q^n] 1/(q; q^2)_inf = number of partitions of n into odd parts.
inline BigInt distinct_odd_q(long long n) {
    if (n < 0) return BigInt(0);
    static IntSeries cache = series_inverse(pochhammer(1, 2, 64));
    if (n >= static_cast<long long>(cache.size()))
        cache = series_inverse(pochhammer(1, 2, static_cast<int>(n) + 64));
    return cache[static_cast<size_t>(n)];
}

}  // namespace lambert
