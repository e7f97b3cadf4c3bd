#pragma once
// j-fold self-convolutions ds_{j,g}, their even-fold aggregate D_g, the
// convolution-generalized factorization matrices tilde_s(g) with their exact
// inverse formula, and the two corollaries built on them (Dirichlet inverses
// and solving f*g = h*mu through pentagonal B-sums).
//
// Two seeds coexist for the self-convolution recursion
//   ds_j(n) = sum_{d|n, d>1} g(d) ds_{j-1}(n/d):
//   - PLAIN seed ds_1 = g: reproduces the reference ds/D tables (the
//     perfect-partition sequence).
//   - SIGNED seed ds_1 = g(n)[n>1] - [n=1]: makes the aggregate satisfy
//     g * (D + eps) = eps, i.e. D_signed = g^{-1} - eps, which is the form
//     the inverse-matrix machinery needs.

#include <stdexcept>
#include <vector>

#include "lambert/arith.hpp"
#include "lambert/factorization.hpp"
#include "lambert/partitions.hpp"
#include "lambert/series.hpp"
#include "lambert/tri_matrix.hpp"

namespace lambert {

enum class ConvSeed { PLAIN, SIGNED };

// ds values for j = 1..jmax, n = 1..N (index [j][n]; row 0 unused).
struct SelfConvTable {
    int jmax = 0, N = 0;
    ConvSeed seed = ConvSeed::PLAIN;
    std::vector<std::vector<BigInt>> v;

    static SelfConvTable build(const IntFn& g, int jmax, int N, ConvSeed seed) {
        if (jmax < 1 || N < 1) throw std::invalid_argument("SelfConvTable: jmax, N must be >= 1");
        if (g(1) != 1) throw std::domain_error("SelfConvTable: g(1) must be 1");
        SelfConvTable t;
        t.jmax = jmax;
        t.N = N;
        t.seed = seed;
        t.v.assign(static_cast<size_t>(jmax) + 1,
                   std::vector<BigInt>(static_cast<size_t>(N) + 1, BigInt(0)));
        for (long long n = 1; n <= N; ++n)
            t.v[1][n] = (seed == ConvSeed::PLAIN) ? g(n)
                                                  : (n > 1 ? g(n) : BigInt(-1));
        for (int j = 2; j <= jmax; ++j)
            for (long long n = 1; n <= N; ++n) {
                BigInt s = 0;
                for (long long d : divisors(n))
                    if (d > 1) s += g(d) * t.v[j - 1][n / d];
                t.v[j][n] = s;
            }
        return t;
    }

    const BigInt& at(int j, long long n) const { return v[j][n]; }
};

// ds_j(n) is zero once j - 1 exceeds the number of prime factors of n with
// multiplicity, so this depth covers every nonzero fold (and the D sums).
inline int ds_depth(int N) {
    int bits = 0;
    while ((1 << bits) <= N) ++bits;
    return 2 * bits + 4;
}

inline BigInt ds(int j, const IntFn& g, long long n) {
    auto t = SelfConvTable::build(g, j, static_cast<int>(n), ConvSeed::PLAIN);
    return t.at(j, n);
}

inline BigInt ds_signed(int j, const IntFn& g, long long n) {
    auto t = SelfConvTable::build(g, j, static_cast<int>(n), ConvSeed::SIGNED);
    return t.at(j, n);
}

// D(m) = sum_{j>=1} ds_{2j}(m) under the given seed, tabulated for m <= N.
inline std::vector<BigInt> D_values(const IntFn& g, int N, ConvSeed seed) {
    int jmax = ds_depth(N);
    auto t = SelfConvTable::build(g, jmax, N, seed);
    std::vector<BigInt> D(static_cast<size_t>(N) + 1, BigInt(0));
    for (long long n = 1; n <= N; ++n)
        for (int j = 2; j <= jmax; j += 2) D[n] += t.at(j, n);
    return D;
}

inline IntFn D_fn(const IntFn& g, int N) {
    auto vals = std::make_shared<std::vector<BigInt>>(D_values(g, N, ConvSeed::PLAIN));
    return [vals](long long n) -> BigInt {
        if (n < 1 || n >= static_cast<long long>(vals->size()))
            throw std::out_of_range("D_fn: n out of tabulated range");
        return (*vals)[static_cast<size_t>(n)];
    };
}

inline IntFn D_signed_fn(const IntFn& g, int N) {
    auto vals = std::make_shared<std::vector<BigInt>>(D_values(g, N, ConvSeed::SIGNED));
    return [vals](long long n) -> BigInt {
        if (n < 1 || n >= static_cast<long long>(vals->size()))
            throw std::out_of_range("D_signed_fn: n out of tabulated range");
        return (*vals)[static_cast<size_t>(n)];
    };
}

// ds_m(n) = sum_{i=0}^{m-1} C(m-1,i) (-1)^{m-1-i} ts_{i+1}(n), where the
// tilde table ts_j is g^{*j} (PLAIN) or g_pm * g^{*(j-1)} (SIGNED).
inline bool ds_binomial_check(const IntFn& g, int mmax, int N, ConvSeed seed) {
    auto t = SelfConvTable::build(g, mmax, N, seed);
    // convolution powers g^{*j}
    std::vector<std::vector<BigInt>> pw(static_cast<size_t>(mmax) + 1,
                                        std::vector<BigInt>(static_cast<size_t>(N) + 1, BigInt(0)));
    for (long long n = 1; n <= N; ++n) pw[1][n] = g(n);
    for (int j = 2; j <= mmax; ++j)
        for (long long n = 1; n <= N; ++n) {
            BigInt s = 0;
            for (long long d : divisors(n)) s += g(d) * pw[j - 1][n / d];
            pw[j][n] = s;
        }
    auto tilde = [&](int j, long long n) -> BigInt {
        if (seed == ConvSeed::PLAIN) return pw[j][n];
        auto gpm = [&](long long m) { return m > 1 ? g(m) : BigInt(-1); };
        if (j == 1) return gpm(n);
        BigInt s = 0;
        for (long long d : divisors(n)) s += gpm(d) * pw[j - 1][n / d];
        return s;
    };
    std::vector<std::vector<BigInt>> binom(static_cast<size_t>(mmax),
                                           std::vector<BigInt>(static_cast<size_t>(mmax), BigInt(0)));
    for (int i = 0; i < mmax; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : BigInt(0));
    }
    for (int m = 1; m <= mmax; ++m)
        for (long long n = 1; n <= N; ++n) {
            BigInt rhs = 0;
            for (int i = 0; i < m; ++i) {
                BigInt term = binom[m - 1][i] * tilde(i + 1, n);
                rhs += ((m - 1 - i) % 2 == 0) ? term : -term;
            }
            if (t.at(m, n) != rhs) return false;
        }
    return true;
}

// ------------------------------------------------- tilde matrices (Thm 4.2)

inline TriMatrix<BigInt> ordinary_snk(int N) {
    return snk_matrix_int(pochhammer(1, 1, N), {1, 0, 1, 0}, N);
}

// tilde_s(g)_{n,k} = sum_j s_{n, k j} g(j).
inline TriMatrix<BigInt> tilde_snk(const IntFn& g, int N) {
    TriMatrix<BigInt> s = ordinary_snk(N);
    std::vector<BigInt> gv(static_cast<size_t>(N) + 1);
    for (long long j = 1; j <= N; ++j) gv[j] = g(j);
    TriMatrix<BigInt> m(N);
#pragma omp parallel for schedule(dynamic)
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) {
            BigInt acc = 0;
            for (int j = 1; k * j <= n; ++j) acc += s.at(n, k * j) * gv[j];
            m.at(n, k) = acc;
        }
    return m;
}

// One row of the closed-form inverse of tilde_s(g):
//   entry (n,k) = (p_k * mu)(n) + (p_k * D_signed * mu)(n)
// with p_k(n) = p(n-k) and D_signed = g^{-1} - eps.
inline std::vector<BigInt> inverse_tilde_row(const IntFn& g, long long n, const std::vector<BigInt>& Dsigned) {
    std::vector<BigInt> row(static_cast<size_t>(n) + 1, BigInt(0));
    auto divs_n = divisors(n);
    for (long long k = 1; k <= n; ++k) {
        BigInt v = 0;
        for (long long d : divs_n) {
            BigInt inner = partition_p(d - k);  // p_k(d)
            for (long long e : divisors(d))     // (p_k * D_signed)(d)
                inner += partition_p(e - k) * Dsigned[static_cast<size_t>(d / e)];
            v += inner * mu(n / d);
        }
        row[static_cast<size_t>(k)] = v;
    }
    return row;
}

inline TriMatrix<BigInt> inverse_tilde_snk(const IntFn& g, int N) {
    if (g(1) != 1) throw std::domain_error("inverse_tilde_snk: g(1) must be 1");
    std::vector<BigInt> Ds = D_values(g, N, ConvSeed::SIGNED);
    partition_warm(N);
    TriMatrix<BigInt> m(N);
    for (int n = 1; n <= N; ++n) {
        auto row = inverse_tilde_row(g, n, Ds);
        for (int k = 1; k <= n; ++k) m.at(n, k) = row[static_cast<size_t>(k)];
    }
    return m;
}

// Moebius-summed form of the inverse: sum_{d|n} entry(d,k) should equal
// p_k(n) + (p_k * D_signed)(n).
inline bool inverse_tilde_moebius_summed_check(const IntFn& g, int N) {
    TriMatrix<BigInt> inv = inverse_tilde_snk(g, N);
    std::vector<BigInt> Ds = D_values(g, N, ConvSeed::SIGNED);
    for (long long n = 1; n <= N; ++n)
        for (long long k = 1; k <= n; ++k) {
            BigInt lhs = 0;
            for (long long d : divisors(n)) lhs += inv.get(static_cast<int>(d), static_cast<int>(k));
            BigInt rhs = partition_p(n - k);
            for (long long d : divisors(n)) rhs += partition_p(d - k) * Ds[static_cast<size_t>(n / d)];
            if (lhs != rhs) return false;
        }
    return true;
}

// ---------------------------------------------------------------- rho and u

// rho^{(i)}_{n,k}(g) = sum_j s_{n, i j} * tilde_s^{-1}(g)_{j,k}.
inline BigInt rho(int n, int k, int i, const TriMatrix<BigInt>& s, const TriMatrix<BigInt>& tinv) {
    BigInt acc = 0;
    for (int j = 1; i * j <= n; ++j)
        if (k <= j) acc += s.at(n, i * j) * tinv.at(j, k);
    return acc;
}

inline BigInt rho(int n, int k, int i, const IntFn& g, int N) {
    TriMatrix<BigInt> s = ordinary_snk(N);
    TriMatrix<BigInt> tinv = inverse_tilde_snk(g, N);
    return rho(n, k, i, s, tinv);
}

// u^{(i)}_{n,k}(g) = sum_{m>=0} rho^{(i)}_{n-m,k} p(m).
inline BigInt u(int n, int k, int i, const TriMatrix<BigInt>& s, const TriMatrix<BigInt>& tinv) {
    BigInt acc = 0;
    for (int m = 0; n - m >= 1; ++m) acc += rho(n - m, k, i, s, tinv) * partition_p(m);
    return acc;
}

inline BigInt u(int n, int k, int i, const IntFn& g, int N) {
    TriMatrix<BigInt> s = ordinary_snk(N);
    TriMatrix<BigInt> tinv = inverse_tilde_snk(g, N);
    return u(n, k, i, s, tinv);
}

// Reference rho table layout: rows n, columns i, at k = 1,
// with g = eps (so tilde_s^{-1}(eps) is the ordinary inverse).
inline std::vector<std::vector<BigInt>> rho_table(int nmax, int imax) {
    TriMatrix<BigInt> s = ordinary_snk(nmax);
    TriMatrix<BigInt> sinv = tri_invert_or_throw(s);
    std::vector<std::vector<BigInt>> t(static_cast<size_t>(nmax));
    for (int n = 1; n <= nmax; ++n) {
        t[n - 1].resize(static_cast<size_t>(imax));
        for (int i = 1; i <= imax; ++i) t[n - 1][i - 1] = rho(n, 1, i, s, sinv);
    }
    return t;
}

// ------------------------------------------------------- corollaries 4.3/4.5

// f^{-1}(n) = sum_k inverse_tilde_row(f)_k * [q^{k-1}] (q;q)_inf / (1-q).
inline std::vector<BigInt> dirichlet_inverse_via_fact(const IntFn& f, int N) {
    if (f(1) != 1) throw std::domain_error("dirichlet_inverse_via_fact: f(1) must be 1");
    IntSeries qq = pochhammer(1, 1, N + 1);
    IntSeries geom(static_cast<size_t>(N) + 2, BigInt(1));  // 1/(1-q)
    IntSeries w = series_mul(qq, geom);
    std::vector<BigInt> Ds = D_values(f, N, ConvSeed::SIGNED);
    partition_warm(N);
    std::vector<BigInt> out(static_cast<size_t>(N) + 1, BigInt(0));
    for (long long n = 1; n <= N; ++n) {
        auto row = inverse_tilde_row(f, n, Ds);
        for (long long k = 1; k <= n; ++k) out[static_cast<size_t>(n)] += row[static_cast<size_t>(k)] * w[k - 1];
    }
    return out;
}

// Solve f * g = h * mu: g(n) = sum_k inverse_tilde_row(f)_k * pentagonal_B(h, k).
inline std::vector<BigInt> solve_convolution(const IntFn& f, const IntFn& h, int N) {
    if (f(1) != 1) throw std::domain_error("solve_convolution: f(1) must be 1");
    std::vector<BigInt> hseq(static_cast<size_t>(N) + 1, BigInt(0));
    for (long long n = 1; n <= N; ++n) hseq[static_cast<size_t>(n)] = h(n);
    std::vector<BigInt> Ds = D_values(f, N, ConvSeed::SIGNED);
    partition_warm(N);
    std::vector<BigInt> out(static_cast<size_t>(N) + 1, BigInt(0));
    for (long long n = 1; n <= N; ++n) {
        auto row = inverse_tilde_row(f, n, Ds);
        for (long long k = 1; k <= n; ++k)
            out[static_cast<size_t>(n)] += row[static_cast<size_t>(k)] * pentagonal_B(hseq, k);
    }
    return out;
}

// Both self-referential expansions of a sequence b (b(m) = 0 for m <= 0):
//   form 1: b(n) = sum_k [ (p_k*mu)(n) + (p_k*D_mu*mu)(n) ] * pentagonal_B(b, k)
//   form 2: b(n) = sum_j p(n-j) * sum_k tilde_s(mu)_{j,k} b(k).
inline bool b_recurrence_check(const IntFn& b, int N) {
    std::vector<BigInt> bseq(static_cast<size_t>(N) + 1, BigInt(0));
    for (long long n = 1; n <= N; ++n) bseq[static_cast<size_t>(n)] = b(n);
    std::vector<BigInt> Ds = D_values(mu, N, ConvSeed::SIGNED);
    partition_warm(N);
    for (long long n = 1; n <= N; ++n) {
        auto row = inverse_tilde_row(mu, n, Ds);
        BigInt tot = 0;
        for (long long k = 1; k <= n; ++k)
            tot += row[static_cast<size_t>(k)] * pentagonal_B(bseq, k);
        if (tot != bseq[static_cast<size_t>(n)]) return false;
    }
    TriMatrix<BigInt> tm = tilde_snk(mu, N);
    for (long long n = 1; n <= N; ++n) {
        BigInt tot = 0;
        for (long long j = 1; j <= n; ++j) {
            BigInt inner = 0;
            for (long long k = 1; k <= j; ++k)
                inner += tm.at(static_cast<int>(j), static_cast<int>(k)) * bseq[static_cast<size_t>(k)];
            tot += partition_p(n - j) * inner;
        }
        if (tot != bseq[static_cast<size_t>(n)]) return false;
    }
    return true;
}

}  // namespace lambert
