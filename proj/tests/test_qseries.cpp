#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lambert/arith.hpp"
#include "lambert/partitions.hpp"
#include "lambert/series.hpp"

using namespace lambert;

TEST_CASE("pentagonal expansion of (q;q)_inf") {
    IntSeries qq = pochhammer(1, 1, 30);
    // 1 - q - q^2 + q^5 + q^7 - q^12 - q^15 + q^22 + q^26 - ...
    IntSeries want(31, BigInt(0));
    want[0] = 1;
    want[1] = want[2] = -1;
    want[5] = want[7] = 1;
    want[12] = want[15] = -1;
    want[22] = want[26] = 1;
    CHECK(qq == want);
}

TEST_CASE("pochhammer matches the explicit finite product") {
    const int N = 40;
    for (auto [a, b] : {std::pair{1, 1}, {1, 2}, {2, 3}, {1, 3}, {3, 5}}) {
        IntSeries prod(N + 1, BigInt(0));
        prod[0] = 1;
        for (long long e = a; e <= N; e += b) {
            // multiply by (1 - q^e)
            for (long long i = N; i >= e; --i) prod[i] -= prod[i - e];
        }
        CHECK(pochhammer(a, b, N) == prod);
    }
}

TEST_CASE("series inverse of (q;q)_inf is the partition generating function") {
    const int N = 60;
    IntSeries pinv = series_inverse(pochhammer(1, 1, N));
    auto p = partition_table(N);
    for (int n = 0; n <= N; ++n) CHECK(pinv[n] == p[n]);
}

TEST_CASE("series_mul and series_inverse are exact inverses") {
    for (auto C : {pochhammer(1, 2, 50), neg_pochhammer(50), theta3(50)}) {
        IntSeries prod = series_mul(C, series_inverse(C));
        CHECK(prod[0] == 1);
        for (size_t i = 1; i < prod.size(); ++i) CHECK(prod[i] == 0);
    }
}

TEST_CASE("series_inverse requires a unit constant term") {
    IntSeries bad = {BigInt(2), BigInt(1)};
    CHECK_THROWS_AS(series_inverse(bad), std::domain_error);
    IntSeries bad2 = {BigInt(0), BigInt(1)};
    CHECK_THROWS_AS(series_inverse(bad2), std::domain_error);
}

TEST_CASE("neg_pochhammer counts partitions into distinct parts") {
    const int N = 30;
    IntSeries np = neg_pochhammer(N);
    PartitionConstraint c;
    c.kind = PartKind::DISTINCT_PARTS_IN_PROGRESSION;  // alpha=1, beta=0: any distinct parts
    for (int n = 0; n <= 20; ++n) CHECK(np[n] == count_partitions(n, c));
}

TEST_CASE("theta3 coefficients are doubled square indicators") {
    IntSeries t = theta3(30);
    for (int n = 0; n <= 30; ++n) {
        long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
        bool sq = (r * r == n) || ((r + 1) * (r + 1) == n);
        CHECK(t[n] == (n == 0 ? BigInt(1) : BigInt(sq ? 2 : 0)));
    }
}

TEST_CASE("theta3 squared expands r2 counts") {
    const int N = 40;
    IntSeries t2 = series_mul(theta3(N), theta3(N));
    CHECK(t2[0] == 1);
    for (long long n = 1; n <= N; ++n) CHECK(t2[n] == r2(n));
}

TEST_CASE("lambert_term places geometric support") {
    IntSeries t = lambert_term(3, 4, 20);  // q^3/(1-q^4)
    for (int i = 0; i <= 20; ++i) CHECK(t[i] == ((i >= 3 && (i - 3) % 4 == 0) ? 1 : 0));
    auto td = lambert_term_d(3, 4, 20);  // d^j at exponent 3 + 4j
    for (int i = 0; i <= 20; ++i) {
        if (i >= 3 && (i - 3) % 4 == 0) {
            int j = (i - 3) / 4;
            CHECK(td[i].degree() == j);
            CHECK(td[i].c.back() == 1);
            CHECK(td[i].eval_at_one() == 1);
        } else {
            CHECK(td[i].is_zero());
        }
    }
}

TEST_CASE("tilde_q and distinct_odd_q expansions") {
    // (q;q^2)_inf starts 1 - q - q^3 + q^4 + ...
    CHECK(tilde_q(0) == 1);
    CHECK(tilde_q(1) == -1);
    CHECK(tilde_q(2) == 0);
    CHECK(tilde_q(3) == -1);
    CHECK(tilde_q(4) == 1);
    CHECK(distinct_odd_q(10) == 10);
    // 1/(q;q^2)_inf counts partitions into odd parts
    PartitionConstraint odd;
    odd.kind = PartKind::PARTS_IN_PROGRESSION;
    odd.alpha = 2;
    odd.beta = 1;
    for (int n = 0; n <= 18; ++n) CHECK(distinct_odd_q(n) == count_partitions(n, odd));
}

// The restricted divisor sum b_m(a) = sum_{d : (alpha d - beta) | m} a_d is the
// m-th coefficient of sum_d a_d q^{alpha d - beta}/(1 - q^{alpha d - beta}).
TEST_CASE("restricted divisor sums equal generalized Lambert coefficients") {
    const int N = 60;
    std::vector<BigInt> a(N + 2);
    for (long long i = 0; i < N + 2; ++i) a[i] = ((i * 2654435761LL) % 19) - 9;
    IntFn af = [&](long long m) { return a[static_cast<size_t>(m)]; };
    for (auto [al, be] : {std::pair{2, 1}, {3, 1}, {3, 2}, {1, 0}}) {
        IntSeries lhs(N + 1, BigInt(0));
        for (long long m = 1; m <= N; ++m) {
            long long e = al * m - be;
            if (e < 1 || e > N) continue;
            for (long long i = e; i <= N; i += e) lhs[i] += a[m];
        }
        for (long long m = 1; m <= N; ++m)
            CHECK(lhs[m] == restricted_divisor_sum(af, al, be, m));
    }
    CHECK(restricted_divisor_sum(one_fn, 2, 1, 6) == 2);
}

// Seven-family coefficient displays: for multiplicative weights f,
//   sum_k b_k(f) tq(n-k) = (-1)^{n-1} sum_k f(k) #{distinct odd partitions of n
//                                                  containing part 2k-1}.
TEST_CASE("distinct-odd coefficient displays for classical weights") {
    const int N = 25;
    PartitionConstraint c;
    c.kind = PartKind::DISTINCT_ODD;
    std::vector<IntFn> fns = {mu, phi, liouville, mu_abs,
                              [](long long n) { return jordan(2, n); },
                              [](long long n) { return BigInt(n) * n; }};
    for (const IntFn& f : fns) {
        for (long long n = 1; n <= N; ++n) {
            BigInt lhs = 0;
            for (long long k = 1; k <= n; ++k)
                lhs += restricted_divisor_sum(f, 2, 1, k) * tilde_q(n - k);
            BigInt rhs = 0;
            for (long long k = 1; k <= n; ++k)
                rhs += f(k) * count_occurrences(n, 2 * k - 1, c);
            if (n % 2 == 0) rhs = -rhs;
            CHECK(lhs == rhs);
        }
    }
}

// Same display for r2 needs the (-1)^{n-1} on the right too (r2 = 4 sum chi4).
TEST_CASE("r2 distinct-odd display with alternating weights") {
    const int N = 25;
    PartitionConstraint c;
    c.kind = PartKind::DISTINCT_ODD;
    for (long long n = 1; n <= N; ++n) {
        BigInt lhs = 0;
        for (long long k = 1; k <= n; ++k) lhs += r2(k) * tilde_q(n - k);
        BigInt rhs = 0;
        for (long long k = 1; k <= n; ++k) {
            BigInt term = 4 * count_occurrences(n, 2 * k - 1, c);
            rhs += (k % 2 == 1) ? term : -term;
        }
        if (n % 2 == 0) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

// Expansion against 1/(q;q^2)_inf: b_n(a) = sum_k q(n-k) (-1)^{k-1} (S a)_k
// where (S a)_k weights the distinct-odd occurrence counts.
TEST_CASE("q(n)-expansion of the restricted divisor sum") {
    const int N = 25;
    PartitionConstraint c;
    c.kind = PartKind::DISTINCT_ODD;
    std::vector<BigInt> a(N + 1);
    for (long long i = 0; i <= N; ++i) a[i] = ((i * 31) % 7) - 3;
    IntFn af = [&](long long m) { return a[static_cast<size_t>(m)]; };
    for (long long n = 1; n <= N; ++n) {
        BigInt bn = restricted_divisor_sum(af, 2, 1, n);
        BigInt tot = 0;
        for (long long k = 1; k <= n; ++k) {
            BigInt Sa = 0;
            for (long long j = 1; j <= k; ++j)
                Sa += count_occurrences(k, 2 * j - 1, c) * a[static_cast<size_t>(j)];
            BigInt term = distinct_odd_q(n - k) * Sa;
            tot += (k % 2 == 1) ? term : -term;
        }
        CHECK(bn == tot);
    }
    // and the double-sum r2 recovery with its interior sign
    for (long long n = 1; n <= N; ++n) {
        BigInt tot = 0;
        for (long long k = 0; k <= n; ++k) {
            BigInt inner = 0;
            for (long long j = 1; j <= k; ++j) {
                BigInt sk = count_occurrences(k, 2 * j - 1, c);
                inner += (j % 2 == 1) ? 4 * sk : -4 * sk;
            }
            BigInt term = distinct_odd_q(n - k) * inner;
            tot += (k % 2 == 1) ? term : -term;
        }
        CHECK(tot == r2(n));
    }
}
