#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambert/arith.hpp"
#include "lambert/variants.hpp"

using namespace lambert;

static IntFn sigma1 = [](long long n) { return sigma(1, n); };

TEST_CASE("s1 closed form: pentagonal head minus leading row entries") {
    const int N = 25;
    TriMatrix<BigInt> s = ordinary_snk(N);
    TriMatrix<BigInt> s1 = s1_matrix(N);
    for (int n = 1; n <= N; ++n) {
        std::vector<BigInt> dseq(static_cast<size_t>(n) + 1, BigInt(0));
        for (long long m = 1; m <= n; ++m) dseq[static_cast<size_t>(m)] = sigma(0, m);
        BigInt head = pentagonal_B(dseq, n);
        BigInt lead = 0;
        for (int k = 1; k <= n; ++k) {
            CHECK(s1.at(n, k) == head - lead);
            lead += s.at(n, k);
        }
    }
}

TEST_CASE("s2 closed form and row reconstruction") {
    const int N = 25;
    TriMatrix<BigInt> s = ordinary_snk(N);
    TriMatrix<BigInt> s2 = s2_matrix(N);
    for (int n = 1; n <= N; ++n)
        for (int k = 1; k <= n; ++k) {
            CHECK(s2.at(n, k) == s.at(n, k) - s.get(n, k + 1));
            // s_{n,k} = sum_{i=0}^{n-k} s2_{n,n-i}
            BigInt acc = 0;
            for (int i = 0; i <= n - k; ++i) acc += s2.at(n, n - i);
            CHECK(acc == s.at(n, k));
        }
}

TEST_CASE("closed-form inverses of s1 and s2 verified by multiplication") {
    const int N = 25;
    auto I = TriMatrix<BigInt>::identity(N);
    TriMatrix<BigInt> s1 = s1_matrix(N), s1i = s1_inverse(N);
    CHECK(tri_mul(s1i, s1) == I);
    CHECK(tri_mul(s1, s1i) == I);
    TriMatrix<BigInt> s2 = s2_matrix(N), s2i = s2_inverse(N);
    CHECK(tri_mul(s2i, s2) == I);
    CHECK(tri_mul(s2, s2i) == I);
}

TEST_CASE("row sums against pentagonal B-weights of convolved summatories") {
    const int N = 25;
    TriMatrix<BigInt> s1 = s1_matrix(N), s2 = s2_matrix(N);
    std::vector<BigInt> a(static_cast<size_t>(N) + 1), A(static_cast<size_t>(N) + 1, BigInt(0));
    for (long long i = 1; i <= N; ++i) {
        a[static_cast<size_t>(i)] = ((i * 2654435761LL) % 19) - 9;
        A[static_cast<size_t>(i)] = A[static_cast<size_t>(i - 1)] + a[static_cast<size_t>(i)];
    }
    std::vector<BigInt> A1(static_cast<size_t>(N) + 1, BigInt(0)), a1(static_cast<size_t>(N) + 1, BigInt(0));
    for (long long n = 1; n <= N; ++n)
        for (long long d : divisors(n)) {
            A1[static_cast<size_t>(n)] += A[static_cast<size_t>(d)];
            a1[static_cast<size_t>(n)] += a[static_cast<size_t>(d)];
        }
    for (int n = 1; n <= N; ++n) {
        BigInt lhs1 = 0, lhs2 = 0;
        for (int k = 1; k <= n; ++k) {
            lhs1 += s1.at(n, k) * a[static_cast<size_t>(k)];
            lhs2 += s2.at(n, k) * A[static_cast<size_t>(k)];
        }
        CHECK(lhs1 == pentagonal_B(A1, n));
        CHECK(lhs2 == pentagonal_B(a1, n));
    }
}

TEST_CASE("sequence recovery from summatory data") {
    const int N = 25;
    std::vector<IntFn> fs = {phi, sigma1};
    for (const IntFn& f : fs) {
        auto ra = recover_a(f, N);
        auto rA = recover_A(f, N);
        BigInt A = 0;
        for (long long n = 1; n <= N; ++n) {
            A += f(n);
            if (n >= 2) CHECK(ra[static_cast<size_t>(n)] == f(n));
            CHECK(rA[static_cast<size_t>(n)] == A);
        }
    }
}

TEST_CASE("weighted variant with three weight choices") {
    CHECK(weighted_variant_check(one_fn, 15));
    IntFn wi = [](long long i) { return BigInt(i); };
    CHECK(weighted_variant_check(wi, 15));
    IntFn walt = [](long long i) { return BigInt(i % 2 == 0 ? 1 : -1); };
    CHECK(weighted_variant_check(walt, 15));
    IntFn wzero = [](long long i) { return BigInt(i == 3 ? 0 : 1); };
    CHECK_THROWS_AS(weighted_variant_check(wzero, 10), std::domain_error);
}

TEST_CASE("plus-minus transform") {
    IntFn b = pm_transform(eps_fn);
    CHECK(b(1) == 1);
    CHECK(b(2) == -2);
    CHECK(b(3) == 0);
    IntFn rnd = [](long long n) { return BigInt(((n * 2654435761LL) % 19) - 9); };
    IntFn br = pm_transform(rnd);
    for (long long n = 1; n <= 20; ++n) {
        if (n % 2 == 1) CHECK(br(n) == rnd(n));
        else CHECK(br(n) == rnd(n) - 2 * rnd(n / 2));
    }
    CHECK(pm_transform_series_check(rnd, 50));
    CHECK(pm_transform_series_check(phi, 50));
}

TEST_CASE("degenerate-inverse residual report, alpha = 2 (prefix)") {
    auto rep = conjecture_degenerate_int(2, 100);
    CHECK_FALSE(rep.singular);
    CHECK(rep.nonzero_rows == std::vector<int>{58, 67, 76, 85, 94, 97, 99});
    // the first failing row has a single residual at k = 1 of value 1
    CHECK(rep.residuals.size() >= 1);
    auto it = rep.residuals.begin();
    CHECK(it->first.first == 58);
    CHECK(it->first.second == 1);
    CHECK(it->second == 1);
    json j = rep.to_json_report();
    CHECK(j.at("kind") == "degenerate");
    CHECK(j.at("nonzero_rows").size() == 7);
}

TEST_CASE("degenerate-inverse residual report, alpha = 3 (clean prefix)") {
    auto rep = conjecture_degenerate_int(3, 60);
    CHECK(rep.nonzero_rows == std::vector<int>{21, 37, 53});
    auto it = rep.residuals.begin();
    CHECK(it->first == std::make_pair(21, 1));
    CHECK(it->second == 1);
}

TEST_CASE("degenerate-inverse residual report, d-weighted (prefix)") {
    auto rep = conjecture_degenerate_d(2, 45);
    CHECK_FALSE(rep.singular);
    CHECK(rep.nonzero_rows == std::vector<int>{13, 22, 31, 37, 40});
    // first residual: at (13,1) the polynomial d^2 - d (vanishes at d = 1)
    auto it = rep.residuals.begin();
    CHECK(it->first == std::make_pair(13, 1));
    PolyD want;
    want.c = {BigInt(0), BigInt(-1), BigInt(1)};
    CHECK(it->second == want);
    CHECK(it->second.eval_at_one() == 0);
    CHECK_THROWS_AS(conjecture_degenerate_d(3, 10), std::invalid_argument);
}

TEST_CASE("report json for the d-weighted scan renders polynomial residuals") {
    auto rep = conjecture_degenerate_d(2, 14);
    json j = rep.to_json_report();
    CHECK(j.at("d_param") == true);
    REQUIRE(j.at("residuals").size() >= 1);
    CHECK(j.at("residuals")[0].at("n") == 13);
}
