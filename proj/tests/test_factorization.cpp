#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lambert/arith.hpp"
#include "lambert/factorization.hpp"
#include "lambert/io.hpp"
#include "lambert/partitions.hpp"
#include "lambert/series.hpp"
#include "lambert/tri_matrix.hpp"

using namespace lambert;

static std::string golden(const std::string& name) {
    return read_file(std::string(LAMBERT_DATA_DIR) + "/" + name);
}

TEST_CASE("reference matrix over Z, N=16, params (1,0,2,1)") {
    TriMatrix<BigInt> s = snk_matrix_int(pochhammer(1, 1, 16), {1, 0, 2, 1}, 16);
    CHECK(tri_to_csv(s) == golden("fig1_i.csv"));
    auto inv = tri_invert_or_throw(s);
    CHECK(tri_to_csv(inv) == golden("fig1_ii.csv"));
    CHECK(tri_to_csv(p1_deconvolution(inv)) == golden("fig1_iii.csv"));
    CHECK(recurrence_check(s, inv));
}

TEST_CASE("reference matrix over Z[d], N=10") {
    TriMatrix<PolyD> s = snk_matrix_poly(pochhammer(1, 1, 10), {1, 0, 2, 1}, 10);
    CHECK(tri_to_csv(s) == golden("fig2_i.csv"));
    auto inv = std::get<TriMatrix<PolyD>>(tri_invert(s));
    CHECK(tri_to_csv(inv) == golden("fig2_ii.csv"));
    CHECK(inv.at(10, 1).str() == "-d^3-2d+30");
    CHECK(tri_to_csv(p1_deconvolution(inv)) == golden("fig2_iii.csv"));
    // setting d = 1 recovers the integer matrices entrywise
    TriMatrix<BigInt> si = snk_matrix_int(pochhammer(1, 1, 10), {1, 0, 2, 1}, 10);
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) CHECK(s.at(n, k).eval_at_one() == si.at(n, k));
}

TEST_CASE("params validation") {
    CHECK_THROWS_AS(LambertParams({0, 1, 1, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(LambertParams({1, -1, 1, 0}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(LambertParams({1, 0, 1, -1}).validate(), std::invalid_argument);
    CHECK_NOTHROW(LambertParams({2, -1, 2, -1}).validate());
    CHECK_NOTHROW(LambertParams({1, 0, 2, 1}).validate());
}

TEST_CASE("factorization identity for named coefficient sequences") {
    FactorizationPair fp{pochhammer(1, 1, 16), {1, 0, 2, 1}, false};
    CHECK(factorization_check(mu, fp, 16));
    CHECK(factorization_check(phi, fp, 16));
    FactorizationPair ord{pochhammer(1, 1, 30), {1, 0, 1, 0}, false};
    CHECK(factorization_check(one_fn, ord, 30));
    IntFn s1f = [](long long n) { return sigma(1, n); };
    CHECK(factorization_check(s1f, ord, 30));
}

TEST_CASE("ordinary matrix columns count restricted partitions") {
    // s_{n,k} for params (1,0,1,0), C=(q;q)_inf: [q^n] q^k/(1-q^k) (q;q)_inf
    TriMatrix<BigInt> s = snk_matrix_int(pochhammer(1, 1, 20), {1, 0, 1, 0}, 20);
    IntSeries qq = pochhammer(1, 1, 20);
    for (int k = 1; k <= 20; ++k) {
        IntSeries t = series_mul(lambert_term(k, k, 20), qq);
        for (int n = k; n <= 20; ++n) CHECK(s.at(n, k) == t[static_cast<size_t>(n)]);
    }
}

TEST_CASE("shift relation: offset params re-index the ordinary matrix") {
    for (auto [al, be, de] : {std::tuple{2LL, 1LL, 3LL}, {3LL, 1LL, 2LL}, {3LL, 2LL, 4LL}})
        CHECK(shift_relation_check(al, be, de, 24));
}

TEST_CASE("degenerate matched-offset params are singular") {
    // numerator and denominator exponents both alpha*k - beta: row <= 2a hits a
    // zero diagonal
    TriMatrix<BigInt> s = snk_matrix_int(pochhammer(1, 1, 12), {2, -1, 2, -1}, 12);
    auto inv = tri_invert(s);
    REQUIRE(std::holds_alternative<SingularReport>(inv));
    CHECK(std::get<SingularReport>(inv).row <= 4);
}

TEST_CASE("pentagonal B-sums") {
    std::vector<BigInt> b = {BigInt(0),  BigInt(3), BigInt(-1), BigInt(4), BigInt(1),
                             BigInt(-5), BigInt(9), BigInt(2),  BigInt(6), BigInt(-3)};
    CHECK(pentagonal_B(b, 1) == b[1] - b[0]);
    CHECK(pentagonal_B(b, 2) == b[2] - b[1] - b[0]);
    CHECK(pentagonal_B(b, 5) == b[5] - b[4] - b[3] + b[0]);
    CHECK(pentagonal_B(b, 7) == b[7] - b[6] - b[5] + b[2] + b[0]);
    // against the series product (q;q)_inf * sum b_m q^m (with b_0 at q^0)
    const int N = 9;
    IntSeries bs(b.begin(), b.end());
    IntSeries prod = series_mul(pochhammer(1, 1, N), bs);
    for (long long k = 0; k <= N; ++k) CHECK(pentagonal_B(b, k) == prod[static_cast<size_t>(k)]);
    // nonzero b_0 matters
    std::vector<BigInt> c = {BigInt(99), BigInt(5)};
    CHECK(pentagonal_B(c, 1) == -94);
}

TEST_CASE("b_weight_series exponent placement") {
    // a = eps picks out the single term q^{alpha+beta}/(1-q^{alpha+beta})
    IntSeries B = b_weight_series(eps_fn, 3, 1, series_const_one<BigInt>(20), 20);
    for (int i = 0; i <= 20; ++i) CHECK(B[i] == ((i >= 4 && i % 4 == 0) ? 1 : 0));
}

TEST_CASE("gamma-built inverse-style matrix") {
    // with gamma = eps the entries collapse to C^{-1} coefficients
    IntSeries C = pochhammer(1, 1, 18);
    TriMatrix<BigInt> g = gamma_inverse_matrix(eps_fn, C, 18);
    for (int n = 1; n <= 18; ++n)
        for (int k = 1; k <= n; ++k) CHECK(g.at(n, k) == partition_p(n - k));
    // spot value from the gamma = one column
    TriMatrix<BigInt> g1 = gamma_inverse_matrix(one_fn, C, 18);
    CHECK(g1.at(4, 1) == 5);
}

TEST_CASE("dual-route transform agrees (plus route)") {
    IntFn id1 = [](long long n) { return BigInt(n); };
    IntSeries C = pochhammer(1, 1, 41);
    for (auto [al, be] : {std::pair{2LL, 1LL}, {3LL, 1LL}, {3LL, 2LL}})
        for (long long n = 1; n <= 25; ++n) {
            CHECK(bar_a_closed(one_fn, id1, al, be, n) == bar_a_via_matrix(one_fn, id1, al, be, C, n));
            CHECK(bar_a_closed(mu, phi, al, be, n) == bar_a_via_matrix(mu, phi, al, be, C, n));
        }
}

TEST_CASE("dual-route transform agrees (minus route)") {
    IntFn id1 = [](long long n) { return BigInt(n); };
    IntSeries C = pochhammer(1, 1, 41);
    for (auto [al, be] : {std::pair{2LL, 1LL}, {3LL, 1LL}, {3LL, 2LL}})
        for (long long n = 1; n <= 25; ++n) {
            CHECK(bar_a_closed_minus(one_fn, id1, al, be, n) ==
                  bar_a_via_matrix_minus(one_fn, id1, al, be, C, n));
            CHECK(bar_a_closed_minus(mu, phi, al, be, n) ==
                  bar_a_via_matrix_minus(mu, phi, al, be, C, n));
        }
}

// Matrix entries vs exhaustive partition statistics, small grid (the
// acceptance run extends this to n <= 25).
TEST_CASE("signed occurrence binding (distinct parts in progression)") {
    const int N = 14;
    for (auto [al, be] : {std::pair{1LL, 0LL}, {2LL, 1LL}, {3LL, 2LL}}) {
        IntSeries C = pochhammer(al - be, al, N);
        TriMatrix<BigInt> s = snk_matrix_int(C, {al, -be, al, -be}, N);
        for (long long n = 1; n <= N; ++n)
            for (long long k = 1; k <= n; ++k) {
                if (al * k - be > n) continue;
                CHECK(s.at(static_cast<int>(n), static_cast<int>(k)) ==
                      signed_occurrences(n, k, al, be));
            }
    }
}

TEST_CASE("occurrence-count binding (all parts in progression)") {
    const int N = 14;
    for (auto [al, be] : {std::pair{1LL, 0LL}, {2LL, 1LL}, {3LL, 2LL}}) {
        IntSeries C = series_inverse(pochhammer(al - be, al, N));
        TriMatrix<BigInt> s = snk_matrix_int(C, {al, -be, al, -be}, N);
        PartitionConstraint c;
        c.kind = PartKind::PARTS_IN_PROGRESSION;
        c.alpha = al;
        c.beta = be;
        for (long long n = 1; n <= N; ++n)
            for (long long k = 1; k <= n; ++k)
                CHECK(s.at(static_cast<int>(n), static_cast<int>(k)) ==
                      count_occurrences(n, al * k - be, c));
    }
}

TEST_CASE("alternating distinct-odd binding") {
    const int N = 14;
    TriMatrix<BigInt> s = snk_matrix_int(pochhammer(1, 2, N), {2, -1, 2, -1}, N);
    PartitionConstraint c;
    c.kind = PartKind::DISTINCT_ODD;
    for (long long n = 1; n <= N; ++n)
        for (long long k = 1; k <= n; ++k) {
            BigInt cnt = count_occurrences(n, 2 * k - 1, c);
            CHECK(s.at(static_cast<int>(n), static_cast<int>(k)) == (n % 2 == 1 ? cnt : -cnt));
        }
}

TEST_CASE("factorization_check rejects short C") {
    FactorizationPair fp{pochhammer(1, 1, 10), {1, 0, 1, 0}, false};
    CHECK_THROWS_AS(factorization_check(one_fn, fp, 11), std::invalid_argument);
}
