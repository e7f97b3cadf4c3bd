#pragma once
// Partition function p(n) via the pentagonal-number recurrence, plus
// exhaustive partition enumerators used as independent combinatorial oracles.

#include <algorithm>
#include <functional>
#include <vector>

#include "lambert/ring.hpp"

namespace lambert {

// p(0..N) computed by Euler's pentagonal recurrence:
//   p(n) = sum_{j>=1} (-1)^{j-1} [ p(n - j(3j-1)/2) + p(n - j(3j+1)/2) ].
inline std::vector<BigInt> partition_table(int N) {
    std::vector<BigInt> p(static_cast<size_t>(N) + 1);
    p[0] = 1;
    for (int n = 1; n <= N; ++n) {
        BigInt s = 0;
        for (int j = 1;; ++j) {
            long long g1 = static_cast<long long>(j) * (3LL * j - 1) / 2;
            long long g2 = static_cast<long long>(j) * (3LL * j + 1) / 2;
            if (g1 > n) break;
            BigInt t = p[n - g1];
            if (g2 <= n) t += p[n - g2];
            s += (j % 2 == 1) ? t : -t;
        }
        p[n] = s;
    }
    return p;
}

// Scalar p(n); p(n) = 0 for n < 0 so shifted uses p_k(n) := p(n-k) work directly.
// The memo grows monotonically; warm it with partition_warm() before any
// parallel region that reads p concurrently.
namespace detail {
inline std::vector<BigInt>& partition_memo() {
    static std::vector<BigInt> memo = partition_table(64);
    return memo;
}
}  // namespace detail

inline void partition_warm(int N) {
    auto& memo = detail::partition_memo();
    if (static_cast<int>(memo.size()) <= N) memo = partition_table(N + 64);
}

inline BigInt partition_p(long long n) {
    if (n < 0) return BigInt(0);
    auto& memo = detail::partition_memo();
    if (n >= static_cast<long long>(memo.size())) partition_warm(static_cast<int>(n));
    return detail::partition_memo()[static_cast<size_t>(n)];
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration (exponential; intended for oracle tests at n <= ~40).

enum class PartKind { ALL, DISTINCT_ODD, PARTS_IN_PROGRESSION, DISTINCT_PARTS_IN_PROGRESSION };
enum class ParityFilter { NONE, EVEN_COUNT, ODD_COUNT };

struct PartitionConstraint {
    PartKind kind = PartKind::ALL;
    long long alpha = 1, beta = 0;  // parts of the form alpha*k - beta, k >= 1
    ParityFilter parity = ParityFilter::NONE;

    bool part_allowed(long long x) const {
        switch (kind) {
            case PartKind::ALL: return true;
            case PartKind::DISTINCT_ODD: return x % 2 == 1;
            case PartKind::PARTS_IN_PROGRESSION:
            case PartKind::DISTINCT_PARTS_IN_PROGRESSION:
                return (x + beta) % alpha == 0 && (x + beta) / alpha >= 1;
        }
        return false;
    }
    bool distinct() const {
        return kind == PartKind::DISTINCT_ODD || kind == PartKind::DISTINCT_PARTS_IN_PROGRESSION;
    }
};

// Visit every partition of n (parts weakly decreasing) satisfying the
// constraint; the callback receives the parts list.
inline void for_each_partition(long long n, const PartitionConstraint& c,
                               const std::function<void(const std::vector<long long>&)>& visit) {
    std::vector<long long> parts;
    std::function<void(long long, long long)> rec = [&](long long rem, long long maxpart) {
        if (rem == 0) {
            size_t len = parts.size();
            if (c.parity == ParityFilter::EVEN_COUNT && len % 2 != 0) return;
            if (c.parity == ParityFilter::ODD_COUNT && len % 2 != 1) return;
            visit(parts);
            return;
        }
        for (long long x = std::min(rem, maxpart); x >= 1; --x) {
            if (!c.part_allowed(x)) continue;
            parts.push_back(x);
            rec(rem - x, c.distinct() ? x - 1 : x);
            parts.pop_back();
        }
    };
    rec(n, n);
}

// Total occurrences of part_value across all partitions of n satisfying c.
inline long long count_occurrences(long long n, long long part_value, const PartitionConstraint& c) {
    long long total = 0;
    for_each_partition(n, c, [&](const std::vector<long long>& parts) {
        for (long long x : parts)
            if (x == part_value) ++total;
    });
    return total;
}

// Occurrences of the part alpha*k - beta in odd-length minus even-length
// partitions of n into distinct parts of the form alpha*j - beta.
inline long long signed_occurrences(long long n, long long k, long long alpha, long long beta) {
    PartitionConstraint c;
    c.kind = PartKind::DISTINCT_PARTS_IN_PROGRESSION;
    c.alpha = alpha;
    c.beta = beta;
    c.parity = ParityFilter::ODD_COUNT;
    long long odd = count_occurrences(n, alpha * k - beta, c);
    c.parity = ParityFilter::EVEN_COUNT;
    long long even = count_occurrences(n, alpha * k - beta, c);
    return odd - even;
}

// Number of partitions of n satisfying c.
inline BigInt count_partitions(long long n, const PartitionConstraint& c) {
    BigInt total = 0;
    for_each_partition(n, c, [&](const std::vector<long long>&) { ++total; });
    return total;
}

}  // namespace lambert
