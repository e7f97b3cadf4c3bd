#pragma once
// Classical multiplicative / additive arithmetic functions, Dirichlet
// convolution algebra, and the restricted divisor sums that give generalized
// Lambert series their coefficients.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambert/ring.hpp"

namespace lambert {

using IntFn = std::function<BigInt(long long)>;
using LogLinFn = std::function<LogLin(long long)>;

// ------------------------------------------------------------- factorization

namespace detail {
// Smallest-prime-factor sieve, grown on demand (desk scale: default 2^20).
inline std::vector<int32_t>& spf_sieve(long long need = 0) {
    static std::vector<int32_t> spf;
    size_t want = std::max<size_t>(static_cast<size_t>(need) + 1, size_t{1} << 20);
    if (spf.size() < want) {
        spf.assign(want, 0);
        for (size_t i = 2; i < want; ++i)
            if (spf[i] == 0)
                for (size_t j = i; j < want; j += i)
                    if (spf[j] == 0) spf[j] = static_cast<int32_t>(i);
    }
    return spf;
}
}  // namespace detail

// n = prod p^e as sorted (p, e) pairs.
inline std::vector<std::pair<long long, int>> factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<long long, int>> out;
    auto& spf = detail::spf_sieve();
    while (n > 1) {
        long long p;
        if (n < static_cast<long long>(spf.size())) {
            p = spf[static_cast<size_t>(n)];
        } else {
            p = n;
            for (long long q = 2; q * q <= n; ++q)
                if (n % q == 0) { p = q; break; }
        }
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        out.emplace_back(p, e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<long long> divisors(long long n) {
    std::vector<long long> divs{1};
    for (auto [p, e] : factorize(n)) {
        size_t sz = divs.size();
        long long pk = 1;
        for (int i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// ------------------------------------------------------ classical functions

inline BigInt mu(long long n) {
    BigInt r = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1) return BigInt(0);
        r = -r;
    }
    return r;
}

inline BigInt phi(long long n) {
    BigInt r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

inline BigInt sigma(int t, long long n) {
    BigInt r = 1;
    for (auto [p, e] : factorize(n)) {
        BigInt term = 0, pk = 1;
        BigInt pt = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(t));
        for (int i = 0; i <= e; ++i) { term += pk; pk *= pt; }
        r *= term;
    }
    return r;
}

inline BigInt id_t(int t, long long n) {
    return boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(t));
}

inline BigInt liouville(long long n) {
    int omega_big = 0;
    for (auto [p, e] : factorize(n)) omega_big += e;
    return (omega_big % 2 == 0) ? BigInt(1) : BigInt(-1);
}

inline BigInt mu_abs(long long n) {
    for (auto [p, e] : factorize(n))
        if (e > 1) return BigInt(0);
    return BigInt(1);
}

inline BigInt omega_fn(long long n) { return BigInt(factorize(n).size()); }

inline BigInt jordan(int t, long long n) {
    // J_t(n) = n^t * prod_{p|n} (1 - p^{-t}), computed exactly as
    // prod p^{t(e-1)} (p^t - 1) over the factorization.
    BigInt r = 1;
    for (auto [p, e] : factorize(n)) {
        BigInt pt = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(t));
        r *= boost::multiprecision::pow(pt, static_cast<unsigned>(e - 1)) * (pt - 1);
    }
    return r;
}

// r2(n) = 4 (d_1(n) - d_3(n)): representations of n as an ordered sum of two
// squares counting signs.
inline BigInt r2(long long n) {
    BigInt d1 = 0, d3 = 0;
    for (long long d : divisors(n)) {
        if (d % 4 == 1) ++d1;
        if (d % 4 == 3) ++d3;
    }
    return 4 * (d1 - d3);
}

inline BigInt one_fn(long long) { return BigInt(1); }
inline BigInt eps_fn(long long n) { return BigInt(n == 1 ? 1 : 0); }

// chi4: the nontrivial character mod 4 (r2/4 = chi4 * 1).
inline BigInt chi4(long long n) {
    if (n % 2 == 0) return BigInt(0);
    return BigInt(n % 4 == 1 ? 1 : -1);
}

inline LogLin log_fn(long long n) {
    LogLin v;
    for (auto [p, e] : factorize(n)) v.terms[p] = e;
    return v;
}

inline LogLin vonmangoldt(long long n) {
    LogLin v;
    auto f = factorize(n);
    if (f.size() == 1) v.terms[f[0].first] = 1;  // Lambda(p^e) = log p
    return v;
}

// --------------------------------------------------------- Dirichlet algebra

inline BigInt dirichlet_convolve_at(const IntFn& f, const IntFn& g, long long n) {
    BigInt s = 0;
    for (long long d : divisors(n)) s += f(d) * g(n / d);
    return s;
}

inline IntFn dirichlet_convolve(IntFn f, IntFn g) {
    return [f = std::move(f), g = std::move(g)](long long n) {
        return dirichlet_convolve_at(f, g, n);
    };
}

// Mixed-ring convolution: INT embeds into LOGLIN.
inline LogLin dirichlet_convolve_at(const LogLinFn& f, const IntFn& g, long long n) {
    LogLin s;
    for (long long d : divisors(n)) s += f(d) * g(n / d);
    return s;
}

// f^{-1}(1) = 1/f(1);  f^{-1}(n) = -1/f(1) * sum_{d|n, d<n} f(n/d) f^{-1}(d).
// Memoized; requires f(1) to be a unit (+-1 over INT).
inline IntFn dirichlet_inverse(IntFn f) {
    auto memo = std::make_shared<std::map<long long, BigInt>>();
    auto self = std::make_shared<std::function<BigInt(long long)>>();
    BigInt f1 = f(1);
    if (f1 != 1 && f1 != -1)
        throw std::domain_error("dirichlet_inverse: f(1) is not a unit");
    *self = [f = std::move(f), f1, memo, self](long long n) -> BigInt {
        if (auto it = memo->find(n); it != memo->end()) return it->second;
        BigInt v;
        if (n == 1) {
            v = f1;  // +-1 is self-inverse
        } else {
            BigInt s = 0;
            for (long long d : divisors(n))
                if (d < n) s += f(n / d) * (*self)(d);
            v = -f1 * s;
        }
        (*memo)[n] = v;
        return v;
    };
    return [self](long long n) { return (*self)(n); };
}

// b_m(a; alpha, beta) = sum over d >= 1 with alpha*d - beta >= 1 and
// (alpha*d - beta) | m of a_d.  Any integer beta with positive exponents is
// accepted (the signed-offset dual constructions need beta of either sign).
inline BigInt restricted_divisor_sum(const IntFn& a, long long alpha, long long beta, long long m) {
    if (alpha < 1 || m < 1) throw std::invalid_argument("restricted_divisor_sum: alpha, m must be >= 1");
    BigInt s = 0;
    for (long long t : divisors(m)) {
        if ((t + beta) % alpha != 0) continue;
        long long d = (t + beta) / alpha;
        if (d >= 1 && alpha * d - beta >= 1) s += a(d);
    }
    return s;
}

inline BigInt summatory(const IntFn& a, long long x) {
    if (x < 1) throw std::invalid_argument("summatory: x must be >= 1");
    BigInt s = 0;
    for (long long n = 1; n <= x; ++n) s += a(n);
    return s;
}

// ------------------------------------------------------------------ registry

// A named arithmetic function carrying its ring: INT functions expose fi,
// the two log-valued ones (log, vonmangoldt) expose fl instead.
struct ArithFn {
    std::string name;
    Ring ring = Ring::INT;
    IntFn fi;
    LogLinFn fl;
};

// classical(name): mu, phi, sigma_t / id_t / jordan_t (t a nonnegative or
// positive integer suffix, e.g. "sigma_1"), liouville, vonmangoldt, mu_abs,
// omega, r2, one, log, eps.
inline ArithFn classical(const std::string& name) {
    auto suffixed = [&](const std::string& prefix, int min_t, int* t_out) {
        if (name.rfind(prefix, 0) != 0) return false;
        std::string rest = name.substr(prefix.size());
        if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("classical: bad integer suffix in '" + name + "'");
        int t = std::stoi(rest);
        if (t < min_t) throw std::invalid_argument("classical: suffix out of range in '" + name + "'");
        *t_out = t;
        return true;
    };
    int t = 0;
    if (name == "mu") return {name, Ring::INT, mu, nullptr};
    if (name == "phi") return {name, Ring::INT, phi, nullptr};
    if (name == "liouville") return {name, Ring::INT, liouville, nullptr};
    if (name == "mu_abs") return {name, Ring::INT, mu_abs, nullptr};
    if (name == "omega") return {name, Ring::INT, omega_fn, nullptr};
    if (name == "r2") return {name, Ring::INT, r2, nullptr};
    if (name == "one") return {name, Ring::INT, one_fn, nullptr};
    if (name == "eps") return {name, Ring::INT, eps_fn, nullptr};
    if (name == "log") return {name, Ring::LOGLIN, nullptr, log_fn};
    if (name == "vonmangoldt") return {name, Ring::LOGLIN, nullptr, vonmangoldt};
    if (suffixed("sigma_", 0, &t)) return {name, Ring::INT, [t](long long n) { return sigma(t, n); }, nullptr};
    if (suffixed("id_", 0, &t)) return {name, Ring::INT, [t](long long n) { return id_t(t, n); }, nullptr};
    if (suffixed("jordan_", 1, &t)) return {name, Ring::INT, [t](long long n) { return jordan(t, n); }, nullptr};
    throw std::invalid_argument("classical: unknown function '" + name + "'");
}

// A finite table as an arithmetic function; values are 1-indexed (table[0] is
// a_1), entries beyond the table are an error.
inline IntFn table_fn(std::vector<BigInt> table) {
    auto data = std::make_shared<std::vector<BigInt>>(std::move(table));
    return [data](long long n) -> BigInt {
        if (n < 1 || n > static_cast<long long>(data->size()))
            throw std::out_of_range("sequence table: index " + std::to_string(n) + " out of range");
        return (*data)[static_cast<size_t>(n - 1)];
    };
}

}  // namespace lambert
