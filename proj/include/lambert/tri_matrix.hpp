#pragma once
// Lower-triangular matrices with exact entries: inversion by forward
// substitution (OpenMP-parallel across columns, with a serial reference
// implementation kept for testing), multiplication, and the
// determinant-recurrence consistency check.

#include <random>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lambert/ring.hpp"

namespace lambert {

// Row-ragged storage: rows[n-1] holds entries (n,1)..(n,n), 1-based indices.
template <class T>
struct TriMatrix {
    int n = 0;
    std::vector<std::vector<T>> rows;

    TriMatrix() = default;
    explicit TriMatrix(int size) : n(size), rows(static_cast<size_t>(size)) {
        for (int i = 1; i <= size; ++i)
            rows[i - 1].assign(static_cast<size_t>(i), ring_zero<T>());
    }

    T& at(int r, int c) { return rows[r - 1][c - 1]; }
    const T& at(int r, int c) const { return rows[r - 1][c - 1]; }
    // entry with implicit zeros above the diagonal / outside the range
    T get(int r, int c) const {
        if (r < 1 || r > n || c < 1 || c > r) return ring_zero<T>();
        return rows[r - 1][c - 1];
    }

    friend bool operator==(const TriMatrix& a, const TriMatrix& b) {
        return a.n == b.n && a.rows == b.rows;
    }

    static TriMatrix identity(int size) {
        TriMatrix m(size);
        for (int i = 1; i <= size; ++i) m.at(i, i) = ring_one<T>();
        return m;
    }
};

struct SingularReport {
    int row = 0;  // first row whose diagonal entry is not invertible in the ring
};

template <class T>
using InvertResult = std::variant<TriMatrix<T>, SingularReport>;

// Forward substitution, one column at a time:
//   X(c,c) = M(c,c)^{-1};  X(r,c) = -M(r,r)^{-1} * sum_{m=c}^{r-1} M(r,m) X(m,c).
// Columns are independent, so they parallelize directly.
template <class T>
inline InvertResult<T> tri_invert_impl(const TriMatrix<T>& m, bool parallel) {
    for (int i = 1; i <= m.n; ++i)
        if (!is_unit(m.at(i, i))) return SingularReport{i};
    TriMatrix<T> x(m.n);
    std::vector<T> dinv(static_cast<size_t>(m.n));
    for (int i = 1; i <= m.n; ++i) dinv[i - 1] = unit_inverse(m.at(i, i));

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int c = 1; c <= m.n; ++c) {
        x.at(c, c) = dinv[c - 1];
        for (int r = c + 1; r <= m.n; ++r) {
            T s = ring_zero<T>();
            for (int k = c; k < r; ++k)
                if (!is_zero(m.at(r, k)) && !is_zero(x.at(k, c))) s += m.at(r, k) * x.at(k, c);
            x.at(r, c) = -(dinv[r - 1] * s);
        }
    }
    return x;
}

template <class T>
inline InvertResult<T> tri_invert(const TriMatrix<T>& m) {
    return tri_invert_impl(m, true);
}

template <class T>
inline InvertResult<T> tri_invert_serial(const TriMatrix<T>& m) {
    return tri_invert_impl(m, false);
}

// Unwraps an InvertResult that is expected to be nonsingular.
template <class T>
inline TriMatrix<T> tri_invert_or_throw(const TriMatrix<T>& m) {
    auto r = tri_invert(m);
    if (std::holds_alternative<SingularReport>(r))
        throw std::domain_error("tri_invert: singular at row " +
                                std::to_string(std::get<SingularReport>(r).row));
    return std::get<TriMatrix<T>>(std::move(r));
}

template <class T>
inline TriMatrix<T> tri_mul(const TriMatrix<T>& a, const TriMatrix<T>& b) {
    if (a.n != b.n) throw std::invalid_argument("tri_mul: size mismatch");
    TriMatrix<T> r(a.n);
#pragma omp parallel for schedule(dynamic)
    for (int i = 1; i <= a.n; ++i)
        for (int j = 1; j <= i; ++j) {
            T s = ring_zero<T>();
            for (int k = j; k <= i; ++k)
                if (!is_zero(a.at(i, k)) && !is_zero(b.at(k, j))) s += a.at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

// Both determinant-recurrence forms, normalized by the diagonal so they hold
// for any invertible triangular matrix:
//   sinv(n,j) s(j,j) = delta(n,j) - sum_{k=1}^{n-j} sinv(n, n+1-k) s(n+1-k, j)
//   s(n,n) sinv(n,j) = delta(n,j) - sum_{k=1}^{n-j} s(n, n-k) sinv(n-k, j)
template <class T>
inline bool recurrence_check(const TriMatrix<T>& s, const TriMatrix<T>& sinv) {
    if (s.n != sinv.n) throw std::invalid_argument("recurrence_check: size mismatch");
    for (int n = 1; n <= s.n; ++n)
        for (int j = 1; j <= n; ++j) {
            T delta = (n == j) ? ring_one<T>() : ring_zero<T>();
            T rhs1 = delta, rhs2 = delta;
            for (int k = 1; k <= n - j; ++k) {
                rhs1 -= sinv.at(n, n + 1 - k) * s.at(n + 1 - k, j);
                rhs2 -= s.at(n, n - k) * sinv.at(n - k, j);
            }
            if (sinv.at(n, j) * s.at(j, j) != rhs1) return false;
            if (s.at(n, n) * sinv.at(n, j) != rhs2) return false;
        }
    return true;
}

// --------------------------------------------------------------- encodings

// Full square CSV (zeros above the diagonal), LF line endings, no header.
template <class T>
inline std::string tri_to_csv(const TriMatrix<T>& m) {
    std::string out;
    for (int r = 1; r <= m.n; ++r) {
        for (int c = 1; c <= m.n; ++c) {
            if (c > 1) out += ',';
            out += (c <= r) ? cell_str(m.at(r, c)) : "0";
        }
        out += '\n';
    }
    return out;
}

template <class T>
inline json tri_to_json(const TriMatrix<T>& m) {
    json rows = json::array();
    for (int r = 1; r <= m.n; ++r) {
        json row = json::array();
        for (int c = 1; c <= r; ++c) row.push_back(to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"size", m.n}, {"ring", ring_name(ring_tag_of<T>())}, {"rows", std::move(rows)}};
}

template <class T>
inline TriMatrix<T> tri_from_json(const json& j) {
    if (ring_from_name(j.at("ring").get<std::string>()) != ring_tag_of<T>())
        throw std::invalid_argument("tri_from_json: ring mismatch");
    int n = j.at("size").get<int>();
    TriMatrix<T> m(n);
    const json& rows = j.at("rows");
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= r; ++c) from_json_value(rows[r - 1][c - 1], m.at(r, c));
    return m;
}

// Deterministic random invertible INT matrix (unit diagonal), for tests.
inline TriMatrix<BigInt> random_invertible_tri(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> sign(0, 1);
    TriMatrix<BigInt> m(n);
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c < r; ++c) m.at(r, c) = entry(rng);
        m.at(r, r) = sign(rng) ? 1 : -1;
    }
    return m;
}

}  // namespace lambert
