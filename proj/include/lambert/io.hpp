#pragma once
// CSV / JSON emission helpers and the golden-table writers (the checked-in
// reference CSVs under data/ are byte-identical re-emissions of these).

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lambert/arith.hpp"
#include "lambert/convolution.hpp"
#include "lambert/factorization.hpp"
#include "lambert/ring.hpp"
#include "lambert/series.hpp"
#include "lambert/tri_matrix.hpp"

namespace lambert {

template <class T>
inline std::string table_to_csv(const std::vector<std::vector<T>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += cell_str(row[i]);
        }
        out += '\n';
    }
    return out;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// --------------------------------------------------------------- goldens

// The deconvolution tables shown next to the matrix figures: columns G_k with
// sinv_{n,k} = sum_{d|n} p(d-1) G_k(n/d), solved by p(.-1)-deconvolution
// (unique since p(0) = 1), over any ring.
template <class T>
inline TriMatrix<T> p1_deconvolution(const TriMatrix<T>& sinv) {
    partition_warm(sinv.n);
    TriMatrix<T> g(sinv.n);
    for (int k = 1; k <= sinv.n; ++k)
        for (long long n = k; n <= sinv.n; ++n) {
            T s = ring_zero<T>();
            for (long long d : divisors(n))
                if (d > 1) s += T(partition_p(d - 1)) * g.get(static_cast<int>(n / d), k);
            g.at(static_cast<int>(n), k) = sinv.get(static_cast<int>(n), k) - s;
        }
    return g;
}

// fig1: ordinary-offset pair (numerator k, denominator 2k+1), C = (q;q)_inf,
// N = 16, integer entries; (i) the matrix, (ii) its inverse, (iii) the
// p(.-1)-deconvolution table of the inverse.
inline void emit_fig1(const std::string& dir) {
    const int N = 16;
    TriMatrix<BigInt> s = snk_matrix_int(pochhammer(1, 1, N), {1, 0, 2, 1}, N);
    TriMatrix<BigInt> sinv = tri_invert_or_throw(s);
    write_file(dir + "/fig1_i.csv", tri_to_csv(s));
    write_file(dir + "/fig1_ii.csv", tri_to_csv(sinv));
    write_file(dir + "/fig1_iii.csv", tri_to_csv(p1_deconvolution(sinv)));
}

// fig2: the same pair with the d-weight, N = 10, entries in Z[d].
inline void emit_fig2(const std::string& dir) {
    const int N = 10;
    TriMatrix<PolyD> s = snk_matrix_poly(pochhammer(1, 1, N), {1, 0, 2, 1}, N);
    TriMatrix<PolyD> sinv = tri_invert_or_throw(s);
    write_file(dir + "/fig2_i.csv", tri_to_csv(s));
    write_file(dir + "/fig2_ii.csv", tri_to_csv(sinv));
    write_file(dir + "/fig2_iii.csv", tri_to_csv(p1_deconvolution(sinv)));
}

// table1: ds_j(n) with g = 1 (plain seed), rows n = 1..50, columns j = 1..21.
inline std::vector<std::vector<BigInt>> ds_table_rows(const IntFn& g, int jmax, int nmax,
                                                      ConvSeed seed) {
    auto t = SelfConvTable::build(g, jmax, nmax, seed);
    std::vector<std::vector<BigInt>> rows(static_cast<size_t>(nmax));
    for (int n = 1; n <= nmax; ++n) {
        rows[n - 1].resize(static_cast<size_t>(jmax));
        for (int j = 1; j <= jmax; ++j) rows[n - 1][j - 1] = t.at(j, n);
    }
    return rows;
}

inline void emit_table1(const std::string& dir) {
    write_file(dir + "/table1.csv", table_to_csv(ds_table_rows(one_fn, 21, 50, ConvSeed::PLAIN)));
}

// table2: rho^{(i)}_{n,1}, rows n = 1..21, columns i = 1..10.
inline void emit_table2(const std::string& dir) {
    write_file(dir + "/table2.csv", table_to_csv(rho_table(21, 10)));
}

inline void emit_goldens(const std::string& dir, const std::string& target) {
    bool all = target == "all";
    bool hit = false;
    if (all || target == "fig1") { emit_fig1(dir); hit = true; }
    if (all || target == "fig2") { emit_fig2(dir); hit = true; }
    if (all || target == "table1") { emit_table1(dir); hit = true; }
    if (all || target == "table2") { emit_table2(dir); hit = true; }
    if (!hit) throw std::invalid_argument("golden: unknown target '" + target + "'");
}

// ------------------------------------------------------------ sequences

// 1-indexed sequence JSON: element 0 of "values" is a_1.
inline json sequence_to_json(const std::vector<BigInt>& vals_from_1) {
    json arr = json::array();
    for (const auto& v : vals_from_1) arr.push_back(v.str());
    return json{{"ring", "INT"}, {"one_indexed", true}, {"values", std::move(arr)}};
}

inline std::vector<BigInt> sequence_from_json(const json& j) {
    const json& arr = j.is_array() ? j : j.at("values");
    std::vector<BigInt> out;
    for (const auto& v : arr) {
        if (v.is_number_integer()) out.emplace_back(v.get<long long>());
        else out.emplace_back(v.get<std::string>());
    }
    return out;
}

}  // namespace lambert
