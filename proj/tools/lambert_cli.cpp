// Command-line front end: exact Lambert-factorization tables, identity
// verification sweeps, and conjecture residual reports.
//
// Exit codes: 0 success / verified, 1 verification failure (or singular
// input where an inverse was requested), 2 usage error.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "lambert/arith.hpp"
#include "lambert/convolution.hpp"
#include "lambert/factorization.hpp"
#include "lambert/io.hpp"
#include "lambert/series.hpp"
#include "lambert/tri_matrix.hpp"
#include "lambert/variants.hpp"

using namespace lambert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
        write_file(out_path, content);
    }
}

LambertParams parse_params(const std::string& spec) {
    LambertParams p;
    long long* slots[4] = {&p.a, &p.b, &p.c, &p.d};
    size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            *slots[i] = std::stoll(tok);
        } catch (const std::exception&) {
            throw UsageError("--params expects four integers a,b,c,d, got '" + spec + "'");
        }
        if (comma == std::string::npos) {
            if (i != 3) throw UsageError("--params expects four integers a,b,c,d, got '" + spec + "'");
            break;
        }
        pos = comma + 1;
    }
    try {
        p.validate();
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return p;
}

// --C choices: qq = (q;q)_inf, one = 1, nqq-inv = 1/(-q;q)_inf, poch:a,b = (q^a;q^b)_inf
IntSeries make_C(const std::string& spec, int N) {
    if (spec == "qq") return pochhammer(1, 1, N);
    if (spec == "one") return series_const_one<BigInt>(N);
    if (spec == "nqq-inv") return series_inverse(neg_pochhammer(N));
    if (spec.rfind("poch:", 0) == 0) {
        std::string rest = spec.substr(5);
        size_t comma = rest.find(',');
        if (comma == std::string::npos) throw UsageError("--C poch:a,b expects two integers");
        try {
            long long a = std::stoll(rest.substr(0, comma));
            long long b = std::stoll(rest.substr(comma + 1));
            return pochhammer(a, b, N);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--C poch: ") + e.what());
        }
    }
    throw UsageError("--C must be one of qq, one, nqq-inv, poch:a,b");
}

// Function arguments are registry names (mu, phi, sigma_1, ...) or @file.json
// holding a 1-indexed array (element 0 is a_1).
IntFn resolve_fn(const std::string& spec, const std::string& flag) {
    if (spec.empty()) throw UsageError(flag + " is required");
    if (spec[0] == '@') {
        json j;
        try {
            j = json::parse(read_file(spec.substr(1)));
        } catch (const std::exception& e) {
            throw UsageError(flag + ": cannot load '" + spec.substr(1) + "': " + e.what());
        }
        return table_fn(sequence_from_json(j));
    }
    ArithFn f;
    try {
        f = classical(spec);
    } catch (const std::exception& e) {
        throw UsageError(flag + ": " + e.what());
    }
    if (f.ring != Ring::INT)
        throw UsageError(flag + ": '" + spec + "' is log-valued; this verb needs an integer-valued function");
    return f.fi;
}

std::string sequence_payload(const std::vector<BigInt>& vals_from_1, const std::string& format) {
    if (format == "json") return sequence_to_json(vals_from_1).dump(2);
    std::string out;
    for (const auto& v : vals_from_1) out += v.str() + "\n";
    return out;
}

template <class T>
std::string matrix_payload(const TriMatrix<T>& m, const std::string& format) {
    return format == "json" ? tri_to_json(m).dump(2) : tri_to_csv(m);
}

template <class T>
std::string table_payload(const std::vector<std::vector<T>>& rows, const std::string& format) {
    if (format == "json") {
        json jr = json::array();
        for (const auto& row : rows) {
            json r = json::array();
            for (const auto& v : row) r.push_back(to_json(v));
            jr.push_back(std::move(r));
        }
        return jr.dump(2);
    }
    return table_to_csv(rows);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generalized Lambert series factorization toolkit"};
    app.require_subcommand(1);

    int N = 0;
    std::string params_spec = "1,0,1,0", C_spec = "qq", format, out_path;
    std::string a_spec, f_spec, g_spec, h_spec, gamma_spec, in_path;
    bool d_param = false;
    long long alpha = 2, beta = 1;
    int jmax = 21, imax = 10;
    std::string seed_spec = "plain", via = "recursive", target = "all", route = "plus";

    std::vector<std::pair<CLI::App*, std::string>> format_defaults;
    auto add_common = [&](CLI::App* c, const std::string& default_format) {
        c->add_option("--format", format,
                      "output format: csv or json (default: " + default_format + ")")
            ->check(CLI::IsMember({"csv", "json"}));
        c->add_option("--out", out_path, "write output to this file (default: stdout)");
        format_defaults.emplace_back(c, default_format);
    };

    auto* c_matrix = app.add_subcommand("matrix", "emit the factorization matrix s_{n,k}");
    c_matrix->add_option("--N", N, "matrix size")->required()->check(CLI::PositiveNumber);
    c_matrix->add_option("--params", params_spec, "exponent scheme a,b,c,d (column k: q^{ak+b}/(1-q^{ck+d}))");
    c_matrix->add_option("--C", C_spec, "series factor: qq, one, nqq-inv, poch:a,b");
    c_matrix->add_flag("--d-param", d_param, "weight denominators by the formal d (entries in Z[d])");
    add_common(c_matrix, "csv");

    auto* c_invert = app.add_subcommand("invert", "emit the exact inverse of the factorization matrix");
    c_invert->add_option("--N", N, "matrix size")->check(CLI::PositiveNumber);
    c_invert->add_option("--params", params_spec, "exponent scheme a,b,c,d");
    c_invert->add_option("--C", C_spec, "series factor");
    c_invert->add_flag("--d-param", d_param, "build over Z[d]");
    c_invert->add_option("--in", in_path, "invert a matrix from canonical JSON instead of building one");
    add_common(c_invert, "csv");

    auto* c_verify = app.add_subcommand("verify-factorization",
                                        "check [q^n] C * sum_k a_k q^{ak+b}/(1-q^{ck+d}) = sum_k s_{n,k} a_k");
    c_verify->add_option("--a", a_spec, "coefficient function (name or @file.json)")->required();
    c_verify->add_option("--N", N, "bound")->required()->check(CLI::PositiveNumber);
    c_verify->add_option("--params", params_spec, "exponent scheme a,b,c,d");
    c_verify->add_option("--C", C_spec, "series factor");
    add_common(c_verify, "json");

    auto* c_bara = app.add_subcommand("bar-a", "dual-route divisor-sum transform (closed form vs matrix route)");
    c_bara->add_option("--a", a_spec, "sequence (name or @file.json)")->required();
    c_bara->add_option("--gamma", gamma_spec, "generating function gamma")->required();
    c_bara->add_option("--alpha", alpha, "progression modulus")->check(CLI::PositiveNumber);
    c_bara->add_option("--beta", beta, "progression offset");
    c_bara->add_option("--N", N, "bound")->required()->check(CLI::PositiveNumber);
    c_bara->add_option("--route", route, "exponent route: plus (alpha d + beta) or minus (alpha d - beta)")
        ->check(CLI::IsMember({"plus", "minus"}));
    add_common(c_bara, "json");

    auto* c_ds = app.add_subcommand("ds-table", "j-fold self-convolution table (rows n, columns j)");
    c_ds->add_option("--g", g_spec, "base function (name or @file.json)")->required();
    c_ds->add_option("--N", N, "row bound")->required()->check(CLI::PositiveNumber);
    c_ds->add_option("--jmax", jmax, "column bound")->check(CLI::PositiveNumber);
    c_ds->add_option("--seed", seed_spec, "recursion seed: plain (reference tables) or signed (inverse machinery)")
        ->check(CLI::IsMember({"plain", "signed"}));
    add_common(c_ds, "csv");

    auto* c_rho = app.add_subcommand("rho-table", "rho^{(i)}_{n,1} table (rows n, columns i)");
    c_rho->add_option("--N", N, "row bound")->required()->check(CLI::PositiveNumber);
    c_rho->add_option("--imax", imax, "column bound")->check(CLI::PositiveNumber);
    add_common(c_rho, "csv");

    auto* c_dinv = app.add_subcommand("dirichlet-inverse", "Dirichlet inverse sequence f^{-1}(1..N)");
    c_dinv->add_option("--f", f_spec, "function (name or @file.json), f(1) = 1")->required();
    c_dinv->add_option("--N", N, "bound")->required()->check(CLI::PositiveNumber);
    c_dinv->add_option("--via", via, "route: recursive or factorization")
        ->check(CLI::IsMember({"recursive", "factorization"}));
    add_common(c_dinv, "json");

    auto* c_solve = app.add_subcommand("solve-convolution", "solve f * g = h * mu for g");
    c_solve->add_option("--f", f_spec, "left factor (f(1) = 1)")->required();
    c_solve->add_option("--rhs", h_spec, "right-hand side h")->required();
    c_solve->add_option("--N", N, "bound")->required()->check(CLI::PositiveNumber);
    add_common(c_solve, "json");

    auto* c_conj = app.add_subcommand("conjecture", "degenerate-inverse residual report");
    c_conj->add_option("--alpha", alpha, "denominator slope (exponents alpha k + 1)")->check(CLI::Range(2LL, 64LL));
    c_conj->add_option("--N", N, "scan bound")->required()->check(CLI::PositiveNumber);
    c_conj->add_flag("--d-param", d_param, "scan the d-weighted variant over Z[d]");
    add_common(c_conj, "json");

    auto* c_recover = app.add_subcommand("recover", "recover a_n and A(n) from the summatory-variant inverses");
    c_recover->add_option("--a", a_spec, "sequence (name or @file.json)")->required();
    c_recover->add_option("--N", N, "bound")->required()->check(CLI::PositiveNumber);
    add_common(c_recover, "json");

    auto* c_pm = app.add_subcommand("pm-transform", "the +/- Lambert transform b of a");
    c_pm->add_option("--a", a_spec, "sequence (name or @file.json)")->required();
    c_pm->add_option("--N", N, "bound")->required()->check(CLI::PositiveNumber);
    add_common(c_pm, "json");

    auto* c_golden = app.add_subcommand("golden", "re-emit the reference tables (fig1, fig2, table1, table2)");
    c_golden->add_option("--target", target, "fig1, fig2, table1, table2, or all")
        ->check(CLI::IsMember({"fig1", "fig2", "table1", "table2", "all"}));
    std::string golden_dir = ".";
    c_golden->add_option("--out", golden_dir, "directory to write the CSV files into");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (format.empty())
        for (const auto& [sub, def] : format_defaults)
            if (sub->parsed()) format = def;

    try {
        if (*c_matrix) {
            LambertParams p = parse_params(params_spec);
            IntSeries C = make_C(C_spec, N);
            emit(d_param ? matrix_payload(snk_matrix_poly(C, p, N), format)
                         : matrix_payload(snk_matrix_int(C, p, N), format),
                 out_path);
            return kExitOk;
        }
        if (*c_invert) {
            auto report_singular = [&](const SingularReport& r) {
                emit(json{{"singular_row", r.row}}.dump(2), out_path);
                return kExitVerifyFail;
            };
            if (!in_path.empty()) {
                json j = json::parse(read_file(in_path));
                std::string ring = j.at("ring").get<std::string>();
                if (ring == "POLY_D") {
                    auto inv = tri_invert(tri_from_json<PolyD>(j));
                    if (std::holds_alternative<SingularReport>(inv))
                        return report_singular(std::get<SingularReport>(inv));
                    emit(matrix_payload(std::get<TriMatrix<PolyD>>(inv), format), out_path);
                } else if (ring == "INT") {
                    auto inv = tri_invert(tri_from_json<BigInt>(j));
                    if (std::holds_alternative<SingularReport>(inv))
                        return report_singular(std::get<SingularReport>(inv));
                    emit(matrix_payload(std::get<TriMatrix<BigInt>>(inv), format), out_path);
                } else {
                    throw UsageError("invert --in: ring must be INT or POLY_D");
                }
                return kExitOk;
            }
            if (N < 1) throw UsageError("invert: --N is required unless --in is given");
            LambertParams p = parse_params(params_spec);
            IntSeries C = make_C(C_spec, N);
            if (d_param) {
                auto inv = tri_invert(snk_matrix_poly(C, p, N));
                if (std::holds_alternative<SingularReport>(inv))
                    return report_singular(std::get<SingularReport>(inv));
                emit(matrix_payload(std::get<TriMatrix<PolyD>>(inv), format), out_path);
            } else {
                auto inv = tri_invert(snk_matrix_int(C, p, N));
                if (std::holds_alternative<SingularReport>(inv))
                    return report_singular(std::get<SingularReport>(inv));
                emit(matrix_payload(std::get<TriMatrix<BigInt>>(inv), format), out_path);
            }
            return kExitOk;
        }
        if (*c_verify) {
            IntFn a = resolve_fn(a_spec, "--a");
            FactorizationPair fp{make_C(C_spec, N), parse_params(params_spec), false};
            bool okflag = factorization_check(a, fp, N);
            emit(json{{"verified", okflag}, {"N", N}}.dump(2), out_path);
            return okflag ? kExitOk : kExitVerifyFail;
        }
        if (*c_bara) {
            IntFn a = resolve_fn(a_spec, "--a");
            IntFn gamma = resolve_fn(gamma_spec, "--gamma");
            IntSeries C = pochhammer(1, 1, N);
            bool all_equal = true;
            json rows = json::array();
            for (long long n = 1; n <= N; ++n) {
                BigInt closed = (route == "plus") ? bar_a_closed(a, gamma, alpha, beta, n)
                                                  : bar_a_closed_minus(a, gamma, alpha, beta, n);
                BigInt viam = (route == "plus") ? bar_a_via_matrix(a, gamma, alpha, beta, C, n)
                                                : bar_a_via_matrix_minus(a, gamma, alpha, beta, C, n);
                if (closed != viam) all_equal = false;
                rows.push_back({{"n", n}, {"closed", closed.str()}, {"via_matrix", viam.str()}});
            }
            emit(json{{"route", route}, {"alpha", alpha}, {"beta", beta}, {"equal", all_equal}, {"values", rows}}
                     .dump(2),
                 out_path);
            return all_equal ? kExitOk : kExitVerifyFail;
        }
        if (*c_ds) {
            IntFn g = resolve_fn(g_spec, "--g");
            ConvSeed seed = seed_spec == "plain" ? ConvSeed::PLAIN : ConvSeed::SIGNED;
            emit(table_payload(ds_table_rows(g, jmax, N, seed), format), out_path);
            return kExitOk;
        }
        if (*c_rho) {
            emit(table_payload(rho_table(N, imax), format), out_path);
            return kExitOk;
        }
        if (*c_dinv) {
            IntFn f = resolve_fn(f_spec, "--f");
            std::vector<BigInt> vals;
            if (via == "factorization") {
                auto out = dirichlet_inverse_via_fact(f, N);
                vals.assign(out.begin() + 1, out.end());
            } else {
                IntFn finv = dirichlet_inverse(f);
                for (long long n = 1; n <= N; ++n) vals.push_back(finv(n));
            }
            emit(sequence_payload(vals, format), out_path);
            return kExitOk;
        }
        if (*c_solve) {
            IntFn f = resolve_fn(f_spec, "--f");
            IntFn h = resolve_fn(h_spec, "--rhs");
            auto g = solve_convolution(f, h, N);
            bool okflag = true;
            IntFn hm = dirichlet_convolve(h, mu);
            for (long long n = 1; n <= N && okflag; ++n) {
                BigInt lhs = 0;
                for (long long d : divisors(n)) lhs += f(d) * g[static_cast<size_t>(n / d)];
                okflag = (lhs == hm(n));
            }
            json j{{"verified_f_conv_g_equals_h_conv_mu", okflag},
                   {"g", sequence_to_json({g.begin() + 1, g.end()})}};
            emit(format == "csv" ? sequence_payload({g.begin() + 1, g.end()}, "csv") : j.dump(2), out_path);
            return okflag ? kExitOk : kExitVerifyFail;
        }
        if (*c_conj) {
            json j = d_param ? conjecture_degenerate_d(alpha, N).to_json_report()
                             : conjecture_degenerate_int(alpha, N).to_json_report();
            emit(j.dump(2), out_path);
            return kExitOk;
        }
        if (*c_recover) {
            IntFn a = resolve_fn(a_spec, "--a");
            auto ra = recover_a(a, N);
            auto rA = recover_A(a, N);
            bool a_match = true, A_match = true;
            BigInt A = 0;
            for (long long n = 1; n <= N; ++n) {
                A += a(n);
                if (n >= 2 && ra[static_cast<size_t>(n)] != a(n)) a_match = false;
                if (rA[static_cast<size_t>(n)] != A) A_match = false;
            }
            json j{{"a_match_from_2", a_match},
                   {"A_match", A_match},
                   {"recovered_a", sequence_to_json({ra.begin() + 1, ra.end()})},
                   {"recovered_A", sequence_to_json({rA.begin() + 1, rA.end()})}};
            emit(j.dump(2), out_path);
            return (a_match && A_match) ? kExitOk : kExitVerifyFail;
        }
        if (*c_pm) {
            IntFn a = resolve_fn(a_spec, "--a");
            IntFn b = pm_transform(a);
            std::vector<BigInt> vals;
            for (long long n = 1; n <= N; ++n) vals.push_back(b(n));
            bool okflag = pm_transform_series_check(a, N);
            if (format == "csv") {
                emit(sequence_payload(vals, "csv"), out_path);
            } else {
                emit(json{{"series_identity_verified", okflag}, {"b", sequence_to_json(vals)}}.dump(2),
                     out_path);
            }
            return okflag ? kExitOk : kExitVerifyFail;
        }
        if (*c_golden) {
            emit_goldens(golden_dir, target);
            return kExitOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
