#pragma once
// Exact scalar types used throughout: arbitrary-precision integers, rationals,
// dense polynomials in the formal weight d over the integers, and log-linear
// values (finite rational combinations of logarithms of primes).

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace lambert {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using json = nlohmann::json;

enum class Ring { INT, RAT, POLY_D, LOGLIN };

inline const char* ring_name(Ring r) {
    switch (r) {
        case Ring::INT: return "INT";
        case Ring::RAT: return "RAT";
        case Ring::POLY_D: return "POLY_D";
        case Ring::LOGLIN: return "LOGLIN";
    }
    return "?";
}

inline Ring ring_from_name(const std::string& s) {
    if (s == "INT" || s == "int") return Ring::INT;
    if (s == "RAT" || s == "rat") return Ring::RAT;
    if (s == "POLY_D" || s == "poly_d") return Ring::POLY_D;
    if (s == "LOGLIN" || s == "loglin") return Ring::LOGLIN;
    throw std::invalid_argument("unknown ring: " + s);
}

// ---------------------------------------------------------------------------
// PolyD: element of Z[d], dense coefficients lowest power first, normalized so
// the top coefficient is nonzero (empty vector == 0).
struct PolyD {
    std::vector<BigInt> c;

    PolyD() = default;
    explicit PolyD(BigInt v) { if (v != 0) c.push_back(std::move(v)); }
    PolyD(std::initializer_list<long long> init) {
        for (long long x : init) c.emplace_back(x);
        trim();
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    friend bool operator==(const PolyD& a, const PolyD& b) { return a.c == b.c; }
    friend bool operator!=(const PolyD& a, const PolyD& b) { return !(a == b); }

    PolyD& operator+=(const PolyD& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    PolyD& operator-=(const PolyD& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size());
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend PolyD operator+(PolyD a, const PolyD& b) { a += b; return a; }
    friend PolyD operator-(PolyD a, const PolyD& b) { a -= b; return a; }
    friend PolyD operator-(const PolyD& a) {
        PolyD r = a;
        for (auto& x : r.c) x = -x;
        return r;
    }
    friend PolyD operator*(const PolyD& a, const PolyD& b) {
        if (a.is_zero() || b.is_zero()) return {};
        PolyD r;
        r.c.assign(a.c.size() + b.c.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (a.c[i] == 0) continue;
            for (size_t j = 0; j < b.c.size(); ++j)
                if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    PolyD& operator*=(const PolyD& o) { *this = *this * o; return *this; }

    // x -> x * d^k  (shift by the formal weight)
    PolyD shifted(int k) const {
        if (is_zero()) return {};
        PolyD r;
        r.c.assign(c.size() + k, BigInt(0));
        for (size_t i = 0; i < c.size(); ++i) r.c[i + k] = c[i];
        return r;
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& x : c) s += x;
        return s;
    }

    // canonical rendering, descending powers, no spaces: "-d^3-2d+30", "d", "-d+1"
    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int deg = degree(); deg >= 0; --deg) {
            const BigInt& v = c[deg];
            if (v == 0) continue;
            const bool neg = v < 0;
            BigInt mag = neg ? BigInt(-v) : v;
            if (s.empty()) {
                if (neg) s += '-';
            } else {
                s += neg ? '-' : '+';
            }
            std::string body;
            if (deg == 0) body = mag.str();
            else if (deg == 1) body = (mag == 1) ? "d" : mag.str() + "d";
            else body = (mag == 1) ? "d^" + std::to_string(deg)
                                   : mag.str() + "d^" + std::to_string(deg);
            s += body;
        }
        return s;
    }
};

// ---------------------------------------------------------------------------
// LogLin: finite rational combination sum_p  q_p * log(p)  over primes p.
// Addition and integer/rational scaling are exact; multiplying two nonconstant
// log-linear values has no representation here and is a hard error.
struct LogLin {
    std::map<long long, Rational> terms;  // prime -> coefficient, no zeros

    LogLin() = default;

    void normalize() {
        for (auto it = terms.begin(); it != terms.end();)
            it = (it->second == 0) ? terms.erase(it) : std::next(it);
    }
    bool is_zero() const { return terms.empty(); }

    friend bool operator==(const LogLin& a, const LogLin& b) { return a.terms == b.terms; }
    friend bool operator!=(const LogLin& a, const LogLin& b) { return !(a == b); }

    LogLin& operator+=(const LogLin& o) {
        for (const auto& [p, q] : o.terms) terms[p] += q;
        normalize();
        return *this;
    }
    LogLin& operator-=(const LogLin& o) {
        for (const auto& [p, q] : o.terms) terms[p] -= q;
        normalize();
        return *this;
    }
    friend LogLin operator+(LogLin a, const LogLin& b) { a += b; return a; }
    friend LogLin operator-(LogLin a, const LogLin& b) { a -= b; return a; }
    friend LogLin operator-(const LogLin& a) {
        LogLin r = a;
        for (auto& [p, q] : r.terms) q = -q;
        return r;
    }
    friend LogLin operator*(const BigInt& c, const LogLin& a) {
        LogLin r;
        if (c == 0) return r;
        for (const auto& [p, q] : a.terms) r.terms[p] = Rational(c) * q;
        r.normalize();
        return r;
    }
    friend LogLin operator*(const LogLin& a, const BigInt& c) { return c * a; }
    friend LogLin operator*(const LogLin&, const LogLin&) = delete;  // see loglin_mul_error

    std::string str() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [p, q] : terms) {
            std::string coeff = boost::multiprecision::numerator(q).str();
            if (boost::multiprecision::denominator(q) != 1)
                coeff += "/" + boost::multiprecision::denominator(q).str();
            if (!s.empty()) s += " + ";
            s += coeff + "*log(" + std::to_string(p) + ")";
        }
        return s;
    }
};

[[noreturn]] inline void loglin_mul_error() {
    throw std::domain_error("product of two log-linear values is not representable in the LOGLIN ring");
}

// ---------------------------------------------------------------------------
// Scalar-concept helpers shared by the series / matrix templates.

inline bool is_unit(const BigInt& x) { return x == 1 || x == -1; }
inline bool is_unit(const Rational& x) { return x != 0; }
inline bool is_unit(const PolyD& x) {
    return x.degree() == 0 && (x.c[0] == 1 || x.c[0] == -1);
}

inline BigInt unit_inverse(const BigInt& x) { return x; }  // +-1 are self-inverse
inline Rational unit_inverse(const Rational& x) { return Rational(1) / x; }
inline PolyD unit_inverse(const PolyD& x) { return x; }

inline bool is_zero(const BigInt& x) { return x == 0; }
inline bool is_zero(const Rational& x) { return x == 0; }
inline bool is_zero(const PolyD& x) { return x.is_zero(); }
inline bool is_zero(const LogLin& x) { return x.is_zero(); }

template <class T> T ring_zero() { return T{}; }
template <> inline BigInt ring_zero<BigInt>() { return BigInt(0); }
template <> inline Rational ring_zero<Rational>() { return Rational(0); }

template <class T> T ring_one();
template <> inline BigInt ring_one<BigInt>() { return BigInt(1); }
template <> inline Rational ring_one<Rational>() { return Rational(1); }
template <> inline PolyD ring_one<PolyD>() { return PolyD(BigInt(1)); }

template <class T> constexpr Ring ring_tag_of();
template <> constexpr Ring ring_tag_of<BigInt>() { return Ring::INT; }
template <> constexpr Ring ring_tag_of<Rational>() { return Ring::RAT; }
template <> constexpr Ring ring_tag_of<PolyD>() { return Ring::POLY_D; }
template <> constexpr Ring ring_tag_of<LogLin>() { return Ring::LOGLIN; }

// canonical cell rendering used by the CSV emitters
inline std::string cell_str(const BigInt& x) { return x.str(); }
inline std::string cell_str(const Rational& x) {
    std::string s = boost::multiprecision::numerator(x).str();
    if (boost::multiprecision::denominator(x) != 1)
        s += "/" + boost::multiprecision::denominator(x).str();
    return s;
}
inline std::string cell_str(const PolyD& x) { return x.str(); }
inline std::string cell_str(const LogLin& x) { return x.str(); }

// JSON encodings: INT/RAT as strings (exact), POLY_D as coefficient arrays
// lowest power first, LOGLIN as [prime, numerator, denominator] triples.
inline json to_json(const BigInt& x) { return x.str(); }
inline json to_json(const Rational& x) { return cell_str(x); }
inline json to_json(const PolyD& x) {
    json a = json::array();
    for (const auto& v : x.c) a.push_back(v.str());
    return a;
}
inline json to_json(const LogLin& x) {
    json a = json::array();
    for (const auto& [p, q] : x.terms)
        a.push_back({p, boost::multiprecision::numerator(q).str(),
                     boost::multiprecision::denominator(q).str()});
    return a;
}

inline void from_json_value(const json& j, BigInt& out) { out = BigInt(j.get<std::string>()); }
inline void from_json_value(const json& j, Rational& out) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) out = Rational(BigInt(s));
    else out = Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}
inline void from_json_value(const json& j, PolyD& out) {
    out.c.clear();
    for (const auto& v : j) out.c.emplace_back(v.get<std::string>());
    out.trim();
}
inline void from_json_value(const json& j, LogLin& out) {
    out.terms.clear();
    for (const auto& t : j)
        out.terms[t[0].get<long long>()] =
            Rational(BigInt(t[1].get<std::string>()), BigInt(t[2].get<std::string>()));
    out.normalize();
}

}  // namespace lambert
