#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gvmforge/rational.hpp"

namespace gvmforge {

/// Raised when a unit variable (some a_i) is assigned the value zero.
struct ZeroUnit : std::domain_error {
    explicit ZeroUnit(const std::string& what) : std::domain_error(what) {}
};

/// Exponent vector of one monomial in h1..hn, lam, b, a1..an.
/// h, lam and b exponents are nonnegative; a-exponents may be negative
/// (the a-variables are units). Trailing zero entries of the h- and
/// a-vectors are trimmed so that monomials are independent of any ambient n.
struct Monomial {
    std::vector<int32_t> h;
    int32_t lam = 0;
    int32_t b = 0;
    std::vector<int32_t> a;

    void normalize() {
        while (!h.empty() && h.back() == 0) h.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }

    bool is_unit() const { return h.empty() && lam == 0 && b == 0 && a.empty(); }

    int64_t total_degree() const {
        int64_t d = lam + b;
        for (int32_t e : h) d += e;
        for (int32_t e : a) d += e;
        return d;
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r;
        r.h.resize(std::max(h.size(), o.h.size()), 0);
        for (size_t k = 0; k < h.size(); ++k) r.h[k] += h[k];
        for (size_t k = 0; k < o.h.size(); ++k) r.h[k] += o.h[k];
        r.lam = lam + o.lam;
        r.b = b + o.b;
        r.a.resize(std::max(a.size(), o.a.size()), 0);
        for (size_t k = 0; k < a.size(); ++k) r.a[k] += a[k];
        for (size_t k = 0; k < o.a.size(); ++k) r.a[k] += o.a[k];
        r.normalize();
        return r;
    }

    bool operator==(const Monomial& o) const {
        return h == o.h && lam == o.lam && b == o.b && a == o.a;
    }
};

/// Canonical term order: graded (higher total degree first), ties broken
/// lexicographically over the variable order h1 < ... < hn < lam < b < a1 < ...
/// with the larger exponent on the earlier variable coming first.
struct MonomialOrder {
    static int cmp_vec(const std::vector<int32_t>& x, const std::vector<int32_t>& y) {
        size_t m = std::max(x.size(), y.size());
        for (size_t k = 0; k < m; ++k) {
            int32_t ex = k < x.size() ? x[k] : 0;
            int32_t ey = k < y.size() ? y[k] : 0;
            if (ex != ey) return ex > ey ? -1 : 1;
        }
        return 0;
    }
    bool operator()(const Monomial& x, const Monomial& y) const {
        int64_t dx = x.total_degree(), dy = y.total_degree();
        if (dx != dy) return dx > dy;
        if (int c = cmp_vec(x.h, y.h); c != 0) return c < 0;
        if (x.lam != y.lam) return x.lam > y.lam;
        if (x.b != y.b) return x.b > y.b;
        if (int c = cmp_vec(x.a, y.a); c != 0) return c < 0;
        return false;
    }
};

/// Sparse multivariate Laurent polynomial over the rationals in the symbols
/// h1..hn, lam, b and the unit symbols a1..an. Zero coefficients are never
/// stored; equality is equality of the term maps.
class Poly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    Poly() = default;
    Poly(const Rational& c) { add_term(Monomial{}, c); }
    Poly(long c) : Poly(Rational(c)) {}
    Poly(int c) : Poly(Rational(c)) {}

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Rational(1)); }
    static Poly constant(const Rational& c) { return Poly(c); }

    /// The variable h_i, 1-based, i >= 1.
    static Poly h(int i) {
        check_index(i, "h");
        Monomial m;
        m.h.assign(static_cast<size_t>(i), 0);
        m.h[static_cast<size_t>(i) - 1] = 1;
        Poly p;
        p.add_term(m, Rational(1));
        return p;
    }

    static Poly lam_sym() {
        Monomial m;
        m.lam = 1;
        Poly p;
        p.add_term(m, Rational(1));
        return p;
    }

    static Poly b_sym() {
        Monomial m;
        m.b = 1;
        Poly p;
        p.add_term(m, Rational(1));
        return p;
    }

    /// The unit a_i^exp, 1-based; exp may be negative.
    static Poly a_sym(int i, int exp = 1) {
        check_index(i, "a");
        Monomial m;
        m.a.assign(static_cast<size_t>(i), 0);
        m.a[static_cast<size_t>(i) - 1] = exp;
        m.normalize();
        Poly p;
        p.add_term(m, Rational(1));
        return p;
    }

    /// The combination -(h1 + ... + hn) that stands in for h_{n+1}.
    static Poly h_alias(int n) {
        Poly p;
        for (int i = 1; i <= n; ++i) p -= h(i);
        return p;
    }

    /// h_i for 1 <= i <= n+1, with i = n+1 expanded through the alias.
    static Poly h_or_alias(int i, int n) {
        if (i >= 1 && i <= n) return h(i);
        if (i == n + 1) return h_alias(n);
        throw std::out_of_range("Poly::h_or_alias: index out of range");
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant()) throw std::domain_error("Poly: not a constant");
        return terms_.begin()->second;
    }

    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        if (m.lam < 0 || m.b < 0) throw std::invalid_argument("Poly: negative exponent on a non-unit variable");
        for (int32_t e : m.h)
            if (e < 0) throw std::invalid_argument("Poly: negative exponent on a non-unit variable");
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly x, const Poly& y) { return x += y; }
    friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Poly operator*(const Poly& x, const Poly& y) {
        Poly r;
        for (const auto& [mx, cx] : x.terms_)
            for (const auto& [my, cy] : y.terms_) r.add_term(mx * my, cx * cy);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Rational& c, const Poly& p) {
        Poly r;
        if (c.is_zero()) return r;
        for (const auto& [m, q] : p.terms_) r.terms_.emplace(m, c * q);
        return r;
    }

    Poly pow(int e) const {
        if (e < 0) throw std::domain_error("Poly: negative power");
        Poly r = one();
        for (int k = 0; k < e; ++k) r *= *this;
        return r;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;
    static Poly parse(std::string_view s);

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    static void check_index(int i, const char* what) {
        if (i < 1) throw std::out_of_range(std::string("Poly: bad ") + what + " index");
    }
    TermMap terms_;
};

/// The shift automorphism: h_i -> h_i - direction for 1 <= i <= n, identity
/// for i = n+1. direction = +1 gives sigma_i, direction = -1 its inverse.
inline Poly sigma(int i, int direction, const Poly& p, int n) {
    if (i < 1 || i > n + 1) throw std::out_of_range("sigma: index out of range");
    if (i == n + 1) return p;
    if (direction != 1 && direction != -1) throw std::invalid_argument("sigma: direction must be +1 or -1");
    Poly result;
    const Rational shift(-direction);
    for (const auto& [m, c] : p.terms()) {
        size_t idx = static_cast<size_t>(i) - 1;
        int32_t e = idx < m.h.size() ? m.h[idx] : 0;
        Monomial rest = m;
        if (idx < rest.h.size()) {
            rest.h[idx] = 0;
            rest.normalize();
        }
        if (e == 0) {
            result.add_term(rest, c);
            continue;
        }
        // (h_i + shift)^e expanded binomially against the rest of the term
        for (int32_t k = 0; k <= e; ++k) {
            Monomial mk = rest;
            if (k > 0) {
                if (mk.h.size() < static_cast<size_t>(i)) mk.h.resize(static_cast<size_t>(i), 0);
                mk.h[idx] = k;
            }
            Rational coeff = c * Rational::binomial(static_cast<unsigned>(e), static_cast<unsigned>(k)) *
                             shift.pow(e - k);
            result.add_term(mk, coeff);
        }
    }
    return result;
}

/// Partial assignment of rational values to lam, b and the a-units.
struct SpecValues {
    std::optional<Rational> lam;
    std::optional<Rational> b;
    std::map<int, Rational> a;  // 1-based index -> nonzero value
};

/// Substitutes the assigned symbols and renormalizes; unassigned symbols stay
/// symbolic. Assigning zero to any a_i raises ZeroUnit.
inline Poly specialize(const Poly& p, const SpecValues& v) {
    for (const auto& [i, val] : v.a)
        if (val.is_zero()) throw ZeroUnit("specialize: a" + std::to_string(i) + " assigned zero");
    Poly result;
    for (const auto& [m, c] : p.terms()) {
        Rational coeff = c;
        Monomial out = m;
        if (v.lam && m.lam != 0) {
            coeff *= v.lam->pow(m.lam);
            out.lam = 0;
        }
        if (v.b && m.b != 0) {
            coeff *= v.b->pow(m.b);
            out.b = 0;
        }
        for (const auto& [i, val] : v.a) {
            size_t idx = static_cast<size_t>(i) - 1;
            if (idx < out.a.size() && out.a[idx] != 0) {
                coeff *= val.pow(out.a[idx]);
                out.a[idx] = 0;
            }
        }
        out.normalize();
        result.add_term(out, coeff);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Canonical text format.
//
//   poly   := "0" | ["-"] term { (" + " | " - ") term }
//   term   := mag | mag "*" factors | factors
//   factors:= factor { "*" factor }
//   factor := var | var "^" int          (exponent 1 is never written)
//   var    := "h"digits | "lam" | "b" | "a"digits
//   mag    := unsigned rational "p" or "p/q"
//
// Terms appear in the canonical monomial order; "1*" is omitted.
// ---------------------------------------------------------------------------

inline std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c.is_negative();
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        Rational mag = c.abs();
        std::string factors;
        auto emit = [&factors](const std::string& name, int32_t e) {
            if (e == 0) return;
            if (!factors.empty()) factors += "*";
            factors += name;
            if (e != 1) factors += "^" + std::to_string(e);
        };
        for (size_t k = 0; k < m.h.size(); ++k) emit("h" + std::to_string(k + 1), m.h[k]);
        emit("lam", m.lam);
        emit("b", m.b);
        for (size_t k = 0; k < m.a.size(); ++k) emit("a" + std::to_string(k + 1), m.a[k]);
        if (factors.empty()) {
            out += mag.str();
        } else if (mag.is_one()) {
            out += factors;
        } else {
            out += mag.str() + "*" + factors;
        }
    }
    return out;
}

namespace detail {

struct PolyParser {
    std::string_view s;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("Poly::parse: " + msg + " at position " + std::to_string(pos));
    }
    bool at_end() const { return pos >= s.size(); }
    char peek() const { return at_end() ? '\0' : s[pos]; }
    bool consume(std::string_view tok) {
        if (s.substr(pos, tok.size()) == tok) {
            pos += tok.size();
            return true;
        }
        return false;
    }

    std::string digits() {
        size_t start = pos;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected digits");
        return std::string(s.substr(start, pos - start));
    }

    Rational magnitude() {
        std::string num = digits();
        if (consume("/")) num += "/" + digits();
        return Rational::parse(num);
    }

    int exponent() {
        bool neg = consume("-");
        long v = std::stol(digits());
        return static_cast<int>(neg ? -v : v);
    }

    // Returns false when the next token is not a variable.
    bool factor(Monomial& m) {
        auto set_exp = [this](std::vector<int32_t>& vec, int idx1, int32_t e) {
            if (vec.size() < static_cast<size_t>(idx1)) vec.resize(static_cast<size_t>(idx1), 0);
            if (vec[static_cast<size_t>(idx1) - 1] != 0) fail("repeated variable");
            vec[static_cast<size_t>(idx1) - 1] = e;
        };
        if (peek() == 'h') {
            ++pos;
            int idx = static_cast<int>(std::stol(digits()));
            if (idx < 1) fail("bad h index");
            int e = consume("^") ? exponent() : 1;
            if (e < 0) fail("negative h exponent");
            set_exp(m.h, idx, e);
            return true;
        }
        if (consume("lam")) {
            int e = consume("^") ? exponent() : 1;
            if (e < 0) fail("negative lam exponent");
            if (m.lam != 0) fail("repeated variable");
            m.lam = e;
            return true;
        }
        if (peek() == 'b') {
            ++pos;
            int e = consume("^") ? exponent() : 1;
            if (e < 0) fail("negative b exponent");
            if (m.b != 0) fail("repeated variable");
            m.b = e;
            return true;
        }
        if (peek() == 'a') {
            ++pos;
            int idx = static_cast<int>(std::stol(digits()));
            if (idx < 1) fail("bad a index");
            int e = consume("^") ? exponent() : 1;
            set_exp(m.a, idx, e);
            return true;
        }
        return false;
    }

    void term(Poly& p, bool negative) {
        Rational mag(1);
        Monomial m;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mag = magnitude();
            if (consume("*")) {
                if (!factor(m)) fail("expected variable after '*'");
                while (consume("*"))
                    if (!factor(m)) fail("expected variable after '*'");
            }
        } else {
            if (!factor(m)) fail("expected coefficient or variable");
            while (consume("*"))
                if (!factor(m)) fail("expected variable after '*'");
        }
        m.normalize();
        p.add_term(m, negative ? -mag : mag);
    }
};

}  // namespace detail

inline Poly Poly::parse(std::string_view s) {
    detail::PolyParser pp{s};
    if (s == "0") return Poly();
    Poly p;
    bool neg = pp.consume("-");
    pp.term(p, neg);
    while (!pp.at_end()) {
        if (pp.consume(" + ")) {
            pp.term(p, false);
        } else if (pp.consume(" - ")) {
            pp.term(p, true);
        } else {
            pp.fail("expected ' + ' or ' - '");
        }
    }
    return p;
}

}  // namespace gvmforge
