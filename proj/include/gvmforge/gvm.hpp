#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gvmforge/freemod.hpp"
#include "gvmforge/lie.hpp"
#include "gvmforge/poly.hpp"

namespace gvmforge {

using ExpVec = std::vector<int32_t>;  // exponent vector over e_{n+2,1..n+1}

inline int exp_sum(const ExpVec& m) { return std::accumulate(m.begin(), m.end(), 0); }

/// Graded-lex order on exponent vectors: lower |m| first, ties lexicographic.
struct ExpVecOrder {
    bool operator()(const ExpVec& x, const ExpVec& y) const {
        int dx = exp_sum(x), dy = exp_sum(y);
        if (dx != dy) return dx < dy;
        return x < y;
    }
};

/// Element of the induced module: a finite sum of E^m * P_m with P_m a
/// polynomial coefficient, E^m = e_{n+2,1}^{m_1} ... e_{n+2,n+1}^{m_{n+1}}.
class GVMElement {
public:
    using TermMap = std::map<ExpVec, Poly, ExpVecOrder>;

    explicit GVMElement(ModuleParams params) : params_(std::move(params)) {}

    const ModuleParams& params() const { return params_; }
    int n() const { return params_.n(); }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExpVec& m, const Poly& p) {
        if (p.is_zero()) return;
        if (static_cast<int>(m.size()) != n() + 1)
            throw DimensionMismatch("GVMElement: exponent vector must have n+1 entries");
        for (int32_t e : m)
            if (e < 0) throw std::out_of_range("GVMElement: negative exponent");
        auto [it, inserted] = terms_.emplace(m, p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    GVMElement& operator+=(const GVMElement& o) {
        check_same_n(o);
        for (const auto& [m, p] : o.terms_) add_term(m, p);
        return *this;
    }
    GVMElement& operator-=(const GVMElement& o) {
        check_same_n(o);
        for (const auto& [m, p] : o.terms_) add_term(m, -p);
        return *this;
    }
    friend GVMElement operator+(GVMElement x, const GVMElement& y) { return x += y; }
    friend GVMElement operator-(GVMElement x, const GVMElement& y) { return x -= y; }
    friend GVMElement operator*(const Poly& c, const GVMElement& v) {
        GVMElement r(v.params_);
        for (const auto& [m, p] : v.terms_) r.add_term(m, c * p);
        return r;
    }
    friend GVMElement operator*(const Rational& c, const GVMElement& v) { return Poly::constant(c) * v; }

    bool operator==(const GVMElement& o) const { return n() == o.n() && terms_ == o.terms_; }
    bool operator!=(const GVMElement& o) const { return !(*this == o); }

    void check_same_n(const GVMElement& o) const {
        if (n() != o.n()) throw DimensionMismatch("GVMElement: elements over different n");
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, p] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += "E[";
            for (size_t k = 0; k < m.size(); ++k) {
                if (k) out += ",";
                out += std::to_string(m[k]);
            }
            out += "] * ( " + p.str() + " )";
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const GVMElement& v) { return os << v.str(); }

    static GVMElement parse(std::string_view s, const ModuleParams& params);

private:
    ModuleParams params_;
    TermMap terms_;
};

/// The slice 1 (x) V of the induced module.
inline GVMElement inject(const Poly& f, const ModuleParams& params) {
    GVMElement v(params);
    v.add_term(ExpVec(static_cast<size_t>(params.n()) + 1, 0), f);
    return v;
}

/// Degree max{|m| : P_m != 0}; empty for the zero element.
inline std::optional<int> degree(const GVMElement& v) {
    if (v.is_zero()) return std::nullopt;
    return exp_sum(v.terms().rbegin()->first);
}

/// Splits v into its homogeneous pieces, ascending in degree.
inline std::vector<std::pair<int, GVMElement>> homogeneous_components(const GVMElement& v) {
    std::vector<std::pair<int, GVMElement>> out;
    for (const auto& [m, p] : v.terms()) {
        int k = exp_sum(m);
        if (out.empty() || out.back().first != k) out.emplace_back(k, GVMElement(v.params()));
        out.back().second.add_term(m, p);
    }
    return out;
}

namespace detail {

// e_{i,n+2} acting on one homogeneous component of degree N:
//   sum over target m of E^m ( sum_{k != i} (m_k+1) e_{i,k}.P_{m+e_k}
//                              + (m_i+1)(h_i - lambda - N + 1) P_{m+e_i} ).
inline GVMElement act_lowering(int i, const GVMElement& comp, int N) {
    const ModuleParams& p = comp.params();
    const int n = p.n();
    GVMElement out(p);
    Poly diag = p.h(i) - p.lambda() - Poly::constant(Rational(N - 1));
    for (const auto& [m, P] : comp.terms()) {
        for (int k = 1; k <= n + 1; ++k) {
            size_t idx = static_cast<size_t>(k) - 1;
            if (m[idx] == 0) continue;
            ExpVec target = m;
            --target[idx];
            Rational mult(m[idx]);
            if (k == i) {
                out.add_term(target, mult * (diag * P));
            } else {
                out.add_term(target, mult * act_v(LieGen::E(i, k), P, p));
            }
        }
    }
    return out;
}

inline GVMElement act_gen(const LieGen& g, const GVMElement& v) {
    const ModuleParams& p = v.params();
    const int n = p.n();
    g.validate(n);
    GVMElement out(p);

    if (g.kind == LieGen::Kind::H) {
        if (g.i == n + 2) {
            // h_{n+2} multiplies each degree-k piece by lambda + (n+2)k/(n+1)
            for (const auto& [m, P] : v.terms()) {
                Poly w = p.lambda() + Poly::constant(Rational(n + 2, n + 1) * Rational(exp_sum(m)));
                out.add_term(m, w * P);
            }
        } else {
            const int k = g.i;
            for (const auto& [m, P] : v.terms()) {
                int N = exp_sum(m);
                Poly w = Poly::h(k) + Poly::constant(Rational(N, n + 1) - Rational(m[static_cast<size_t>(k) - 1]));
                out.add_term(m, w * P);
            }
        }
        return out;
    }

    const int i = g.i, j = g.j;
    if (i == n + 2) {
        // left multiplication: m -> m + e_j
        for (const auto& [m, P] : v.terms()) {
            ExpVec target = m;
            ++target[static_cast<size_t>(j) - 1];
            out.add_term(target, P);
        }
        return out;
    }
    if (j == n + 2) {
        for (const auto& [N, comp] : homogeneous_components(v)) out += act_lowering(i, comp, N);
        return out;
    }
    // i, j <= n+1: E^m (e_{i,j}.P) - m_i E^{m - e_i + e_j} P
    for (const auto& [m, P] : v.terms()) {
        out.add_term(m, act_v(g, P, p));
        size_t idx_i = static_cast<size_t>(i) - 1;
        if (m[idx_i] > 0) {
            ExpVec target = m;
            --target[idx_i];
            ++target[static_cast<size_t>(j) - 1];
            out.add_term(target, Rational(-m[idx_i]) * P);
        }
    }
    return out;
}

}  // namespace detail

inline GVMElement act(const LieGen& g, const GVMElement& v) { return detail::act_gen(g, v); }

inline GVMElement act(const LieElt& x, const GVMElement& v) {
    if (x.n() != v.n()) throw DimensionMismatch("act: element and module over different n");
    GVMElement out(v.params());
    for (const auto& [g, c] : x.terms()) out += c * detail::act_gen(g, v);
    return out;
}

// Text format: `E[m1,...,m{n+1}] * ( <poly> )` terms joined by " + ",
// in graded-lex order on m; "0" for the zero element.
inline GVMElement GVMElement::parse(std::string_view s, const ModuleParams& params) {
    GVMElement v(params);
    if (s == "0") return v;
    size_t pos = 0;
    auto fail = [&pos](const std::string& msg) {
        throw std::invalid_argument("GVMElement::parse: " + msg + " at position " + std::to_string(pos));
    };
    while (true) {
        if (s.substr(pos, 2) != "E[") fail("expected 'E['");
        pos += 2;
        ExpVec m;
        while (true) {
            size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected exponent");
            m.push_back(static_cast<int32_t>(std::stol(std::string(s.substr(start, pos - start)))));
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            break;
        }
        if (s.substr(pos, 6) != "] * ( ") fail("expected '] * ( '");
        pos += 6;
        size_t close = s.find(" )", pos);
        if (close == std::string_view::npos) fail("expected ' )'");
        Poly p = Poly::parse(s.substr(pos, close - pos));
        pos = close + 2;
        v.add_term(m, p);
        if (pos == s.size()) break;
        if (s.substr(pos, 3) != " + ") fail("expected ' + '");
        pos += 3;
    }
    return v;
}

}  // namespace gvmforge
