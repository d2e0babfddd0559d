#pragma once

#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "gvmforge/rational.hpp"

namespace gvmforge {

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Basis element of sl(n+2): either E(i,j) with 1 <= i != j <= n+2, or H(k)
/// with k in {1..n} u {n+2}. H(n+1) is never stored; it expands through the
/// alias -H(1)-...-H(n).
struct LieGen {
    enum class Kind { E, H };
    Kind kind;
    int i;  // E: row index;  H: the index k
    int j;  // E: column index; H: unused (0)

    static LieGen E(int i, int j) { return LieGen{Kind::E, i, j}; }
    static LieGen H(int k) { return LieGen{Kind::H, k, 0}; }

    void validate(int n) const {
        if (kind == Kind::E) {
            if (i < 1 || j < 1 || i > n + 2 || j > n + 2 || i == j)
                throw std::out_of_range("LieGen: E index out of range");
        } else {
            if (!((i >= 1 && i <= n) || i == n + 2))
                throw std::out_of_range("LieGen: H index out of range");
        }
    }

    friend bool operator<(const LieGen& x, const LieGen& y) {
        return std::tie(x.kind, x.i, x.j) < std::tie(y.kind, y.i, y.j);
    }
    friend bool operator==(const LieGen& x, const LieGen& y) {
        return x.kind == y.kind && x.i == y.i && x.j == y.j;
    }

    std::string str() const {
        if (kind == Kind::E) return "E(" + std::to_string(i) + "," + std::to_string(j) + ")";
        return "H(" + std::to_string(i) + ")";
    }
};

/// Rational linear combination of the sl(n+2) basis, for a fixed n.
class LieElt {
public:
    explicit LieElt(int n) : n_(n) {
        if (n < 1) throw std::out_of_range("LieElt: n must be >= 1");
    }

    static LieElt zero(int n) { return LieElt(n); }
    static LieElt gen(int n, const LieGen& g) {
        g.validate(n);
        LieElt x(n);
        x.add(g, Rational(1));
        return x;
    }
    static LieElt E(int n, int i, int j) { return gen(n, LieGen::E(i, j)); }
    static LieElt H(int n, int k) { return gen(n, LieGen::H(k)); }

    /// h_i for 1 <= i <= n+2 with h_{n+1} expanded through the alias.
    static LieElt h_elt(int n, int i) {
        if ((i >= 1 && i <= n) || i == n + 2) return H(n, i);
        if (i == n + 1) {
            LieElt x(n);
            for (int k = 1; k <= n; ++k) x.add(LieGen::H(k), Rational(-1));
            return x;
        }
        throw std::out_of_range("LieElt: h index out of range");
    }

    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<LieGen, Rational>& terms() const { return terms_; }

    void add(const LieGen& g, const Rational& c) {
        if (c.is_zero()) return;
        g.validate(n_);
        auto [it, inserted] = terms_.emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LieElt& operator+=(const LieElt& o) {
        check_same_n(o);
        for (const auto& [g, c] : o.terms_) add(g, c);
        return *this;
    }
    LieElt& operator-=(const LieElt& o) {
        check_same_n(o);
        for (const auto& [g, c] : o.terms_) add(g, -c);
        return *this;
    }
    friend LieElt operator+(LieElt x, const LieElt& y) { return x += y; }
    friend LieElt operator-(LieElt x, const LieElt& y) { return x -= y; }
    friend LieElt operator*(const Rational& c, const LieElt& x) {
        LieElt r(x.n_);
        for (const auto& [g, q] : x.terms_) r.add(g, c * q);
        return r;
    }
    LieElt operator-() const { return Rational(-1) * *this; }

    bool operator==(const LieElt& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const LieElt& o) const { return !(*this == o); }

    void check_same_n(const LieElt& o) const {
        if (n_ != o.n_) throw DimensionMismatch("LieElt: elements over different n");
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [g, c] : terms_) {
            bool neg = c.is_negative();
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            Rational mag = c.abs();
            if (!mag.is_one()) out += mag.str() + "*";
            out += g.str();
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const LieElt& x) { return os << x.str(); }

private:
    int n_;
    std::map<LieGen, Rational> terms_;
};

namespace detail {

// [e_ij, e_kl] = delta_jk e_il - delta_li e_kj, with diagonal results
// rewritten into the h-basis (e_ii - e_jj = h_i - h_j).
inline LieElt bracket_gen(int n, const LieGen& x, const LieGen& y) {
    using Kind = LieGen::Kind;
    if (x.kind == Kind::H && y.kind == Kind::H) return LieElt::zero(n);
    if (x.kind == Kind::H && y.kind == Kind::E) {
        int k = x.i, i = y.i, j = y.j;
        Rational coeff = Rational(k == i ? 1 : 0) - Rational(k == j ? 1 : 0) +
                         Rational(1, n + 1) * (Rational(i == n + 2 ? 1 : 0) - Rational(j == n + 2 ? 1 : 0));
        return coeff * LieElt::E(n, i, j);
    }
    if (x.kind == Kind::E && y.kind == Kind::H) return -bracket_gen(n, y, x);

    int i = x.i, j = x.j, k = y.i, l = y.j;
    if (j == k && i == l) return LieElt::h_elt(n, i) - LieElt::h_elt(n, j);
    LieElt r = LieElt::zero(n);
    if (j == k) r += LieElt::E(n, i, l);
    if (i == l) r -= LieElt::E(n, k, j);
    return r;
}

}  // namespace detail

/// Lie bracket, extended bilinearly from the basis rules.
inline LieElt bracket(const LieElt& x, const LieElt& y) {
    x.check_same_n(y);
    LieElt r = LieElt::zero(x.n());
    for (const auto& [gx, cx] : x.terms())
        for (const auto& [gy, cy] : y.terms()) r += (cx * cy) * detail::bracket_gen(x.n(), gx, gy);
    return r;
}

/// True iff every generator lies in the upper-left sl(n+1): all E-indices
/// <= n+1 and no H(n+2) component.
inline bool is_sl_n1(const LieElt& x) {
    int n = x.n();
    for (const auto& [g, c] : x.terms()) {
        if (g.kind == LieGen::Kind::E) {
            if (g.i > n + 1 || g.j > n + 1) return false;
        } else {
            if (g.i == n + 2) return false;
        }
    }
    return true;
}

/// All basis generators of sl(n+2) in a fixed deterministic order.
inline std::vector<LieGen> sl_basis(int n, int size_limit /* n+1 or n+2 */) {
    std::vector<LieGen> basis;
    for (int i = 1; i <= size_limit; ++i)
        for (int j = 1; j <= size_limit; ++j)
            if (i != j) basis.push_back(LieGen::E(i, j));
    for (int k = 1; k <= n; ++k) basis.push_back(LieGen::H(k));
    if (size_limit == n + 2) basis.push_back(LieGen::H(n + 2));
    return basis;
}

}  // namespace gvmforge
