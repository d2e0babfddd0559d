#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gvmforge/lie.hpp"
#include "gvmforge/poly.hpp"

namespace gvmforge {

struct OutOfSubalgebra : std::invalid_argument {
    explicit OutOfSubalgebra(const std::string& what) : std::invalid_argument(what) {}
};

/// Parameters (n, S, a, b, lambda) of the rank-1 free module and its
/// extension to sl(n+1) + C*h_{n+2}. Each of a, b, lambda is either the
/// corresponding symbol or a concrete rational; lambda may also be an
/// expression in b (used when a series constraint pins it down).
/// a_{n+1} is always 1.
class ModuleParams {
public:
    ModuleParams(int n, std::set<int> S) : n_(n), S_(std::move(S)), b_(Poly::b_sym()), lambda_(Poly::lam_sym()) {
        if (n < 1) throw std::out_of_range("ModuleParams: n must be >= 1");
        for (int s : S_)
            if (s < 1 || s > n + 1) throw std::out_of_range("ModuleParams: S must be a subset of {1..n+1}");
    }

    ModuleParams with_b(const Rational& b) const {
        ModuleParams p = *this;
        p.b_ = Poly::constant(b);
        return p;
    }
    ModuleParams with_b_poly(const Poly& b) const {
        ModuleParams p = *this;
        p.b_ = b;
        return p;
    }
    ModuleParams with_lambda(const Rational& lambda) const {
        ModuleParams p = *this;
        p.lambda_ = Poly::constant(lambda);
        return p;
    }
    ModuleParams with_lambda_poly(const Poly& lambda) const {
        ModuleParams p = *this;
        p.lambda_ = lambda;
        return p;
    }
    ModuleParams with_a(const std::vector<Rational>& a) const {
        if (static_cast<int>(a.size()) != n_) throw std::invalid_argument("ModuleParams: a must have n entries");
        for (const Rational& v : a)
            if (v.is_zero()) throw ZeroUnit("ModuleParams: a-values must be nonzero");
        ModuleParams p = *this;
        p.a_ = a;
        return p;
    }

    int n() const { return n_; }
    const std::set<int>& S() const { return S_; }
    bool in_S(int s) const { return S_.count(s) != 0; }

    bool a_concrete() const { return a_.has_value(); }
    bool b_concrete() const { return b_.is_constant(); }
    bool lambda_concrete() const { return lambda_.is_constant(); }
    const std::optional<std::vector<Rational>>& a_values() const { return a_; }

    const Poly& b() const { return b_; }
    const Poly& lambda() const { return lambda_; }

    /// a_i^exp for 1 <= i <= n+1 (a_{n+1} = 1); exp may be negative.
    Poly a_pow(int i, int exp) const {
        if (i < 1 || i > n_ + 1) throw std::out_of_range("ModuleParams: a index out of range");
        if (i == n_ + 1 || exp == 0) return Poly::one();
        if (a_) return Poly::constant((*a_)[static_cast<size_t>(i) - 1].pow(exp));
        return Poly::a_sym(i, exp);
    }

    /// h_i with h_{n+1} expanded through the alias.
    Poly h(int i) const { return Poly::h_or_alias(i, n_); }

    bool operator==(const ModuleParams& o) const {
        return n_ == o.n_ && S_ == o.S_ && a_ == o.a_ && b_ == o.b_ && lambda_ == o.lambda_;
    }

private:
    int n_;
    std::set<int> S_;
    std::optional<std::vector<Rational>> a_;
    Poly b_;
    Poly lambda_;
};

/// Action of a basis element of sl(n+1) + C*h_{n+2} on f in the rank-1 free
/// module: h_i acts by multiplication, h_{n+2} by the scalar lambda, and
///   e_{i,j} . f = a_i a_j^{-1} (d_{i in S} + d_{i not in S}(h_i-b-1))
///                 (d_{j in S}(h_j-b) + d_{j not in S}) sigma_i sigma_j^{-1}(f).
inline Poly act_v(const LieGen& g, const Poly& f, const ModuleParams& p) {
    const int n = p.n();
    g.validate(n);
    if (g.kind == LieGen::Kind::H) {
        if (g.i == n + 2) return p.lambda() * f;
        return Poly::h(g.i) * f;
    }
    const int i = g.i, j = g.j;
    if (i > n + 1 || j > n + 1)
        throw OutOfSubalgebra("act_v: " + g.str() + " is not in sl(n+1) + C*h_{n+2}");
    Poly pre_i = p.in_S(i) ? Poly::one() : p.h(i) - p.b() - Poly::one();
    Poly pre_j = p.in_S(j) ? p.h(j) - p.b() : Poly::one();
    Poly shifted = sigma(i, +1, sigma(j, -1, f, n), n);
    return p.a_pow(i, 1) * p.a_pow(j, -1) * pre_i * pre_j * shifted;
}

inline Poly act_v(const LieElt& x, const Poly& f, const ModuleParams& p) {
    if (x.n() != p.n()) throw DimensionMismatch("act_v: element and params over different n");
    Poly r;
    for (const auto& [g, c] : x.terms()) r += c * act_v(g, f, p);
    return r;
}

enum class VSimplicity { Simple, NotSimple, Indeterminate };

/// Simplicity of the inducing module: simple iff 1 <= |S| <= n or
/// (n+1)b is not a nonnegative integer. Indeterminate when that membership
/// question involves a symbolic b.
inline VSimplicity is_simple_v(const ModuleParams& p) {
    const size_t size = p.S().size();
    if (size >= 1 && size <= static_cast<size_t>(p.n())) return VSimplicity::Simple;
    if (!p.b_concrete()) return VSimplicity::Indeterminate;
    Rational nb = Rational(p.n() + 1) * p.b().constant_value();
    return nb.is_nonnegative_integer() ? VSimplicity::NotSimple : VSimplicity::Simple;
}

}  // namespace gvmforge
