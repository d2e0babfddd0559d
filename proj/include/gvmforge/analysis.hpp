#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gvmforge/freemod.hpp"
#include "gvmforge/gvm.hpp"
#include "gvmforge/linalg.hpp"
#include "gvmforge/poly.hpp"

namespace gvmforge {

struct BadDegree : std::domain_error {
    explicit BadDegree(const std::string& what) : std::domain_error(what) {}
};
struct ConstraintViolated : std::domain_error {
    explicit ConstraintViolated(const std::string& what) : std::domain_error(what) {}
};

/// Square matrix with polynomial entries.
class PolyMatrix {
public:
    explicit PolyMatrix(int size) : size_(size), cells_(static_cast<size_t>(size) * size) {}

    int size() const { return size_; }
    Poly& at(int r, int c) { return cells_[static_cast<size_t>(r) * size_ + c]; }
    const Poly& at(int r, int c) const { return cells_[static_cast<size_t>(r) * size_ + c]; }

    static PolyMatrix identity(int size) {
        PolyMatrix m(size);
        for (int i = 0; i < size; ++i) m.at(i, i) = Poly::one();
        return m;
    }

private:
    int size_;
    std::vector<Poly> cells_;
};

/// Determinant by cofactor expansion over the ring (no division), with
/// minors memoized on the active column set.
inline Poly det(const PolyMatrix& M) {
    const int size = M.size();
    if (size == 0) return Poly::one();
    std::map<uint32_t, Poly> memo;
    std::function<Poly(uint32_t)> expand = [&](uint32_t colmask) -> Poly {
        auto it = memo.find(colmask);
        if (it != memo.end()) return it->second;
        int row = size - __builtin_popcount(colmask);
        Poly result;
        int sign = 1;
        for (int c = 0; c < size; ++c) {
            if (!(colmask & (1u << c))) continue;
            Poly sub = expand(colmask & ~(1u << c));
            Poly term = M.at(row, c) * sub;
            result += sign > 0 ? term : -term;
            sign = -sign;
        }
        memo.emplace(colmask, result);
        return result;
    };
    memo.emplace(0u, Poly::one());
    return expand((1u << size) - 1);
}

// ---------------------------------------------------------------------------
// The obstruction matrix A(lambda, b, S, N).
// ---------------------------------------------------------------------------

namespace detail {

/// h-bar_i = h_i - delta_{i,n+1}, with h_{n+1} alias-expanded.
inline Poly h_bar(const ModuleParams& p, int i) {
    Poly h = p.h(i);
    if (i == p.n() + 1) h -= Poly::one();
    return h;
}

}  // namespace detail

/// A_ij = (d_{i in S} + d_{i not in S}(hbar_i - b))(d_{j in S}(hbar_j - b) + d_{j not in S})
/// off the diagonal, A_ii = hbar_i - lambda - N + 2.
inline PolyMatrix build_A(const ModuleParams& p, int N) {
    if (N < 1) throw BadDegree("build_A: N must be >= 1");
    const int size = p.n() + 1;
    PolyMatrix A(size);
    for (int i = 1; i <= size; ++i) {
        Poly row_factor = p.in_S(i) ? Poly::one() : detail::h_bar(p, i) - p.b();
        for (int j = 1; j <= size; ++j) {
            if (i == j) {
                A.at(i - 1, j - 1) = detail::h_bar(p, i) - p.lambda() - Poly::constant(Rational(N - 2));
            } else {
                Poly col_factor = p.in_S(j) ? detail::h_bar(p, j) - p.b() : Poly::one();
                A.at(i - 1, j - 1) = row_factor * col_factor;
            }
        }
    }
    return A;
}

/// The closed form (-nb - lambda - N + 1)(b - lambda - N + 2)^n.
inline Poly det_A_closed_form(const ModuleParams& p, int N) {
    Poly first = Rational(-p.n()) * p.b() - p.lambda() - Poly::constant(Rational(N - 1));
    Poly second = p.b() - p.lambda() - Poly::constant(Rational(N - 2));
    return first * second.pow(p.n());
}

// ---------------------------------------------------------------------------
// The five polynomial families.
// ---------------------------------------------------------------------------

namespace detail {

inline void check_mbar(const ExpVec& m, const ModuleParams& p) {
    if (static_cast<int>(m.size()) != p.n() + 1)
        throw DimensionMismatch("polynomial family: exponent vector must have n+1 entries");
    for (int32_t e : m)
        if (e < 0) throw std::out_of_range("polynomial family: negative exponent");
}

/// a^m / m!  (with a_{n+1} = 1).
inline Poly mbar_prefactor(const ExpVec& m, const ModuleParams& p) {
    Poly r = Poly::one();
    Rational inv_fact(1);
    for (int s = 1; s <= p.n() + 1; ++s) {
        int32_t e = m[static_cast<size_t>(s) - 1];
        if (e > 0) r *= p.a_pow(s, e);
        inv_fact = inv_fact / Rational::factorial(static_cast<unsigned>(e));
    }
    return inv_fact * r;
}

/// prod_{k=lo..hi} (base + k); 1 when hi < lo.
inline Poly range_product(const Poly& base, int lo, int hi) {
    Poly r = Poly::one();
    for (int k = lo; k <= hi; ++k) r *= base + Poly::constant(Rational(k));
    return r;
}

}  // namespace detail

/// P_m = (a^m/m!) prod_{s not in S} prod_{k=1}^{m_s} (h_s - b - k).
inline Poly build_P(const ExpVec& m, const ModuleParams& p) {
    detail::check_mbar(m, p);
    Poly r = detail::mbar_prefactor(m, p);
    for (int s = 1; s <= p.n() + 1; ++s) {
        if (p.in_S(s)) continue;
        Poly base = p.h(s) - p.b();
        for (int k = 1; k <= m[static_cast<size_t>(s) - 1]; ++k) r *= base - Poly::constant(Rational(k));
    }
    return r;
}

/// P'_m with the degree parameter N >= |m|.
inline Poly build_Pprime(const ExpVec& m, int N, const ModuleParams& p) {
    detail::check_mbar(m, p);
    if (N < exp_sum(m)) throw BadDegree("build_Pprime: N < |m|");
    const int n = p.n();
    const int m_last = m[static_cast<size_t>(n)];
    Poly r = detail::mbar_prefactor(m, p);
    for (int s = 1; s <= n; ++s) {
        if (p.in_S(s)) continue;
        Poly base = p.h(s) - p.b();
        for (int k = 1; k <= m[static_cast<size_t>(s) - 1]; ++k) r *= base - Poly::constant(Rational(k));
    }
    if (p.in_S(n + 1)) {
        // prod_{r=1}^{N-m_{n+1}} (h_{n+1} - b - 1 + r)
        r *= detail::range_product(p.h(n + 1) - p.b() - Poly::one(), 1, N - m_last);
    }
    // prod_{t=1}^{m_{n+1}} (h_{n+1} + n b - t + 1)
    Poly base = p.h(n + 1) + Rational(n) * p.b() + Poly::one();
    for (int t = 1; t <= m_last; ++t) r *= base - Poly::constant(Rational(t));
    return r;
}

/// Delta_m with the degree parameter N >= |m|.
inline Poly build_Delta(const ExpVec& m, int N, const ModuleParams& p) {
    detail::check_mbar(m, p);
    if (N < exp_sum(m)) throw BadDegree("build_Delta: N < |m|");
    const int n = p.n();
    const int m_last = m[static_cast<size_t>(n)];
    Poly r = detail::mbar_prefactor(m, p);
    for (int s = 1; s <= n + 1; ++s) {
        if (p.in_S(s)) continue;
        Poly base = p.h(s) - p.b();
        for (int k = 1; k <= m[static_cast<size_t>(s) - 1]; ++k) r *= base - Poly::constant(Rational(k));
    }
    r *= detail::range_product(p.h(n + 1) - p.b() - Poly::constant(Rational(2)), 2, N - m_last);
    Poly base = p.h(n + 1) + Rational(n) * p.b();
    for (int t = 1; t <= m_last; ++t) r *= base - Poly::constant(Rational(t));
    return r;
}

/// Theta_m.
inline Poly build_Theta(const ExpVec& m, const ModuleParams& p) {
    detail::check_mbar(m, p);
    const int n = p.n();
    Poly r = detail::mbar_prefactor(m, p);
    for (int s = 1; s <= n; ++s) {
        if (p.in_S(s)) continue;
        Poly base = p.h(s) - p.b();
        for (int k = 1; k <= m[static_cast<size_t>(s) - 1]; ++k) r *= base - Poly::constant(Rational(k));
    }
    // prod_{k=1}^{m_{n+1}} (h_{n+1} - b - k - 1)
    Poly base = p.h(n + 1) - p.b() - Poly::one();
    for (int k = 1; k <= m[static_cast<size_t>(n)]; ++k) r *= base - Poly::constant(Rational(k));
    return r;
}

/// Upsilon_m.
inline Poly build_Upsilon(const ExpVec& m, const ModuleParams& p) {
    detail::check_mbar(m, p);
    const int n = p.n();
    Poly r = detail::mbar_prefactor(m, p);
    for (int s = 1; s <= n; ++s) {
        if (p.in_S(s)) continue;
        Poly base = p.h(s) - p.b();
        for (int k = 1; k <= m[static_cast<size_t>(s) - 1]; ++k) r *= base - Poly::constant(Rational(k));
    }
    Poly base = p.h(n + 1) + Rational(n) * p.b();
    for (int t = 1; t <= m[static_cast<size_t>(n)]; ++t) r *= base - Poly::constant(Rational(t));
    return r;
}

// ---------------------------------------------------------------------------
// Shift identities, null vectors, singular vectors.
// ---------------------------------------------------------------------------

enum class Series { v1, v2 };
inline const char* series_name(Series s) { return s == Series::v1 ? "v1" : "v2"; }

namespace detail {

/// a_j^{-1} (m_j + 1) sigma_j^{-1}(X_{m + e_j}), the j-th transformed
/// component appearing in the shift identities and null vectors.
inline Poly shifted_component(int j, const ExpVec& m, const ModuleParams& p,
                              const std::function<Poly(const ExpVec&)>& family) {
    ExpVec bumped = m;
    ++bumped[static_cast<size_t>(j) - 1];
    Rational mult(m[static_cast<size_t>(j) - 1] + 1);
    return mult * (p.a_pow(j, -1) * sigma(j, -1, family(bumped), p.n()));
}

inline void for_each_composition(int total, int slots, ExpVec& acc, const std::function<void(const ExpVec&)>& fn) {
    if (slots == 1) {
        acc.push_back(total);
        fn(acc);
        acc.pop_back();
        return;
    }
    for (int v = 0; v <= total; ++v) {
        acc.push_back(v);
        for_each_composition(total - v, slots - 1, acc, fn);
        acc.pop_back();
    }
}

}  // namespace detail

/// Calls fn for every m in Z_+^{slots} with |m| = total, in lexicographic order.
inline void for_each_exponent_vector(int total, int slots, const std::function<void(const ExpVec&)>& fn) {
    ExpVec acc;
    detail::for_each_composition(total, slots, acc, fn);
}

/// Checks the applicable shift identity for every j in {1..n+1}, for both the
/// P and the P' families (the eight cases split by n+1 in S and j in S).
/// Requires N >= |m| + 1 so that the P' family is defined at m + e_j.
inline bool verify_lemma7(const ExpVec& m, int N, const ModuleParams& p) {
    detail::check_mbar(m, p);
    if (N < exp_sum(m) + 1) throw BadDegree("verify_lemma7: requires N >= |m| + 1");
    const int n = p.n();
    const Poly P_m = build_P(m, p);
    const Poly hb = p.h(n + 1) - p.b();

    for (int j = 1; j <= n + 1; ++j) {
        Poly lhs_P = detail::shifted_component(j, m, p, [&](const ExpVec& mm) { return build_P(mm, p); });
        Poly lhs_Pp = detail::shifted_component(j, m, p, [&](const ExpVec& mm) { return build_Pprime(mm, N, p); });
        Poly rhs_P, rhs_Pp;
        if (p.in_S(n + 1)) {
            const Poly Delta = build_Delta(m, N, p);
            rhs_P = p.in_S(j) ? P_m : (p.h(j) - p.b()) * P_m;
            if (j == n + 1) {
                rhs_Pp = (p.h(n + 1) + Rational(n) * p.b()) * Delta;
            } else if (p.in_S(j)) {
                rhs_Pp = (hb - Poly::one()) * Delta;
            } else {
                rhs_Pp = (p.h(j) - p.b()) * (hb - Poly::one()) * Delta;
            }
        } else {
            const Poly Theta = build_Theta(m, p);
            const Poly Upsilon = build_Upsilon(m, p);
            if (j == n + 1) {
                rhs_P = (hb - Poly::one()) * Theta;
                rhs_Pp = (p.h(n + 1) + Rational(n) * p.b()) * Upsilon;
            } else if (p.in_S(j)) {
                rhs_P = Theta;
                rhs_Pp = Upsilon;
            } else {
                rhs_P = (p.h(j) - p.b()) * Theta;
                rhs_Pp = (p.h(j) - p.b()) * Upsilon;
            }
        }
        if (lhs_P != rhs_P || lhs_Pp != rhs_Pp) return false;
    }
    return true;
}

/// The lambda value pinned down by a series constraint:
/// v1: lambda = 1 - N - n b;  v2: lambda = b - N + 2.
inline Poly series_lambda(Series series, int N, const ModuleParams& p) {
    if (series == Series::v1) return Poly::constant(Rational(1 - N)) - Rational(p.n()) * p.b();
    return p.b() + Poly::constant(Rational(2 - N));
}

/// The component vector of the null vector of A(lambda,b,S,N) at m with
/// |m| = N - 1 (series v1 uses the P family, v2 the P' family).
inline std::vector<Poly> null_vector(Series series, const ExpVec& m, int N, const ModuleParams& p) {
    detail::check_mbar(m, p);
    if (exp_sum(m) != N - 1) throw BadDegree("null_vector: requires |m| = N - 1");
    std::function<Poly(const ExpVec&)> family;
    if (series == Series::v1) {
        family = [&](const ExpVec& mm) { return build_P(mm, p); };
    } else {
        family = [&](const ExpVec& mm) { return build_Pprime(mm, N, p); };
    }
    std::vector<Poly> comps;
    for (int j = 1; j <= p.n() + 1; ++j) comps.push_back(detail::shifted_component(j, m, p, family));
    return comps;
}

/// Params with lambda pinned to the series constraint. Concrete lambda and b
/// are checked exactly; otherwise lambda is substituted.
inline ModuleParams constrain_params(Series series, int N, const ModuleParams& p) {
    Poly target = series_lambda(series, N, p);
    if (p.lambda_concrete() && p.b_concrete()) {
        if (p.lambda() != target)
            throw ConstraintViolated(std::string("singular_vector: params do not satisfy the ") +
                                     series_name(series) + " constraint at N = " + std::to_string(N));
        return p;
    }
    return p.with_lambda_poly(target);
}

/// The degree-N singular vector of the given series:
///   v1 = sum_{|m|=N} E^m P_m   (requires n b + lambda + N - 1 = 0),
///   v2 = sum_{|m|=N} E^m P'_m  (requires b - lambda - N + 2 = 0).
inline GVMElement singular_vector(Series series, int N, const ModuleParams& p) {
    if (N < 1) throw BadDegree("singular_vector: N must be >= 1");
    ModuleParams constrained = constrain_params(series, N, p);
    GVMElement v(constrained);
    for_each_exponent_vector(N, p.n() + 1, [&](const ExpVec& m) {
        v.add_term(m, series == Series::v1 ? build_P(m, constrained) : build_Pprime(m, N, constrained));
    });
    return v;
}

// ---------------------------------------------------------------------------
// Simplicity classification and the brute-force oracle.
// ---------------------------------------------------------------------------

enum class Verdict { Simple, Reducible, InducingNotSimple };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Simple: return "simple";
        case Verdict::Reducible: return "reducible";
        default: return "inducing-module-not-simple";
    }
}

struct Witness {
    Series series;
    int N;
    GVMElement vector;
};

struct OracleRun {
    int N_max = 0;
    int h_deg_max = 0;
    std::vector<std::pair<int, GVMElement>> found;
};

struct SimplicityReport {
    ModuleParams params;
    Verdict verdict;
    bool cond_i;
    bool cond_ii;
    bool cond_iii;
    std::optional<Witness> witness;
    std::optional<OracleRun> oracle;
};

/// Brute-force search for singular vectors: for each degree N <= N_max, sets
/// up the exact linear system e_{i,n+2}.v = 0 over homogeneous degree-N
/// elements with coefficient h-degree <= h_deg_max and returns a nullspace
/// basis per degree. Independent of the matrix A and the closed forms.
inline std::vector<std::pair<int, GVMElement>> search_singular(const ModuleParams& p, int N_max, int h_deg_max) {
    if (!p.b_concrete() || !p.lambda_concrete() || !p.a_concrete())
        throw std::invalid_argument("search_singular: requires concrete a, b, lambda");
    const int n = p.n();
    std::vector<std::pair<int, GVMElement>> results;

    // h-monomials of total degree <= h_deg_max, ascending (degree, lex)
    std::vector<Monomial> h_monomials;
    for (int d = 0; d <= h_deg_max; ++d) {
        for_each_exponent_vector(d, n, [&](const ExpVec& e) {
            Monomial mono;
            mono.h.assign(e.begin(), e.end());
            mono.normalize();
            h_monomials.push_back(mono);
        });
    }

    for (int N = 1; N <= N_max; ++N) {
        std::vector<ExpVec> mbars;
        for_each_exponent_vector(N, n + 1, [&](const ExpVec& m) { mbars.push_back(m); });

        struct Column {
            ExpVec m;
            Monomial mono;
        };
        std::vector<Column> columns;
        for (const auto& m : mbars)
            for (const auto& mono : h_monomials) columns.push_back({m, mono});

        // row key: (i, target m, target monomial) in first-seen order per
        // deterministic column traversal
        std::map<std::string, std::map<int, Rational>> rows;
        for (int c = 0; c < static_cast<int>(columns.size()); ++c) {
            GVMElement basis_elt(p);
            Poly coeff;
            coeff.add_term(columns[static_cast<size_t>(c)].mono, Rational(1));
            basis_elt.add_term(columns[static_cast<size_t>(c)].m, coeff);
            for (int i = 1; i <= n + 1; ++i) {
                GVMElement image = act(LieGen::E(i, n + 2), basis_elt);
                for (const auto& [mt, pt] : image.terms()) {
                    for (const auto& [mono, q] : pt.terms()) {
                        std::string key = std::to_string(i) + "|";
                        for (int32_t e : mt) key += std::to_string(e) + ",";
                        key += "|";
                        for (int32_t e : mono.h) key += std::to_string(e) + ",";
                        rows[key][c] += q;
                    }
                }
            }
        }

        LinearSystem sys(static_cast<int>(columns.size()));
        for (auto& [key, row] : rows) {
            for (auto it = row.begin(); it != row.end();)
                it = it->second.is_zero() ? row.erase(it) : std::next(it);
            sys.add_row(std::move(row));
        }
        for (const auto& x : sys.nullspace_basis()) {
            GVMElement v(p);
            for (size_t c = 0; c < x.size(); ++c) {
                if (x[c].is_zero()) continue;
                Poly coeff;
                coeff.add_term(columns[c].mono, x[c]);
                v.add_term(columns[c].m, coeff);
            }
            results.emplace_back(N, std::move(v));
        }
    }
    return results;
}

/// One grid point of the classifier/oracle comparison. `expected_degrees`
/// are the window degrees at which the closed-form determinant vanishes,
/// i.e. the witness degrees of whichever of conditions (i)/(ii) fail;
/// `agree` asserts found == expected. Points whose inducing module is not
/// simple are excluded from the assertion and only categorized.
struct GridPointResult {
    std::set<int> found_degrees;
    std::set<int> expected_degrees;
    bool excluded = false;
    bool agree = true;
};

inline GridPointResult evaluate_grid_point(const struct SimplicityReport& report, const ModuleParams& p,
                                           int N_max, int h_deg_max);

/// Decides simplicity at concrete (b, lambda):
///   (i)   b - lambda + 2 is not a positive integer,
///   (ii)  n b + lambda - 1 is not a negative integer,
///   (iii) the inducing module is simple.
/// A failing (i) or (ii) yields a verified singular-vector witness.
inline SimplicityReport classify(const ModuleParams& p) {
    if (!p.b_concrete() || !p.lambda_concrete())
        throw std::invalid_argument("classify: requires concrete b and lambda");
    const Rational b = p.b().constant_value();
    const Rational lambda = p.lambda().constant_value();
    const Rational crit_i = b - lambda + Rational(2);
    const Rational crit_ii = Rational(p.n()) * b + lambda - Rational(1);

    SimplicityReport report{p, Verdict::Simple, true, true, true, std::nullopt, std::nullopt};
    report.cond_i = !crit_i.is_positive_integer();
    report.cond_ii = !(crit_ii.is_integer() && crit_ii < Rational(0));
    report.cond_iii = is_simple_v(p) == VSimplicity::Simple;

    std::optional<std::pair<Series, int>> choice;
    if (!report.cond_i) choice = {Series::v2, static_cast<int>(crit_i.to_long())};
    if (!report.cond_ii) {
        int N1 = static_cast<int>((-crit_ii).to_long());
        // smaller-N witness wins; on a tie the v1 series is reported
        if (!choice || N1 <= choice->second) choice = {Series::v1, N1};
    }
    if (choice) {
        GVMElement v = singular_vector(choice->first, choice->second, p);
        for (int i = 1; i <= p.n() + 1; ++i)
            if (!act(LieGen::E(i, p.n() + 2), v).is_zero())
                throw std::logic_error("classify: witness verification failed");
        report.verdict = Verdict::Reducible;
        report.witness = Witness{choice->first, choice->second, std::move(v)};
    } else if (!report.cond_iii) {
        report.verdict = Verdict::InducingNotSimple;
    }
    return report;
}

inline GridPointResult evaluate_grid_point(const SimplicityReport& report, const ModuleParams& p, int N_max,
                                           int h_deg_max) {
    GridPointResult r;
    for (const auto& [N, v] : search_singular(p, N_max, h_deg_max)) r.found_degrees.insert(N);
    const Rational b = p.b().constant_value();
    const Rational lambda = p.lambda().constant_value();
    const Rational N2 = b - lambda + Rational(2);
    const Rational N1 = Rational(1) - Rational(p.n()) * b - lambda;
    for (const Rational& Nw : {N1, N2})
        if (Nw.is_positive_integer() && Nw <= Rational(N_max))
            r.expected_degrees.insert(static_cast<int>(Nw.to_long()));
    r.excluded = report.verdict == Verdict::InducingNotSimple;
    r.agree = r.excluded || r.found_degrees == r.expected_degrees;
    return r;
}

}  // namespace gvmforge
