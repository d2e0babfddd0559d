#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "gvmforge/gvm.hpp"

using namespace gvmforge;

namespace {

std::vector<std::set<int>> all_subsets(int n_plus_1) {
    std::vector<std::set<int>> out;
    for (int mask = 0; mask < (1 << n_plus_1); ++mask) {
        std::set<int> S;
        for (int s = 1; s <= n_plus_1; ++s)
            if (mask & (1 << (s - 1))) S.insert(s);
        out.push_back(S);
    }
    return out;
}

GVMElement random_element(std::mt19937_64& rng, const ModuleParams& p, int max_degree, int max_h_degree) {
    std::uniform_int_distribution<int> nterms(1, 4);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::uniform_int_distribution<long> num(-5, 5);
    GVMElement v(p);
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        // spread |m| = deg over n+1 slots
        ExpVec m(static_cast<size_t>(p.n()) + 1, 0);
        int remaining = deg(rng);
        std::uniform_int_distribution<size_t> slot(0, m.size() - 1);
        while (remaining-- > 0) ++m[slot(rng)];
        Poly coeff;
        std::uniform_int_distribution<int> hdeg(0, max_h_degree);
        for (int terms = std::uniform_int_distribution<int>(1, 3)(rng); terms > 0; --terms) {
            Monomial mono;
            mono.h.resize(static_cast<size_t>(p.n()), 0);
            int hd = hdeg(rng);
            std::uniform_int_distribution<size_t> hslot(0, mono.h.size() - 1);
            while (hd-- > 0) ++mono.h[hslot(rng)];
            mono.normalize();
            long c = num(rng);
            if (c == 0) c = 1;
            coeff.add_term(mono, Rational(c));
        }
        v.add_term(m, coeff);
    }
    return v;
}

GVMElement act_pow(const LieGen& g, int times, const GVMElement& v) {
    GVMElement r = v;
    for (int k = 0; k < times; ++k) r = act(g, r);
    return r;
}

}  // namespace

TEST_CASE("inject, degree, homogeneous components") {
    ModuleParams p(1, {1});
    CHECK(inject(Poly::zero(), p).is_zero());
    CHECK_FALSE(degree(inject(Poly::zero(), p)).has_value());

    GVMElement one = inject(Poly::one(), p);
    CHECK(one.terms().size() == 1);
    CHECK(degree(one) == 0);

    GVMElement v = inject(Poly::h(1) - Poly::b_sym(), p);
    CHECK(v.terms().begin()->second == Poly::h(1) - Poly::b_sym());

    GVMElement w(p);
    w.add_term({0, 0}, Poly::one());
    w.add_term({1, 0}, Poly::h(1));
    auto comps = homogeneous_components(w);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].first == 0);
    CHECK(comps[1].first == 1);
    CHECK(comps[0].second + comps[1].second == w);

    GVMElement deep(p);
    deep.add_term({1, 2}, Poly::h(1));
    CHECK(degree(deep) == 3);
    CHECK(homogeneous_components(deep).size() == 1);
    CHECK(homogeneous_components(GVMElement(p)).empty());
}

TEST_CASE("lowering operators annihilate the inducing slice") {
    for (int n = 1; n <= 2; ++n) {
        for (const auto& S : all_subsets(n + 1)) {
            ModuleParams p(n, S);
            for (const Poly& f : {Poly::one(), Poly::h(1), Poly::h(1) * Poly::h(n)}) {
                for (int i = 1; i <= n + 1; ++i) {
                    CHECK(act(LieGen::E(i, n + 2), inject(f, p)).is_zero());
                }
            }
        }
    }
}

TEST_CASE("weight of the degree-one slice") {
    ModuleParams p(1, {2});
    GVMElement v(p);
    v.add_term({1, 0}, Poly::one());
    Poly weight = Poly::lam_sym() + Poly::constant(Rational(3, 2));  // lambda + (n+2)/(n+1)
    CHECK(act(LieGen::H(3), v) == weight * v);
}

TEST_CASE("single lowering step recovers the diagonal factor") {
    ModuleParams p(1, {1});
    GVMElement v(p);
    v.add_term({1, 0}, Poly::one());
    GVMElement expect = inject(Poly::h(1) - Poly::lam_sym(), p);
    CHECK(act(LieGen::E(1, 3), v) == expect);
}

TEST_CASE("sl(n+1) root vectors act per the straightening rule") {
    ModuleParams p(1, {1});
    GVMElement v(p);
    v.add_term({1, 0}, Poly::one());
    GVMElement expect(p);
    expect.add_term({1, 0}, act_v(LieGen::E(1, 2), Poly::one(), p));
    expect.add_term({0, 1}, Poly::constant(Rational(-1)));
    CHECK(act(LieGen::E(1, 2), v) == expect);
}

TEST_CASE("commutation identities through the module") {
    // the six straightening identities, applied to generic starting elements
    for (int n = 1; n <= 2; ++n) {
        for (const auto& S : {all_subsets(n + 1)[0], all_subsets(n + 1)[1], all_subsets(n + 1).back()}) {
            ModuleParams p(n, S);
            std::vector<GVMElement> starts;
            starts.push_back(inject(Poly::h(1), p));
            GVMElement off(p);
            ExpVec e1(static_cast<size_t>(n) + 2 - 1, 0);
            e1[0] = 1;
            off.add_term(e1, Poly::h(1) * Poly::h(1));
            starts.push_back(off);
            for (const auto& w : starts) {
                for (int m = 1; m <= 2; ++m) {
                    for (int i = 1; i <= n + 1; ++i) {
                        LieGen Ei_low = LieGen::E(i, n + 2);
                        LieGen Ei_raise = LieGen::E(n + 2, i);
                        // e_{i,n+2} e_{n+2,i}^m
                        GVMElement lhs = act(Ei_low, act_pow(Ei_raise, m, w));
                        GVMElement rhs = act_pow(Ei_raise, m, act(Ei_low, w));
                        LieElt hi = LieElt::h_elt(n, i) - LieElt::h_elt(n, n + 2);
                        GVMElement corr = act(hi, w) - Rational(m - 1) * w;
                        rhs += Rational(m) * act_pow(Ei_raise, m - 1, corr);
                        CHECK(lhs == rhs);
                        for (int k = 1; k <= n + 1; ++k) {
                            if (k == i) continue;
                            LieGen Ek_raise = LieGen::E(n + 2, k);
                            // e_{i,n+2} e_{n+2,k}^m
                            GVMElement lhs1 = act(Ei_low, act_pow(Ek_raise, m, w));
                            GVMElement rhs1 = act_pow(Ek_raise, m, act(Ei_low, w)) +
                                              Rational(m) * act_pow(Ek_raise, m - 1, act(LieGen::E(i, k), w));
                            CHECK(lhs1 == rhs1);
                            // e_{i,k} e_{n+2,i}^m
                            GVMElement lhs2 = act(LieGen::E(i, k), act_pow(Ei_raise, m, w));
                            GVMElement rhs2 = act_pow(Ei_raise, m, act(LieGen::E(i, k), w)) -
                                              Rational(m) * act(Ek_raise, act_pow(Ei_raise, m - 1, w));
                            CHECK(lhs2 == rhs2);
                            // h_k e_{n+2,i}^m for k <= n
                            if (k <= n) {
                                GVMElement lhs3 = act(LieGen::H(k), act_pow(Ei_raise, m, w));
                                GVMElement rhs3 = act_pow(Ei_raise, m, act(LieGen::H(k), w)) +
                                                  Rational(m, n + 1) * act_pow(Ei_raise, m, w);
                                CHECK(lhs3 == rhs3);
                            }
                        }
                        // h_i e_{n+2,i}^m for i <= n
                        if (i <= n) {
                            GVMElement lhs4 = act(LieGen::H(i), act_pow(Ei_raise, m, w));
                            GVMElement rhs4 = act_pow(Ei_raise, m, act(LieGen::H(i), w)) -
                                              Rational(m * n, n + 1) * act_pow(Ei_raise, m, w);
                            CHECK(lhs4 == rhs4);
                        }
                        // h_{n+2} e_{n+2,i}^m
                        GVMElement lhs5 = act(LieGen::H(n + 2), act_pow(Ei_raise, m, w));
                        GVMElement rhs5 = act_pow(Ei_raise, m, act(LieGen::H(n + 2), w)) +
                                          Rational((n + 2) * m, n + 1) * act_pow(Ei_raise, m, w);
                        CHECK(lhs5 == rhs5);
                    }
                }
            }
        }
    }
}

TEST_CASE("module axiom on random elements") {
    std::mt19937_64 rng(7);
    const int n = 1;
    auto gens = sl_basis(n, n + 2);
    for (const auto& S : all_subsets(n + 1)) {
        ModuleParams p(n, S);  // symbolic a, b, lambda
        for (int rep = 0; rep < 4; ++rep) {
            GVMElement v = random_element(rng, p, 2, 2);
            std::vector<GVMElement> images;
            for (const auto& g : gens) images.push_back(act(LieGen(g), v));
            for (size_t xi = 0; xi < gens.size(); ++xi)
                for (size_t yi = xi + 1; yi < gens.size(); ++yi) {
                    LieElt x = LieElt::gen(n, gens[xi]);
                    LieElt y = LieElt::gen(n, gens[yi]);
                    GVMElement lhs = act(bracket(x, y), v);
                    GVMElement rhs = act(gens[xi], images[yi]) - act(gens[yi], images[xi]);
                    REQUIRE(lhs == rhs);
                }
        }
    }
}

TEST_CASE("degree behavior of the action") {
    std::mt19937_64 rng(11);
    const int n = 2;
    ModuleParams p(n, {1, 3});
    for (int rep = 0; rep < 6; ++rep) {
        GVMElement v = random_element(rng, p, 3, 2);
        auto comps = homogeneous_components(v);
        for (const auto& [N, comp] : comps) {
            for (int i = 1; i <= n + 1; ++i) {
                GVMElement raised = act(LieGen::E(n + 2, i), comp);
                CHECK(degree(raised) == N + 1);
                GVMElement lowered = act(LieGen::E(i, n + 2), comp);
                CHECK((lowered.is_zero() || degree(lowered) == N - 1));
                for (int k = 1; k <= n + 1; ++k) {
                    if (k == i) continue;
                    GVMElement moved = act(LieGen::E(i, k), comp);
                    CHECK((moved.is_zero() || degree(moved) == N));
                }
            }
            for (int k = 1; k <= n; ++k) {
                GVMElement hk = act(LieGen::H(k), comp);
                CHECK((hk.is_zero() || degree(hk) == N));
            }
            Poly weight = Poly::lam_sym() + Poly::constant(Rational((n + 2) * N, n + 1));
            CHECK(act(LieGen::H(n + 2), comp) == weight * comp);
        }
    }
}

TEST_CASE("dimension mismatch across modules") {
    ModuleParams p1(1, {1});
    ModuleParams p2(2, {1});
    GVMElement v(p1);
    v.add_term({1, 0}, Poly::one());
    CHECK_THROWS_AS(act(LieElt::H(2, 1), v), DimensionMismatch);
    GVMElement w(p2);
    CHECK_THROWS_AS(v += w, DimensionMismatch);
    CHECK_THROWS(v.add_term({1, 2, 0}, Poly::one()));
}
