#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "gvmforge/poly.hpp"

using namespace gvmforge;

namespace {

// Seeded generator of small random polynomials over all tracked symbols.
Poly random_poly(std::mt19937_64& rng, int n, bool laurent = true) {
    std::uniform_int_distribution<int> nterms(0, 4);
    std::uniform_int_distribution<int> hexp(0, 2);
    std::uniform_int_distribution<int> small(0, 1);
    std::uniform_int_distribution<int> aexp(-1, 1);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    Poly p;
    int t = nterms(rng);
    for (int k = 0; k < t; ++k) {
        Monomial m;
        m.h.resize(static_cast<size_t>(n));
        for (auto& e : m.h) e = hexp(rng);
        m.lam = small(rng);
        m.b = small(rng);
        if (laurent) {
            m.a.resize(static_cast<size_t>(n));
            for (auto& e : m.a) e = aexp(rng);
        }
        m.normalize();
        long nv = num(rng);
        if (nv == 0) nv = 1;
        p.add_term(m, Rational(nv, den(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 6) == Rational(1, 3));
    CHECK(Rational(1, -3) == Rational(-1, 3));
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(-4, 6).str() == "-2/3");
    CHECK(Rational::parse("7/2") == Rational(7, 2));
    CHECK(Rational(1, 3) + Rational(1, 3) == Rational(2, 3));
    CHECK(Rational(3, 2).pow(-2) == Rational(4, 9));
    CHECK(Rational(-5, 2).is_integer() == false);
    CHECK(Rational(4).is_positive_integer());
    CHECK(Rational(0).is_nonnegative_integer());
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("ring basics") {
    CHECK((Poly::h(1) + (-Poly::h(1))).is_zero());
    CHECK(Poly::a_sym(1) * Poly::a_sym(1, -1) == Poly::one());
    Poly diff_sq = (Poly::h(1) - Poly::b_sym()) * (Poly::h(1) + Poly::b_sym());
    CHECK(diff_sq == Poly::h(1) * Poly::h(1) - Poly::b_sym() * Poly::b_sym());
}

TEST_CASE("h alias") {
    CHECK(Poly::h_alias(1) == -Poly::h(1));
    CHECK(Poly::h_alias(2) == -Poly::h(1) - Poly::h(2));
    CHECK(Poly::h_alias(3) == -Poly::h(1) - Poly::h(2) - Poly::h(3));
    CHECK(Poly::h_or_alias(2, 1) == Poly::h_alias(1));
    CHECK(Poly::h_or_alias(2, 2) == Poly::h(2));
}

TEST_CASE("sigma shift") {
    CHECK(sigma(1, +1, Poly::h(1), 2) == Poly::h(1) - Poly::one());
    // sigma_{n+1} is the identity
    CHECK(sigma(3, +1, Poly::h(1) * Poly::h(1), 2) == Poly::h(1) * Poly::h(1));
    std::mt19937_64 rng(0);
    for (int k = 0; k < 50; ++k) {
        Poly p = random_poly(rng, 3);
        for (int i = 1; i <= 3; ++i) {
            CHECK(sigma(i, -1, sigma(i, +1, p, 3), 3) == p);
        }
    }
}

TEST_CASE("sigma is a ring homomorphism") {
    std::mt19937_64 rng(1);
    for (int k = 0; k < 40; ++k) {
        Poly p = random_poly(rng, 2);
        Poly q = random_poly(rng, 2);
        for (int i = 1; i <= 3; ++i) {
            CHECK(sigma(i, +1, p * q, 2) == sigma(i, +1, p, 2) * sigma(i, +1, q, 2));
            CHECK(sigma(i, +1, p + q, 2) == sigma(i, +1, p, 2) + sigma(i, +1, q, 2));
        }
    }
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(2);
    for (int k = 0; k < 60; ++k) {
        Poly p = random_poly(rng, 2);
        Poly q = random_poly(rng, 2);
        Poly r = random_poly(rng, 2);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("specialize") {
    SpecValues v;
    v.b = Rational(0);
    v.lam = Rational(1);
    Poly p = Poly::b_sym() - Poly::lam_sym() + Poly::constant(Rational(2));
    CHECK(specialize(p, v) == Poly::one());

    SpecValues w;
    w.a[1] = Rational(2);
    CHECK(specialize(Poly::a_sym(1, -1) * Poly::h(1), w) == Rational(1, 2) * Poly::h(1));

    Poly q = Poly::h(1) * Poly::a_sym(2) - Poly::b_sym();
    CHECK(specialize(q, SpecValues{}) == q);

    SpecValues bad;
    bad.a[1] = Rational(0);
    CHECK_THROWS_AS(specialize(Poly::a_sym(1), bad), ZeroUnit);
}

TEST_CASE("specialize commutes with ring operations") {
    std::mt19937_64 rng(3);
    SpecValues v;
    v.b = Rational(-1, 2);
    v.lam = Rational(3);
    v.a[1] = Rational(2, 3);
    v.a[2] = Rational(-1);
    for (int k = 0; k < 40; ++k) {
        Poly p = random_poly(rng, 2);
        Poly q = random_poly(rng, 2);
        CHECK(specialize(p * q, v) == specialize(p, v) * specialize(q, v));
        CHECK(specialize(p + q, v) == specialize(p, v) + specialize(q, v));
    }
}

TEST_CASE("canonical text format") {
    CHECK(Poly().str() == "0");
    CHECK(Poly::parse("0").is_zero());
    Poly p = Rational(3, 2) * (Poly::h(1) * Poly::h(1) * Poly::a_sym(1, -1));
    CHECK(p.str() == "3/2*h1^2*a1^-1");
    CHECK(Poly::parse("3/2*h1^2*a1^-1") == p);
    Poly q = Poly::h(1) * Poly::h(1) - Poly::b_sym() * Poly::b_sym();
    CHECK(q.str() == "h1^2 - b^2");
    CHECK((-Poly::h(1) + Poly::constant(Rational(1, 2))).str() == "-h1 + 1/2");
    CHECK(Poly::parse("-h1 + 1/2") == -Poly::h(1) + Poly::constant(Rational(1, 2)));
    CHECK_THROWS(Poly::parse("h1 +h2"));
    CHECK_THROWS(Poly::parse("h0"));
    CHECK_THROWS(Poly::parse("h1^-2"));
}

TEST_CASE("serialize-parse round trip") {
    std::mt19937_64 rng(4);
    for (int k = 0; k < 100; ++k) {
        Poly p = random_poly(rng, 3);
        std::string s = p.str();
        Poly back = Poly::parse(s);
        CHECK(back == p);
        CHECK(back.str() == s);
    }
}
