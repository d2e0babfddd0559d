#include <catch2/catch_amalgamated.hpp>

#include "gvmforge/lie.hpp"

using namespace gvmforge;

TEST_CASE("bracket on basis elements") {
    const int n = 2;
    CHECK(bracket(LieElt::E(n, 1, 2), LieElt::E(n, 2, 3)) == LieElt::E(n, 1, 3));
    CHECK(bracket(LieElt::H(n, 1), LieElt::H(n, 2)).is_zero());
    // [h_1, e_{1,n+2}] = (1 - 1/(n+1)) e_{1,n+2}
    CHECK(bracket(LieElt::H(n, 1), LieElt::E(n, 1, n + 2)) ==
          Rational(n, n + 1) * LieElt::E(n, 1, n + 2));
    CHECK(bracket(LieElt::E(n, 1, 2), LieElt::E(n, 2, 1)) == LieElt::H(n, 1) - LieElt::H(n, 2));
}

TEST_CASE("diagonal rewriting uses the h alias") {
    // [e_{1,2}, e_{2,1}] = h_1 - h_2 = 2 h_1 when n = 1
    CHECK(bracket(LieElt::E(1, 1, 2), LieElt::E(1, 2, 1)) == Rational(2) * LieElt::H(1, 1));
    // [e_{2,3}, e_{3,2}] = h_2 - h_3 = -h_1 - h_{n+2} when n = 1
    CHECK(bracket(LieElt::E(1, 2, 3), LieElt::E(1, 3, 2)) == -LieElt::H(1, 1) - LieElt::H(1, 3));
}

TEST_CASE("subalgebra membership") {
    const int n = 2;
    CHECK_FALSE(is_sl_n1(LieElt::E(n, 1, n + 2)));
    CHECK(is_sl_n1(LieElt::H(n, 1)));
    CHECK_FALSE(is_sl_n1(LieElt::E(n, 2, 1) + LieElt::H(n, n + 2)));
    CHECK(is_sl_n1(LieElt::E(n, 2, 1) + LieElt::H(n, 2)));
}

TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(bracket(LieElt::H(1, 1), LieElt::H(2, 1)), DimensionMismatch);
    CHECK_THROWS(LieElt::H(2, 3));  // H(n+1) is not a stored generator
    CHECK_THROWS(LieElt::E(2, 2, 2));
}

TEST_CASE("antisymmetry and Jacobi") {
    for (int n = 1; n <= 3; ++n) {
        auto basis = sl_basis(n, n + 2);
        std::vector<LieElt> elts;
        for (const auto& g : basis) elts.push_back(LieElt::gen(n, g));
        for (const auto& x : elts)
            for (const auto& y : elts) {
                CHECK(bracket(x, y) == -bracket(y, x));
            }
        // Jacobi on a subsample keeps the unit suite quick; the acceptance
        // suite runs every triple.
        for (size_t xi = 0; xi < elts.size(); xi += 2)
            for (size_t yi = 1; yi < elts.size(); yi += 2)
                for (size_t zi = 0; zi < elts.size(); zi += 3) {
                    const auto& x = elts[xi];
                    const auto& y = elts[yi];
                    const auto& z = elts[zi];
                    LieElt total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) +
                                   bracket(z, bracket(x, y));
                    CHECK(total.is_zero());
                }
    }
}

TEST_CASE("text format") {
    const int n = 2;
    LieElt x = Rational(1, 2) * LieElt::E(n, 1, 3) - LieElt::H(n, 2);
    CHECK(x.str() == "1/2*E(1,3) - H(2)");
    CHECK(LieElt::zero(n).str() == "0");
}
