#include <doctest.h>

#include "helpers.hpp"
#include "qsig/linalg.hpp"
#include "qsig/seifert.hpp"

namespace qsig {
namespace {

using testing::angle_pi;

TEST_CASE("seifert matrix construction validates shape and parity") {
    CHECK_THROWS_AS(SeifertMatrix(RationalMatrix(2, 3), 1), input_error);
    CHECK_THROWS_AS(SeifertMatrix(RationalMatrix(2, 2), 0), input_error);
    CHECK(testing::trefoil().parity() == 1);
    CHECK(testing::even_base().parity() == -1);
    CHECK(SeifertMatrix(RationalMatrix(3, 3), -1).is_zero());
}

TEST_CASE("eps_transpose twists by the parity sign and is an involution") {
    CHECK(eps_transpose(testing::trefoil()) == testing::seifert({{1, 0}, {1, 1}}, 1));
    CHECK(eps_transpose(testing::seifert({{0, 1}, {0, 0}}, -1)) ==
          testing::seifert({{0, 0}, {-1, 0}}, -1));

    testing::Rng rng(7201);
    for (int trial = 0; trial < 20; ++trial) {
        const SeifertMatrix a = testing::random_seifert(rng, 4);
        CHECK(eps_transpose(eps_transpose(a)) == a);
    }
}

TEST_CASE("sign tuples track the signed copy count") {
    CHECK(SignTuple({1, -1, 1}).n_alpha() == 1);
    CHECK(SignTuple::uniform(3).signs() == std::vector<int>{1, 1, 1});
    CHECK(SignTuple::uniform(-2).signs() == std::vector<int>{-1, -1});
    CHECK(SignTuple({1, -1}).negated().signs() == std::vector<int>{-1, 1});
    CHECK_THROWS_AS(SignTuple::uniform(0), input_error);
    CHECK_THROWS_AS(SignTuple({}), input_error);
    CHECK_THROWS_AS(SignTuple({2}), input_error);
}

TEST_CASE("reparam_matrix lays out the parallel-copy blocks") {
    const SeifertMatrix a = testing::trefoil();
    CHECK(reparam_matrix(a, SignTuple({1})) == a);

    // 1x1 base [a], alpha = (+1, -1): [[a, a], [eps a, eps a]]
    for (const int parity : {1, -1}) {
        const SeifertMatrix one = testing::seifert({{5}}, parity);
        const SeifertMatrix two = reparam_matrix(one, SignTuple({1, -1}));
        CHECK(two.entries().at(0, 0) == 5);
        CHECK(two.entries().at(0, 1) == 5);
        CHECK(two.entries().at(1, 0) == 5 * parity);
        CHECK(two.entries().at(1, 1) == 5 * parity);
    }

    // eps (i_alpha A)^T = i_{-alpha} A
    testing::Rng rng(7202);
    for (int trial = 0; trial < 20; ++trial) {
        const SeifertMatrix m = testing::random_seifert(rng, 3);
        const SignTuple alpha = testing::random_tuple(rng, 4);
        CHECK(eps_transpose(reparam_matrix(m, alpha)) == reparam_matrix(m, alpha.negated()));
    }
}

TEST_CASE("direct sums require matching parity") {
    const SeifertMatrix a = testing::trefoil();
    const SeifertMatrix b = testing::even_base();
    CHECK(seifert_direct_sum(a, a).dimension() == 4);
    CHECK_THROWS_AS(seifert_direct_sum(a, b), input_error);
}

TEST_CASE("eta implements the three-case step function") {
    CHECK(eta(2, angle_pi(1, 2)) == 1);  // interior of (0, pi)
    CHECK(eta(2, angle_pi(1, 1)) == 0);  // grid point 2 pi k / a with k = 1
    CHECK(eta(2, angle_pi(3, 2)) == -1); // interior of (pi, 2 pi)
    CHECK(eta(2, Angle::zero()) == 0);
    CHECK(eta(3, angle_pi(2, 3)) == 1);  // grid point: a - 2k = 3 - 2
    CHECK(eta(3, angle_pi(1, 3)) == 2);  // first interval: a + 1 - 2k = 2
    CHECK(eta(-2, angle_pi(1, 2)) == -1);
    CHECK(eta(-2, angle_pi(3, 2)) == 1);
    for (long k = 0; k <= 8; ++k) {
        CHECK(eta(1, angle_pi(k, 4)) == 0);
        CHECK(eta(0, angle_pi(k, 4)) == 0);
    }
    // period 2 pi: only the canonical part matters
    CHECK(eta(5, angle_pi(1, 2)) == eta(5, angle_pi(1, 2).with_winding(3)));
    CHECK(eta(5, angle_pi(1, 2)) == eta(5, angle_pi(5, 2)));
}

TEST_CASE("alexander polynomial of the trefoil matrix is t^2 - t + 1") {
    const AlexanderPolynomial alex = alexander(testing::trefoil());
    const LaurentPoly expected(0, {GaussianRational(1), GaussianRational(-1), GaussianRational(1)});
    CHECK(alex.normalized().value() == expected);
    CHECK(alex.equal_up_to_unit(AlexanderPolynomial(expected)));
    CHECK(alex.equal_up_to_unit(AlexanderPolynomial(expected.scaled(GaussianRational(
        make_rational(-3, 2))))));
    CHECK_FALSE(alex.equal_up_to_unit(AlexanderPolynomial(LaurentPoly::constant(
        GaussianRational(1)))));
    CHECK(alexander(SeifertMatrix(RationalMatrix(3, 3), 1)).is_zero());
}

TEST_CASE("alexander polynomials transform by t -> t^{n_alpha} under parallel copies") {
    testing::Rng rng(7203);
    int done = 0;
    while (done < 25) {
        const SeifertMatrix a = testing::random_seifert(rng, 3);
        if (!intersection_form_nonsingular(a))
            continue;
        ++done;
        const SignTuple alpha = testing::random_tuple(rng, 3);
        CHECK(alexander(reparam_matrix(a, alpha))
                  .equal_up_to_unit(alexander(a).substituted(alpha.n_alpha())));
    }
}

TEST_CASE("the intersection form is A minus its twisted transpose") {
    const SeifertMatrix a = testing::trefoil();
    const RationalMatrix f = intersection_form(a);
    CHECK(f.at(0, 1) == 1);
    CHECK(f.at(1, 0) == -1);
    CHECK(f.at(0, 0) == 0);
    CHECK(intersection_form_nonsingular(a));
    CHECK_FALSE(intersection_form_nonsingular(SeifertMatrix(RationalMatrix(2, 2), 1)));
    // even parity: A + A^T, singular for antisymmetric A of odd dimension
    const SeifertMatrix odd = testing::seifert({{0, 1, 2}, {-1, 0, 3}, {-2, -3, 0}}, -1);
    CHECK_FALSE(intersection_form_nonsingular(odd));
}

} // namespace
} // namespace qsig
