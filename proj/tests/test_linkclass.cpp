#include <doctest.h>

#include "helpers.hpp"
#include "qsig/linkclass.hpp"

namespace qsig {
namespace {

using testing::angle_pi;

LinkClass knot(const SeifertMatrix& a) {
    return LinkClass(TypeVector({Integer(1)}), Integer(1), a);
}

TEST_CASE("meridian matrices validate and invert") {
    CHECK_THROWS_WITH_AS(MeridianMatrix(RationalMatrix(1, 2)), "meridian matrix must be square",
                         input_error);
    CHECK_THROWS_WITH_AS(MeridianMatrix(RationalMatrix(2, 2)), "meridian matrix is singular",
                         precondition_error);

    RationalMatrix b(2, 2);
    b.at(0, 0) = Rational(2);
    b.at(1, 1) = Rational(3);
    const MeridianMatrix m(b);
    CHECK(m.inverse().at(0, 0) == make_rational(1, 2));
    CHECK(m.inverse().at(1, 1) == make_rational(1, 3));
}

TEST_CASE("complexity is the lcm of the denominators of tau^T B^{-1}") {
    const MeridianMatrix id(RationalMatrix::identity(2));
    CHECK(complexity_of_type(id, TypeVector({Integer(1), Integer(1)})) == 1);

    for (long n = 2; n <= 5; ++n) {
        RationalMatrix b(1, 1);
        b.at(0, 0) = Rational(-n);
        CHECK(complexity_of_type(MeridianMatrix(b), TypeVector({Integer(1)})) == n);
    }

    RationalMatrix d(2, 2);
    d.at(0, 0) = Rational(2);
    d.at(1, 1) = Rational(3);
    CHECK(complexity_of_type(MeridianMatrix(d), TypeVector({Integer(1), Integer(1)})) == 6);
    CHECK_THROWS_WITH_AS(complexity_of_type(MeridianMatrix(d), TypeVector({Integer(1)})),
                         "type vector length does not match the meridian matrix", input_error);
}

TEST_CASE("link classes reject zero complexity and share their profile") {
    CHECK_THROWS_WITH_AS(LinkClass(TypeVector({Integer(1)}), Integer(0), testing::trefoil()),
                         "complexity must be nonzero", input_error);
    const LinkClass l = knot(testing::trefoil());
    CHECK(l.is_knot());
    CHECK(l.parity() == 1);
    CHECK(&l.profile() == &l.profile());
    CHECK_FALSE(LinkClass(TypeVector({Integer(1), Integer(2)}), Integer(1),
                          testing::trefoil())
                    .is_knot());
}

TEST_CASE("link delta divides the angle by the complexity with its sign") {
    const LinkClass plain = knot(testing::trefoil());
    CHECK(link_delta(plain, angle_pi(1, 3)) == 2);
    CHECK(link_delta(plain, angle_pi(5, 3)) == -2);
    CHECK(link_delta(plain, angle_pi(2, 1)) == 0);

    const LinkClass reversed(TypeVector({Integer(1)}), Integer(-1), testing::trefoil());
    CHECK(link_delta(reversed, angle_pi(1, 3)) == 2);  // -delta_A(-pi/3)
    CHECK(link_delta(reversed, angle_pi(1, 4)) == 0);

    // complexity one accepts tangent-form angles; 2 atan(1/sqrt 3) = pi/3
    const Angle third = Angle::from_tangent_half(tan_of_half(make_rational(1, 3)), 0);
    CHECK(link_delta(plain, third) == 2);
}

TEST_CASE("the period construction realizes delta(theta / n)") {
    const LinkClass k5 = period_knot(testing::trefoil(), 1, Integer(5));
    CHECK(k5.complexity() == 5);
    CHECK(k5.matrix().dimension() == 6); // parity +1 pads by a zero block of size n-1
    CHECK(link_delta(k5, angle_pi(5, 3)) == 2);
    CHECK(link_delta(k5, angle_pi(1, 3)) == 0);
    CHECK(link_delta(k5, angle_pi(11, 3)) == 0); // 5 pi/3 + 2 pi: one turn is no period
    CHECK(link_delta(k5, angle_pi(35, 3)) == 2); // but ten turns of pi are
    CHECK(period(k5) == Rational(10));

    const LinkClass even2 = period_knot(testing::even_base(), 1, Integer(2));
    CHECK(even2.matrix().dimension() == 4); // parity -1 needs no padding
    CHECK(link_delta(even2, angle_pi(1, 3)) ==
          signature_profile(testing::even_base()).delta_at(angle_pi(1, 6)));
    CHECK(period(even2) == Rational(4));

    CHECK(period(knot(testing::trefoil())) == Rational(2));
    CHECK_THROWS_WITH_AS(period_knot(testing::trefoil(), 1, Integer(0)),
                         "the period construction requires a nonzero framing", input_error);
}

TEST_CASE("angles off the rational-pi grid need complexity one") {
    const LinkClass k5 = period_knot(testing::trefoil(), 1, Integer(5));
    const Angle third = Angle::from_tangent_half(tan_of_half(make_rational(1, 3)), 0);
    CHECK(testing::error_message<precondition_error>([&] { link_delta(k5, third); }) ==
          "the angle must be a rational multiple of pi when the complexity exceeds one");
}

TEST_CASE("rescaling the complexity leaves every query unchanged") {
    const LinkClass l = knot(testing::trefoil());
    for (const Integer target : {Integer(2), Integer(3), Integer(-4)}) {
        const LinkClass r = rescaled(l, target);
        CHECK(r.complexity() == target);
        for (const auto& [num, den] : {std::pair<long, long>{1, 3}, {5, 3}, {1, 4}, {7, 5}})
            CHECK(link_delta(r, angle_pi(num, den)) == link_delta(l, angle_pi(num, den)));
    }
    CHECK_THROWS_WITH_AS(rescaled(l, Integer(0)), "target complexity must be nonzero",
                         input_error);
    const LinkClass k5 = period_knot(testing::trefoil(), 1, Integer(5));
    CHECK_THROWS_WITH_AS(rescaled(k5, Integer(3)),
                         "target complexity must be a multiple of the current one", input_error);
}

TEST_CASE("mirror reversal negates delta and cancels under connected sum") {
    for (const SeifertMatrix& a : {testing::trefoil(), testing::even_base()}) {
        const LinkClass l = knot(a);
        const LinkClass m = mirror_reverse(l);
        CHECK(m.parity() == l.parity());
        for (const Angle& b : l.profile().breakpoints()) {
            if (b.kind() != Angle::Kind::rational_pi)
                continue;
            CHECK(link_delta(m, b) == -link_delta(l, b));
            CHECK(csum_delta(l, m, b) == 0);
        }
    }
}

TEST_CASE("the q = 1 connected-sum matrix carries the prescribed bands") {
    const SeifertMatrix a = testing::trefoil();
    CHECK(csum_matrix_q1(a, a, Integer(1)).entries() ==
          seifert_direct_sum(a, a).entries()); // no extra curves at complexity one

    const SeifertMatrix two = csum_matrix_q1(a, a, Integer(2));
    REQUIRE(two.dimension() == 6);
    CHECK(two.entries().at(4, 5) == make_rational(-1, 2));
    CHECK(two.entries().at(5, 4) == make_rational(1, 2));
    CHECK(two.entries().at(4, 4) == Rational(0));
    CHECK(two.entries().at(0, 4) == Rational(0));

    const SeifertMatrix three = csum_matrix_q1(a, a, Integer(3));
    REQUIRE(three.dimension() == 8);
    // y rows 4,5 against x columns 6,7 and back
    CHECK(three.entries().at(4, 6) == make_rational(-1, 3));
    CHECK(three.entries().at(4, 7) == make_rational(-1, 3));
    CHECK(three.entries().at(5, 6) == make_rational(1, 3));
    CHECK(three.entries().at(5, 7) == make_rational(-2, 3));
    CHECK(three.entries().at(6, 4) == make_rational(2, 3));
    CHECK(three.entries().at(6, 5) == make_rational(1, 3));
    CHECK(three.entries().at(7, 4) == make_rational(-1, 3));
    CHECK(three.entries().at(7, 5) == make_rational(1, 3));

    CHECK_THROWS_WITH_AS(csum_matrix_q1(testing::even_base(), testing::even_base(), Integer(2)),
                         "the q = 1 connected sum requires parity +1 matrices", input_error);
    CHECK_THROWS_WITH_AS(csum_matrix_q1(a, a, Integer(0)),
                         "connected-sum complexity must be positive", input_error);
    CHECK_THROWS_WITH_AS(csum_matrix_q1(a, a, Integer(2), CsumStars::zero(4, 3)),
                         "star block dimensions do not match", input_error);
}

TEST_CASE("free star blocks do not move the jump function") {
    testing::Rng rng(5201);
    const SeifertMatrix a = testing::trefoil();
    for (int trial = 0; trial < 5; ++trial) {
        CsumStars stars = CsumStars::zero(4, 3);
        for (long i = 0; i < 4; ++i)
            for (long j = 0; j < 2; ++j) {
                stars.surface_rows.at(i, j) = testing::small_rational(rng);
                stars.curve_rows.at(j, i) = testing::small_rational(rng);
            }
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j)
                stars.center.at(i, j) = testing::small_rational(rng);
        const LinkClass with(TypeVector({Integer(1)}), Integer(3),
                             csum_matrix_q1(a, a, Integer(3), stars));
        const LinkClass without(TypeVector({Integer(1)}), Integer(3),
                                csum_matrix_q1(a, a, Integer(3)));
        for (const auto& [num, den] : {std::pair<long, long>{1, 1}, {5, 1}, {1, 4}, {7, 5}})
            CHECK(link_delta(with, angle_pi(num, den)) == link_delta(without, angle_pi(num, den)));
    }
}

TEST_CASE("connected sums add jump functions across complexities") {
    const LinkClass k1 = knot(testing::trefoil());
    CHECK(csum_delta(k1, k1, angle_pi(1, 3)) == 4);
    CHECK(csum_delta(k1, k1, angle_pi(5, 3)) == -4);
    CHECK(csum_delta(k1, k1, angle_pi(1, 4)) == 0);

    const LinkClass k2 = rescaled(k1, Integer(2));
    for (const auto& [num, den] : {std::pair<long, long>{1, 3}, {5, 3}, {1, 6}, {2, 1}})
        CHECK(csum_delta(k1, k2, angle_pi(num, den)) ==
              link_delta(k1, angle_pi(num, den)) + link_delta(k2, angle_pi(num, den)));

    const LinkClass e = knot(testing::even_base());
    CHECK(csum_delta(e, e, angle_pi(1, 6)) == 2 * link_delta(e, angle_pi(1, 6)));

    CHECK_THROWS_WITH_AS(csum_delta(k1, e, angle_pi(1, 3)),
                         "connected sum requires matching type and parity", input_error);
    const LinkClass pair(TypeVector({Integer(1), Integer(2)}), Integer(1), testing::trefoil());
    CHECK_THROWS_WITH_AS(csum_delta(k1, pair, angle_pi(1, 3)),
                         "connected sum requires matching type and parity", input_error);
}

TEST_CASE("connected sums of random knots stay additive") {
    testing::Rng rng(5202);
    for (int trial = 0; trial < 10; ++trial) {
        const int parity = testing::pick(rng, 0, 1) ? 1 : -1;
        const LinkClass l1 = knot(testing::random_seifert(rng, 3, parity));
        const LinkClass l2 = knot(testing::random_seifert(rng, 3, parity));
        for (int s = 0; s < 6; ++s) {
            const Angle theta =
                angle_pi(testing::pick(rng, 0, 23), testing::pick(rng, 1, 12));
            CHECK(csum_delta(l1, l2, theta) == link_delta(l1, theta) + link_delta(l2, theta));
        }
    }
}

TEST_CASE("satellite jumps split into pattern and companion parts") {
    const LinkClass unknot = knot(SeifertMatrix(RationalMatrix(1, 1), 1));
    const LinkClass tref = knot(testing::trefoil());

    CHECK(satellite_delta(unknot, tref, 2, angle_pi(1, 6)) == 2);
    CHECK(satellite_delta(unknot, tref, 1, angle_pi(1, 3)) == 2);
    CHECK(satellite_delta(unknot, tref, 0, angle_pi(1, 3)) == 0);
    CHECK(satellite_delta(tref, tref, 1, angle_pi(1, 3)) == 4);
    CHECK(satellite_delta(tref, tref, 2, angle_pi(1, 3)) == 2); // companion sees 2 pi/3
    CHECK(satellite_delta(unknot, tref, -1, angle_pi(1, 3)) == 2);

    const LinkClass pair(TypeVector({Integer(1), Integer(2)}), Integer(1), testing::trefoil());
    CHECK_THROWS_WITH_AS(satellite_delta(pair, tref, 2, angle_pi(1, 6)),
                         "satellite construction requires knots", input_error);
    CHECK_THROWS_WITH_AS(satellite_delta(unknot, knot(testing::even_base()), 2, angle_pi(1, 6)),
                         "satellite construction requires matching parity", input_error);
}

TEST_CASE("parallel copies verify the reparametrization formula") {
    const LinkClass tref = knot(testing::trefoil());
    CHECK(parallel_delta(tref, SignTuple({1, 1}), angle_pi(1, 6)) == 2);
    CHECK(parallel_delta(tref, SignTuple({-1, -1}), angle_pi(1, 6)) == 2);
    CHECK(parallel_delta(tref, SignTuple({1, -1}), angle_pi(1, 6)) == 0);

    const LinkClass reversed(TypeVector({Integer(1)}), Integer(-1), testing::trefoil());
    CHECK(parallel_delta(reversed, SignTuple({1, 1}), angle_pi(1, 6)) == 2);

    const LinkClass unknot = knot(SeifertMatrix(RationalMatrix(1, 1), 1));
    CHECK(testing::error_message<precondition_error>(
              [&] { parallel_delta(unknot, SignTuple({1, -1}), angle_pi(1, 6)); }) ==
          "formula hypothesis violated");
}

TEST_CASE("the torsion test flags exactly the zero jump functions") {
    CHECK_FALSE(kawauchi_torsion_test(knot(testing::trefoil())));
    CHECK(kawauchi_torsion_test(knot(SeifertMatrix(RationalMatrix(2, 2), 1))));

    RationalMatrix meta(2, 2);
    meta.at(1, 0) = Rational(3);
    meta.at(1, 1) = Rational(-2);
    CHECK(kawauchi_torsion_test(knot(SeifertMatrix(meta, 1))));

    const LinkClass pair(TypeVector({Integer(1), Integer(2)}), Integer(1), testing::trefoil());
    CHECK_THROWS_WITH_AS(kawauchi_torsion_test(pair), "the torsion test applies to knots",
                         input_error);
}

TEST_CASE("the odd-parity family passes its verification at 7 n pi / 6p") {
    const IndependentFamily fam = independent_family(1, {Integer(11)});
    CHECK(fam.parity() == 1);
    CHECK(fam.multiplicity() == 1);
    CHECK(fam.base().entries() == testing::trefoil().entries());

    const auto report = fam.verification_report();
    REQUIRE(report.size() == 1);
    CHECK(report[0].prime == 11);
    CHECK(report[0].theta_pi == make_rational(7, 33));
    CHECK(report[0].delta_at_theta == 2);
    CHECK(report[0].delta_after_turn == 0);
    CHECK(report[0].passed);
    CHECK(fam.all_passed());

    CHECK(fam.combination_delta({Integer(1)}, make_rational(7, 33)) == 2);
    CHECK(fam.combination_delta({Integer(-3)}, make_rational(7, 33)) == -6);
    CHECK(fam.combination_delta({Integer(0)}, make_rational(7, 33)) == 0);
    CHECK_THROWS_WITH_AS(fam.combination_delta({}, make_rational(7, 33)),
                         "coefficient vector length does not match the family", input_error);
}

TEST_CASE("family members realize the rescaled base jumps as honest knots") {
    const IndependentFamily fam = independent_family(1, {Integer(11)});
    REQUIRE(fam.members().size() == 1);
    const LinkClass& k = fam.members()[0];
    CHECK(k.is_knot());
    CHECK(k.complexity() == 7);
    CHECK(k.matrix().dimension() == 22);
    CHECK(link_delta(k, angle_pi(7, 33)) == 2);
    CHECK(link_delta(k, angle_pi(73, 33)) == 0); // one turn later the jump is gone
}

TEST_CASE("two-prime combinations break the one-turn periodicity") {
    const IndependentFamily fam = independent_family(1, {Integer(11), Integer(13)});
    const std::vector<Integer> a{Integer(1), Integer(-1)};
    CHECK(fam.combination_delta(a, make_rational(7, 39)) == -2);
    CHECK(fam.combination_delta(a, make_rational(7, 39) + 2) == 0);
    CHECK(fam.combination_delta(a, make_rational(7, 33)) == 2);
    CHECK(fam.combination_delta(a, make_rational(7, 33) + 2) == 0);
    // 14 pi is a genuine period of every combination
    CHECK(fam.combination_delta(a, make_rational(7, 39) + 14) == -2);
    CHECK(fam.all_passed());
}

TEST_CASE("the even-parity family and its eightfold version agree up to scale") {
    const IndependentFamily single = independent_family(-1, {Integer(11)});
    const auto r1 = single.verification_report();
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].theta_pi == make_rational(7, 66));
    CHECK(r1[0].delta_at_theta ==
          signature_profile(single.base()).delta_at(angle_pi(1, 6)));
    CHECK(r1[0].delta_at_theta != 0);
    CHECK(single.all_passed());

    const IndependentFamily eight = independent_family(-1, {Integer(11)}, true);
    CHECK(eight.multiplicity() == 8);
    const auto r8 = eight.verification_report();
    REQUIRE(r8.size() == 1);
    CHECK(r8[0].delta_at_theta == 8 * r1[0].delta_at_theta);
    CHECK(r8[0].delta_after_turn == 0);
    CHECK(eight.all_passed());
}

TEST_CASE("family construction rejects bad parameters") {
    CHECK_THROWS_WITH_AS(independent_family(0, {Integer(11)}), "parity must be +1 or -1",
                         input_error);
    CHECK_THROWS_WITH_AS(independent_family(1, {Integer(11)}, true),
                         "the eightfold option applies to parity -1 only", input_error);
    CHECK_THROWS_WITH_AS(independent_family(1, {Integer(5)}),
                         "family primes must be greater than 7", input_error);
    CHECK_THROWS_WITH_AS(independent_family(1, {Integer(9)}), "family parameters must be prime",
                         input_error);
    CHECK_THROWS_WITH_AS(independent_family(1, {Integer(11), Integer(11)}),
                         "family primes must be distinct", input_error);
}

} // namespace
} // namespace qsig
