#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "qsig/surgery.hpp"

namespace qsig {
namespace {

Mat<Integer> imat(const std::vector<std::vector<long>>& rows) {
    Mat<Integer> m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            m.at(i, j) = Integer(rows[i][j]);
    return m;
}

// Random nonzero tuple with overall gcd one, as the type constructor demands.
TypeVector random_type(testing::Rng& rng, long n) {
    for (;;) {
        std::vector<Integer> tau(static_cast<std::size_t>(n));
        Integer g(0);
        for (auto& t : tau) {
            long v = 0;
            while (v == 0)
                v = testing::pick(rng, -4, 4);
            t = Integer(v);
            g = gcd_of(g, t);
        }
        if (g == 1)
            return TypeVector(std::move(tau));
    }
}

TEST_CASE("framed diagrams validate their linking matrix") {
    CHECK_THROWS_WITH_AS(FramedLinkDiagram(imat({{0, 1}})), "linking matrix must be square",
                         input_error);
    CHECK_THROWS_WITH_AS(FramedLinkDiagram(imat({{0, 1}, {2, 0}})),
                         "linking matrix must be symmetric", input_error);

    const FramedLinkDiagram hopf(imat({{0, 1}, {1, 0}}));
    CHECK(hopf.components() == 2);
    CHECK(hopf.is_rational_homology_sphere());
    CHECK_FALSE(FramedLinkDiagram(imat({{0, 0}, {0, 0}})).is_rational_homology_sphere());
}

TEST_CASE("meridian of the n-framed unknot links itself by -1/n") {
    for (long n = 2; n <= 6; ++n) {
        const FramedLinkDiagram d(imat({{n}}));
        const CurveClass mu({Integer(1)});
        CHECK(lk_sigma(d, mu, mu, Rational(0)) == make_rational(-1, n));
    }
}

TEST_CASE("surgery linking corrects the three-sphere value by x A^{-1} y") {
    // two meridians of the same 4-framed unknot: both pairings get -1/4, the
    // correction term being the whole story when the S^3 numbers vanish
    const FramedLinkDiagram d(imat({{4}}));
    const CurveClass mu({Integer(1)});
    const auto induced = induced_linking_matrix(d, {mu, mu}, RationalMatrix(2, 2));
    for (long i = 0; i < 2; ++i)
        for (long j = 0; j < 2; ++j)
            CHECK(induced.at(i, j) == make_rational(-1, 4));
}

TEST_CASE("surgery linking is symmetric on random diagrams") {
    testing::Rng rng(4101);
    int built = 0;
    while (built < 40) {
        const long n = testing::pick(rng, 1, 4);
        Mat<Integer> lk(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = i; j < n; ++j) {
                lk.at(i, j) = Integer(testing::pick(rng, -3, 3));
                lk.at(j, i) = lk.at(i, j);
            }
        FramedLinkDiagram d(lk);
        if (!d.is_rational_homology_sphere())
            continue;
        ++built;
        RationalMatrix s3(2, 2);
        s3.at(0, 1) = s3.at(1, 0) = Rational(testing::pick(rng, -2, 2));
        std::vector<Integer> xv(static_cast<std::size_t>(n));
        std::vector<Integer> yv(static_cast<std::size_t>(n));
        for (auto& v : xv)
            v = Integer(testing::pick(rng, -2, 2));
        for (auto& v : yv)
            v = Integer(testing::pick(rng, -2, 2));
        const CurveClass x(xv), y(yv);
        const auto m = induced_linking_matrix(d, {x, y}, s3);
        CHECK(m.at(0, 1) == m.at(1, 0));
        CHECK(m.at(0, 0) == lk_sigma(d, x, x, Rational(0)));
        CHECK(lk_sigma(d, x, y, s3.at(0, 1)) == lk_sigma(d, y, x, s3.at(0, 1)));
    }
}

TEST_CASE("surgery on a singular diagram is rejected") {
    const FramedLinkDiagram flat(imat({{0, 0}, {0, 0}}));
    const CurveClass x({Integer(1), Integer(0)});
    CHECK_THROWS_WITH_AS(lk_sigma(flat, x, x, Rational(0)),
                         "not a rational homology sphere", precondition_error);
    CHECK_THROWS_WITH_AS(lk_sigma(FramedLinkDiagram(imat({{2}})),
                                  CurveClass(std::vector<Integer>{}),
                                  CurveClass({Integer(1)}), Rational(0)),
                         "curve linking vector length does not match the diagram", input_error);
}

TEST_CASE("a zero linking matrix admits every type") {
    const RationalMatrix zero(3, 3);
    testing::Rng rng(4102);
    for (int trial = 0; trial < 20; ++trial)
        CHECK(admits_type(zero, random_type(rng, 3)));
}

TEST_CASE("an integral linking matrix admits the all-ones type") {
    testing::Rng rng(4103);
    for (int trial = 0; trial < 20; ++trial) {
        const long n = testing::pick(rng, 1, 4);
        RationalMatrix a(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = i; j < n; ++j) {
                a.at(i, j) = Rational(testing::pick(rng, -4, 4));
                a.at(j, i) = a.at(i, j);
            }
        CHECK(admits_type(a, TypeVector(std::vector<Integer>(static_cast<std::size_t>(n),
                                                             Integer(1)))));
    }
}

TEST_CASE("meridians of the n-surgered unlink admit no type at all") {
    // linking matrix diag(-1/n): every framing candidate is -1/n, never integral
    for (long n = 2; n <= 5; ++n) {
        RationalMatrix a(2, 2);
        a.at(0, 0) = a.at(1, 1) = make_rational(-1, n);
        bool any = false;
        for (long s = 1; s <= 3 * n && !any; ++s)
            for (long t = 1; t <= 3 * n && !any; ++t) {
                if (std::gcd(s, t) != 1)
                    continue;
                any = admits_type(a, TypeVector({Integer(s), Integer(t)}));
            }
        CHECK_FALSE(any);
    }
}

TEST_CASE("the knotted-meridian matrix admits exactly the types +-(a,b)") {
    const auto box = [](long a, long b) {
        RationalMatrix m(2, 2);
        m.at(0, 0) = make_rational(-b, 3 * a);
        m.at(0, 1) = m.at(1, 0) = make_rational(1, 3);
        m.at(1, 1) = make_rational(-a, 3 * b);
        return m;
    };
    const RationalMatrix m23 = box(2, 3);
    CHECK(admits_type(m23, TypeVector({Integer(2), Integer(3)})));
    CHECK(admits_type(m23, TypeVector({Integer(-2), Integer(-3)})));
    for (long x = -12; x <= 12; ++x)
        for (long y = -12; y <= 12; ++y) {
            if (x == 0 || y == 0 || std::gcd(std::abs(x), std::abs(y)) != 1)
                continue;
            const bool expect = (x == 2 && y == 3) || (x == -2 && y == -3);
            CHECK(admits_type(m23, TypeVector({Integer(x), Integer(y)})) == expect);
        }
}

TEST_CASE("type vectors reject empty, zero and non-coprime tuples") {
    CHECK_THROWS_WITH_AS(TypeVector(std::vector<Integer>{}), "type vector must be nonempty",
                         input_error);
    CHECK_THROWS_WITH_AS(TypeVector({Integer(1), Integer(0)}),
                         "type vector entries must be nonzero", input_error);
    CHECK_THROWS_WITH_AS(TypeVector({Integer(2), Integer(4)}),
                         "type vector entries must be coprime as a tuple", input_error);
    const TypeVector t({Integer(2), Integer(-3)});
    CHECK(t.negated() == TypeVector({Integer(-2), Integer(3)}));
}

TEST_CASE("admitted types come with integral framings") {
    // Hopf link, type (1,1): each diagonal correction is -1
    RationalMatrix hopf(2, 2);
    hopf.at(0, 1) = hopf.at(1, 0) = Rational(1);
    const auto d = framing_for_type(hopf, TypeVector({Integer(1), Integer(1)}));
    REQUIRE(d.has_value());
    CHECK((*d)[0] == Integer(-1));
    CHECK((*d)[1] == Integer(-1));

    RationalMatrix m(2, 2);
    m.at(0, 0) = make_rational(-3, 6);
    m.at(0, 1) = m.at(1, 0) = make_rational(1, 3);
    m.at(1, 1) = make_rational(-2, 9);
    const auto d2 = framing_for_type(m, TypeVector({Integer(2), Integer(3)}));
    REQUIRE(d2.has_value());
    CHECK((*d2)[0] == Integer(0));
    CHECK((*d2)[1] == Integer(0));

    RationalMatrix bad(1, 1);
    bad.at(0, 0) = make_rational(-1, 2);
    CHECK_FALSE(framing_for_type(bad, TypeVector({Integer(1)})).has_value());
}

TEST_CASE("adding integers to the diagonal never changes admissibility") {
    testing::Rng rng(4104);
    for (int trial = 0; trial < 30; ++trial) {
        const long n = testing::pick(rng, 1, 3);
        RationalMatrix a(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = i; j < n; ++j) {
                a.at(i, j) = testing::small_rational(rng);
                a.at(j, i) = a.at(i, j);
            }
        RationalMatrix shifted = a;
        for (long i = 0; i < n; ++i)
            shifted.at(i, i) += Rational(testing::pick(rng, -3, 3));
        const TypeVector type = random_type(rng, n);
        CHECK(admits_type(a, type) == admits_type(shifted, type));
    }
}

TEST_CASE("realization reproduces the lens-space and trivial examples") {
    RationalMatrix lens(1, 1);
    lens.at(0, 0) = make_rational(-1, 4);
    const Realization r = realize_linking_matrix(lens);
    CHECK(r.b == imat({{4}}));
    CHECK(r.v == imat({{-64}}));

    RationalMatrix one(1, 1);
    one.at(0, 0) = Rational(1);
    const Realization r1 = realize_linking_matrix(one);
    CHECK(r1.b == imat({{1}}));
    CHECK(r1.v == imat({{1}}));
}

TEST_CASE("realizing the zero matrix yields the empty presentation") {
    const Realization r = realize_linking_matrix(RationalMatrix(2, 2));
    CHECK(r.v.rows() == 0);
    CHECK(r.b.rows() == 0);
    CHECK(r.b.cols() == 2);
}

TEST_CASE("realization round-trips B^T V^{-1} B on random symmetric matrices") {
    testing::Rng rng(4105);
    for (int trial = 0; trial < 200; ++trial) {
        const long n = testing::pick(rng, 1, 5);
        RationalMatrix lk(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = i; j < n; ++j) {
                lk.at(i, j) = testing::small_rational(rng);
                lk.at(j, i) = lk.at(i, j);
            }
        const Realization r = realize_linking_matrix(lk);
        const long rank = r.v.rows();
        REQUIRE(r.b.rows() == rank);
        REQUIRE(r.b.cols() == n);
        REQUIRE(r.v.cols() == rank);
        CHECK(r.v == r.v.transpose());
        if (rank == 0) {
            CHECK(lk == RationalMatrix(n, n));
            continue;
        }

        RationalMatrix vq(rank, rank), bq(rank, n);
        for (long i = 0; i < rank; ++i)
            for (long j = 0; j < rank; ++j)
                vq.at(i, j) = Rational(r.v.at(i, j));
        for (long i = 0; i < rank; ++i)
            for (long j = 0; j < n; ++j)
                bq.at(i, j) = Rational(r.b.at(i, j));
        const auto vinv = rational_inverse(vq);
        REQUIRE(vinv.has_value());
        CHECK(bq.transpose() * *vinv * bq == lk);
    }
}

TEST_CASE("curves through the realized diagram recover the linking matrix") {
    // realize, surger along -V and present curve i by column i of B: the
    // induced pairing must reproduce the matrix we started from
    testing::Rng rng(4106);
    for (int trial = 0; trial < 25; ++trial) {
        const long n = testing::pick(rng, 1, 3);
        RationalMatrix lk(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = i; j < n; ++j) {
                lk.at(i, j) = testing::small_rational(rng);
                lk.at(j, i) = lk.at(i, j);
            }
        const Realization r = realize_linking_matrix(lk);
        const long rank = r.v.rows();
        if (rank == 0)
            continue;
        const FramedLinkDiagram d(r.v.negated());
        REQUIRE(d.is_rational_homology_sphere());
        std::vector<CurveClass> curves;
        for (long j = 0; j < n; ++j) {
            std::vector<Integer> col(static_cast<std::size_t>(rank));
            for (long k = 0; k < rank; ++k)
                col[static_cast<std::size_t>(k)] = r.b.at(k, j);
            curves.emplace_back(col);
        }
        const auto induced = induced_linking_matrix(d, curves, RationalMatrix(n, n));
        CHECK(induced == lk);
    }
}

} // namespace
} // namespace qsig
