#include <doctest.h>

#include "helpers.hpp"
#include "qsig/hermitian.hpp"
#include "qsig/linalg.hpp"

namespace qsig {
namespace {

Mat<GaussianRational> gmat(const std::vector<std::vector<GaussianRational>>& rows) {
    const long n = static_cast<long>(rows.size());
    Mat<GaussianRational> m(n, static_cast<long>(rows[0].size()));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return m;
}

TEST_CASE("signature_exact on the worked 2x2 examples") {
    CHECK(signature_exact(HermitianMatrix(gmat({{4, 2}, {2, 4}}))) == SignatureRank{2, 2});
    CHECK(signature_exact(HermitianMatrix(Mat<GaussianRational>(3, 3))) == SignatureRank{0, 0});
    const GaussianRational i = GaussianRational::i();
    CHECK(signature_exact(HermitianMatrix(gmat({{GaussianRational(0), -i},
                                                {i, GaussianRational(0)}}))) ==
          SignatureRank{0, 2});
    CHECK_THROWS_AS(HermitianMatrix(gmat({{0, 1}, {2, 0}})), input_error);
}

TEST_CASE("signature_antihermitian is the signature of i times the input") {
    CHECK(signature_antihermitian(gmat({{0, 1}, {-1, 0}})) == SignatureRank{0, 2});
    CHECK(signature_antihermitian(Mat<GaussianRational>(2, 2)) == SignatureRank{0, 0});
    // P = [2i]: iP = [-2], a single negative eigenvalue
    CHECK(signature_antihermitian(gmat({{GaussianRational(Rational(0), Rational(2))}})) ==
          SignatureRank{-1, 1});
    CHECK_THROWS_AS(signature_antihermitian(gmat({{1, 0}, {0, 1}})), input_error);
}

TEST_CASE("signature is invariant under congruence by invertible matrices") {
    testing::Rng rng(7101);
    for (int trial = 0; trial < 30; ++trial) {
        const long n = testing::pick(rng, 1, 4);
        // random hermitian H: B + B^* with B arbitrary over Q(i)
        Mat<GaussianRational> b(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                b.at(i, j) = GaussianRational(testing::small_rational(rng),
                                              testing::small_rational(rng));
        Mat<GaussianRational> h(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                h.at(i, j) = b.at(i, j) + b.at(j, i).conj();

        // random invertible rational S (resample until the determinant is nonzero)
        Mat<Rational> s(n, n);
        do {
            s = testing::random_rational_matrix(rng, n, n);
        } while (sign_of(rational_determinant(s)) == 0);
        Mat<GaussianRational> sg(n, n), sgstar(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                sg.at(i, j) = GaussianRational(s.at(i, j));
                sgstar.at(i, j) = GaussianRational(s.at(j, i));
            }

        const SignatureRank before = signature_exact(HermitianMatrix(h));
        const SignatureRank after = signature_exact(HermitianMatrix(sgstar * h * sg));
        CHECK(before == after);
        CHECK(std::abs(before.signature) <= before.rank);
        CHECK(before.rank <= n);
        CHECK((before.signature - before.rank) % 2 == 0);
    }
}

TEST_CASE("signature adds over block sums") {
    testing::Rng rng(7102);
    for (int trial = 0; trial < 10; ++trial) {
        Mat<GaussianRational> h1(2, 2), h2(3, 3);
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < 2; ++j)
                h1.at(i, j) = GaussianRational(testing::small_rational(rng));
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 3; ++j)
                h2.at(i, j) = GaussianRational(testing::small_rational(rng));
        // symmetrize to make both hermitian (real symmetric suffices)
        for (long i = 0; i < 2; ++i)
            for (long j = 0; j < i; ++j)
                h1.at(i, j) = h1.at(j, i);
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < i; ++j)
                h2.at(i, j) = h2.at(j, i);
        const SignatureRank s1 = signature_exact(HermitianMatrix(h1));
        const SignatureRank s2 = signature_exact(HermitianMatrix(h2));
        const SignatureRank s = signature_exact(HermitianMatrix(h1.direct_sum(h2)));
        CHECK(s.signature == s1.signature + s2.signature);
        CHECK(s.rank == s1.rank + s2.rank);
    }
}

} // namespace
} // namespace qsig
