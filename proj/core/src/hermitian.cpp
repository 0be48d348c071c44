#include "qsig/hermitian.hpp"

#include <vector>

namespace qsig {

HermitianMatrix::HermitianMatrix(Mat<GaussianRational> m) : m_(std::move(m)) {
    if (!m_.is_square())
        throw input_error("hermitian matrix must be square");
    for (long i = 0; i < m_.rows(); ++i)
        for (long j = i; j < m_.cols(); ++j)
            if (m_.at(i, j) != m_.at(j, i).conj())
                throw input_error("matrix is not hermitian");
}

namespace {

// Gaussian integer, the working scalar of the fraction-free elimination.
struct GZ {
    Integer re, im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    GZ conj() const { return {re, -im}; }
    GZ operator+(const GZ& o) const { return {re + o.re, im + o.im}; }
    GZ operator-(const GZ& o) const { return {re - o.re, im - o.im}; }
    GZ operator*(const GZ& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GZ times_i() const { return {-im, re}; }
    GZ times_minus_i() const { return {im, -re}; }
    GZ div_exact(const Integer& d) const {
        GZ q;
        mpz_divexact(q.re.get_mpz_t(), re.get_mpz_t(), d.get_mpz_t());
        mpz_divexact(q.im.get_mpz_t(), im.get_mpz_t(), d.get_mpz_t());
        return q;
    }
};

// Hermitian Bareiss elimination on a Gaussian-integer matrix.
//
// Invariant: after processing k pivots the active block is prev * S with S
// the (hermitian) Schur complement and prev the k-th pivot, so every division
// below is exact.  Pivots are real; Jacobi's rule turns the sign chain of
// consecutive pivots into the signature.  All repairs (symmetric swaps, the
// row-and-column addition fixing an all-zero diagonal) are congruences, which
// change neither signature nor rank.
SignatureRank bareiss_signature(std::vector<GZ>& w, long n) {
    auto at = [&](long i, long j) -> GZ& { return w[static_cast<std::size_t>(i * n + j)]; };

    SignatureRank out;
    Integer prev = 1;
    long k = 0;
    while (k < n) {
        // Diagonal pivot with the largest magnitude keeps entry growth tame.
        long best = -1;
        for (long i = k; i < n; ++i) {
            const GZ& d = at(i, i);
            if (sgn(d.re) != 0 && (best < 0 || cmp(abs(d.re), abs(at(best, best).re)) > 0))
                best = i;
        }
        if (best < 0) {
            // Whole active diagonal is zero: find any nonzero off-diagonal
            // entry and fold it onto the diagonal with a unimodular
            // congruence row_i += λ row_j, col_i += conj(λ) col_j.
            long fi = -1, fj = -1;
            for (long i = k; i < n && fi < 0; ++i)
                for (long j = i + 1; j < n; ++j)
                    if (!at(i, j).is_zero()) {
                        fi = i;
                        fj = j;
                        break;
                    }
            if (fi < 0)
                break; // active block is identically zero
            const GZ z = at(fi, fj);
            const bool use_i = sgn(z.re) == 0; // λ = i turns 2 Im z onto the diagonal
            for (long c = k; c < n; ++c) {
                GZ add = use_i ? at(fj, c).times_i() : at(fj, c);
                at(fi, c) = at(fi, c) + add;
            }
            for (long r = k; r < n; ++r) {
                GZ add = use_i ? at(r, fj).times_minus_i() : at(r, fj);
                at(r, fi) = at(r, fi) + add;
            }
            continue;
        }
        if (best != k) {
            for (long c = 0; c < n; ++c)
                std::swap(at(k, c), at(best, c));
            for (long r = 0; r < n; ++r)
                std::swap(at(r, k), at(r, best));
        }

        const Integer piv = at(k, k).re;
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                GZ num = GZ{piv, Integer(0)} * at(i, j) - at(i, k) * at(k, j);
                at(i, j) = num.div_exact(prev);
            }

        out.rank += 1;
        out.signature += sgn(piv) * sgn(prev);
        prev = piv;
        ++k;
    }
    return out;
}

} // namespace

SignatureRank signature_exact(const HermitianMatrix& h) {
    const Mat<GaussianRational>& m = h.entries();
    const long n = m.rows();

    // Clear all denominators at once; a positive scale changes nothing.
    Integer l = 1;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            l = lcm_of(l, denominator(m.at(i, j).re));
            l = lcm_of(l, denominator(m.at(i, j).im));
        }
    std::vector<GZ> w(static_cast<std::size_t>(n * n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Rational re = m.at(i, j).re * Rational(l);
            Rational im = m.at(i, j).im * Rational(l);
            w[static_cast<std::size_t>(i * n + j)] = GZ{numerator(re), numerator(im)};
        }
    return bareiss_signature(w, n);
}

SignatureRank signature_antihermitian(const Mat<GaussianRational>& p) {
    if (!p.is_square())
        throw input_error("anti-hermitian matrix must be square");
    for (long i = 0; i < p.rows(); ++i)
        for (long j = i; j < p.cols(); ++j)
            if (p.at(i, j) != -p.at(j, i).conj())
                throw input_error("matrix is not anti-hermitian");
    Mat<GaussianRational> h(p.rows(), p.cols());
    const GaussianRational iu = GaussianRational::i();
    for (long i = 0; i < p.rows(); ++i)
        for (long j = 0; j < p.cols(); ++j)
            h.at(i, j) = iu * p.at(i, j);
    return signature_exact(HermitianMatrix(std::move(h)));
}

} // namespace qsig
