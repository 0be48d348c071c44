#pragma once

#include "qsig/gaussian.hpp"
#include "qsig/matrix.hpp"

namespace qsig {

// Square matrix over Q(i) with H* = H, checked on construction.
class HermitianMatrix {
public:
    explicit HermitianMatrix(Mat<GaussianRational> m);
    const Mat<GaussianRational>& entries() const { return m_; }
    long dim() const { return m_.rows(); }

private:
    Mat<GaussianRational> m_;
};

struct SignatureRank {
    long signature = 0;
    long rank = 0;
    bool operator==(const SignatureRank&) const = default;
};

// Exact signature and rank of a hermitian matrix over Q(i).  Fraction-free:
// the input is scaled to Gaussian-integer entries and reduced by a hermitian
// Bareiss elimination whose pivot chain yields the signature via Jacobi's
// leading-minor rule; zero diagonals are repaired by unimodular congruences.
SignatureRank signature_exact(const HermitianMatrix& h);

// Signature of an anti-hermitian matrix P (P* = -P), defined as the signature
// of the hermitian matrix iP.
SignatureRank signature_antihermitian(const Mat<GaussianRational>& p);

} // namespace qsig
