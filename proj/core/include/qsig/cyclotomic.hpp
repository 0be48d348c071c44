#pragma once

#include "qsig/matrix.hpp"
#include "qsig/polynomial.hpp"

namespace qsig {

// The d-th cyclotomic polynomial (monic, integer coefficients); d >= 1.
IntegerPoly cyclotomic_polynomial(long d);

// Square matrix over the cyclotomic field Q(zeta_d), together with a chosen
// complex embedding zeta_d -> e^{2 pi i k / d}.  The pair (k, d) is reduced by
// their gcd on construction -- the embedded values only depend on k/d -- and
// entries are kept reduced modulo the cyclotomic polynomial of the reduced
// order.
class CyclotomicMatrix {
public:
    CyclotomicMatrix(Mat<RationalPoly> entries, long k, long d);

    long order() const { return order_; }   // reduced d
    long embed() const { return embed_; }   // reduced k, in [0, order)
    long dim() const { return entries_.rows(); }
    const Mat<RationalPoly>& entries() const { return entries_; }
    const IntegerPoly& modulus() const { return modulus_; }

    // Conjugate-symmetry under the involution zeta -> zeta^{-1} (which the
    // embedding sends to complex conjugation).
    bool is_hermitian() const;

private:
    long order_, embed_;
    Mat<RationalPoly> entries_;
    IntegerPoly modulus_;
};

struct SignatureRank;

// Exact signature and rank of a hermitian cyclotomic matrix at its embedding.
// Elimination is exact field arithmetic; only the final sign of each (exactly
// known, provably nonzero) real pivot is read off numerically, with interval
// arithmetic at adaptively raised precision.
SignatureRank signature_cyclotomic(const CyclotomicMatrix& m);

} // namespace qsig
