#pragma once

#include <string>
#include <vector>

#include "qsig/angle.hpp"
#include "qsig/laurent.hpp"
#include "qsig/matrix.hpp"
#include "qsig/rational.hpp"

namespace qsig {

using RationalMatrix = Mat<Rational>;

// Square rational matrix together with the parity sign eps = (-1)^{q+1}:
// +1 when the middle dimension q is odd, -1 when it is even.  The entries
// carry no symmetry requirement; eps only selects which twisted transpose
// eps*A^T partners with A in every formula downstream.
class SeifertMatrix {
public:
    SeifertMatrix(RationalMatrix entries, int parity);

    const RationalMatrix& entries() const { return entries_; }
    int parity() const { return parity_; }
    long dimension() const { return entries_.rows(); }
    bool is_zero() const;

    bool operator==(const SeifertMatrix&) const = default;

private:
    RationalMatrix entries_;
    int parity_;
};

// Signs s_1..s_r attached to parallel copies of a surface; n_alpha is the
// signed copy count, so |n_alpha| <= r and n_alpha has the parity of r.
class SignTuple {
public:
    explicit SignTuple(std::vector<int> signs);

    // r copies all with sign +1 (r < 0 gives |r| copies of sign -1).
    static SignTuple uniform(long r);

    const std::vector<int>& signs() const { return signs_; }
    long size() const { return static_cast<long>(signs_.size()); }
    long n_alpha() const;
    SignTuple negated() const;

private:
    std::vector<int> signs_;
};

// eps * A^T, same parity.  Applying it twice gives A back.
SeifertMatrix eps_transpose(const SeifertMatrix& a);

// The parallel-copy block matrix: |alpha| x |alpha| blocks of size dim(A),
// with A strictly above the diagonal, eps*A^T strictly below, and the n-th
// diagonal block equal to A when s_n = +1 and eps*A^T when s_n = -1.
SeifertMatrix reparam_matrix(const SeifertMatrix& a, const SignTuple& alpha);

// Block sum, parities must agree.
SeifertMatrix seifert_direct_sum(const SeifertMatrix& a, const SeifertMatrix& b);

// The integer step function eta_a: on (2*pi*(k-1)/a, 2*pi*k/a) the value is
// a+1-2k, at the interior grid points 2*pi*k/a it is a-2k, and it vanishes
// at multiples of 2*pi.  Extended by eta_{-a}(phi) = eta_a(-phi) and
// eta_0 = 0; the period is 2*pi, so only the canonical part of phi matters.
long eta(long a, const Angle& phi);

// det(tA - eps*A^T), considered up to units r*t^k of the rational Laurent
// ring.  The stored value is the raw determinant; normalized() divides out
// the distinguished unit making the polynomial integral, primitive, with
// lowest exponent 0 and positive lowest coefficient.
class AlexanderPolynomial {
public:
    explicit AlexanderPolynomial(LaurentPoly value) : value_(std::move(value)) {}

    const LaurentPoly& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    AlexanderPolynomial normalized() const;
    bool equal_up_to_unit(const AlexanderPolynomial& other) const;

    // t -> t^k (the reparametrized matrix has Alexander polynomial equal to
    // this up to a unit, when the intersection form is nonsingular).
    AlexanderPolynomial substituted(long k) const;

    std::string to_string(const std::string& var = "t") const;

private:
    LaurentPoly value_;
};

AlexanderPolynomial alexander(const SeifertMatrix& a);

// A - eps*A^T (the intersection form); its nonsingularity is the recurring
// hypothesis of the reparametrization statements.
RationalMatrix intersection_form(const SeifertMatrix& a);
bool intersection_form_nonsingular(const SeifertMatrix& a);

} // namespace qsig
