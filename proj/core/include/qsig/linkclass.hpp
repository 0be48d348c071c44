#pragma once

#include <memory>
#include <vector>

#include "qsig/profile.hpp"
#include "qsig/seifert.hpp"
#include "qsig/surgery.hpp"

namespace qsig {

// Columns express the meridians of a link in a basis of the first homology
// of the complement modulo torsion; independence of the meridians is what
// makes the matrix invertible.
class MeridianMatrix {
public:
    explicit MeridianMatrix(Mat<Rational> b);

    const Mat<Rational>& matrix() const { return b_; }
    const Mat<Rational>& inverse() const { return inv_; }

private:
    Mat<Rational> b_;
    Mat<Rational> inv_;
};

// Least common multiple of the reduced denominators of tau^T B^{-1}.
Integer complexity_of_type(const MeridianMatrix& b, const TypeVector& tau);

// A link in a rational homology sphere, represented by the data its jump
// function depends on: the type tau, the complexity c of a generalized
// Seifert surface of that type, and the Seifert matrix of the surface.
// Queries reparametrize by c: delta(theta) = sgn(c) * delta_A(theta / c).
class LinkClass {
public:
    LinkClass(TypeVector tau, Integer complexity, SeifertMatrix a);

    const TypeVector& type() const { return tau_; }
    const Integer& complexity() const { return c_; }
    const SeifertMatrix& matrix() const { return a_; }
    int parity() const { return a_.parity(); }
    bool is_knot() const { return tau_.size() == 1; }

    // profile of the Seifert matrix, computed on first use and shared
    const SignatureProfile& profile() const;

private:
    TypeVector tau_;
    Integer c_;
    SeifertMatrix a_;
    mutable std::shared_ptr<const SignatureProfile> profile_;
};

// sgn(c) * delta_A(theta / c).  theta / c is exact for rational multiples of
// pi and for any theta when |c| = 1; other algebraic angles have no exact
// quotient in the angle representation and are rejected.
long link_delta(const LinkClass& l, const Angle& theta);

// delta of the parallel-copy link i_alpha L, computed from the block matrix
// and checked against sgn(n_alpha) * delta_L(n_alpha theta) before either
// value is returned.
long parallel_delta(const LinkClass& l, const SignTuple& alpha, const Angle& theta);

// A certified period of theta -> link_delta(l, theta), in units of pi: the
// returned value is 2|c|, verified at every representable breakpoint of one
// period.  The minimal period may be a proper divisor.
Rational period(const LinkClass& l);

// Same link, complexity rescaled to target = r * c by passing to the
// |r|-fold parallel matrix; target must be a nonzero multiple of c.
LinkClass rescaled(const LinkClass& l, const Integer& target);

// The class with pointwise-negated jump function: matrix -eps * A^T, same
// type and complexity.  Summing with it cancels delta identically.
LinkClass mirror_reverse(const LinkClass& l);

// The star blocks of the q = 1 connected-sum matrix, i.e. the entries the
// construction leaves free: pairings of the old surface generators with the
// new curves y_1..y_{c-1} and of those curves among themselves.  Congruence
// class and jump function do not depend on them.
struct CsumStars {
    Mat<Rational> surface_rows; // (dim A1 + dim A2) x (c-1), generator rows at y columns
    Mat<Rational> curve_rows;   // (c-1) x (dim A1 + dim A2), y rows at generator columns
    Mat<Rational> center;       // (c-1) x (c-1), y rows at y columns

    static CsumStars zero(long dim_sum, long c);
};

// Seifert matrix of a connected sum of two 1-knots along surfaces of common
// complexity c, with generator order [A1 | A2 | y_1..y_{c-1} | x_1..x_{c-1}]:
// the y-x pairing is (c-i)/c below the diagonal and -i/c on and above it,
// the x-y pairing is -j/c below and (c-j)/c on and above, and the x rows and
// columns pair to zero with everything else.
SeifertMatrix csum_matrix_q1(const SeifertMatrix& a1, const SeifertMatrix& a2,
                             const Integer& c, const CsumStars& stars);
SeifertMatrix csum_matrix_q1(const SeifertMatrix& a1, const SeifertMatrix& a2,
                             const Integer& c);

// delta of a connected sum at theta.  Complexities are equalized to their
// least common multiple first; two knots of parity +1 compose through
// csum_matrix_q1, every other matching pair through the block sum.
long csum_delta(const LinkClass& l1, const LinkClass& l2, const Angle& theta);

// delta of the satellite built from the pattern knot j (the knot inside the
// solid torus, contributing at theta) and the companion knot around which the
// torus is tied with winding number r (contributing at r*theta): the class
// with matrix A oplus i_alpha B, n_alpha = r, verified against the sum of the
// reparametrized summand jumps.
long satellite_delta(const LinkClass& j, const LinkClass& companion, long r,
                     const Angle& theta);

// true iff the jump function of the knot vanishes identically (the
// obstruction left when parallel doubling is compared with self-sum).
bool kawauchi_torsion_test(const LinkClass& k);

// Knot with jump function sgn(n) * delta_{i_k A}(theta / n), realized by
// surgery along a (k-parallel) copy of the knot of the base matrix and a
// linking circle with framing n.  Parity +1 pads the matrix by a zero block
// of dimension |n| - 1.
LinkClass period_knot(const SeifertMatrix& base, long k, const Integer& n);

// One line of the independence verification: at theta = 7 n pi / (6 p) the
// combined jump must be nonzero, and one full turn later it must vanish.
struct FamilyCheck {
    Integer prime;
    Rational theta_pi; // the tested angle in units of pi
    long delta_at_theta = 0;
    long delta_after_turn = 0;
    bool passed = false;
};

// Knots K_i with delta_{K_i}(theta) = delta_A(theta * p_i / 7) for distinct
// primes p_i > 7, whose classes are independent: no nonzero combination has
// period 2 pi.  Combination queries evaluate through the base profile with
// exact rational angle scalings; the member matrices i_{p_i} A are only
// profiled if a member is queried directly.
class IndependentFamily {
public:
    int parity() const { return base_->parity(); }
    const SeifertMatrix& base() const { return *base_; }
    const std::vector<Integer>& primes() const { return primes_; }
    const std::vector<LinkClass>& members() const { return members_; }
    // 8 when the parity -1 base is replaced by eight block-summed copies
    long multiplicity() const { return multiplicity_; }

    // delta of the combination sum_i a_i K_i at theta = theta_pi * pi
    long combination_delta(const std::vector<Integer>& a, const Rational& theta_pi) const;

    // the all-ones combination checked at 7 n pi / (6 p_j) for every j
    std::vector<FamilyCheck> verification_report() const;
    bool all_passed() const;

private:
    friend IndependentFamily independent_family(int parity, const std::vector<Integer>& primes,
                                                bool eightfold);

    long multiplicity_ = 1;
    std::vector<Integer> primes_;
    std::shared_ptr<const SeifertMatrix> base_;
    std::shared_ptr<const SignatureProfile> base_profile_;
    std::vector<LinkClass> members_;
};

// parity selects the base matrix ([[1,1],[0,1]] for +1, a fixed 4x4 for -1);
// primes must be distinct primes greater than 7.  eightfold replaces the
// parity -1 base by the block sum of 8 copies, scaling every jump by 8.
IndependentFamily independent_family(int parity, const std::vector<Integer>& primes,
                                     bool eightfold = false);

} // namespace qsig
