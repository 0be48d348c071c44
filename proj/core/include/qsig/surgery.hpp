#pragma once

#include <optional>
#include <vector>

#include "qsig/linalg.hpp"
#include "qsig/matrix.hpp"
#include "qsig/rational.hpp"

namespace qsig {

// Integral surgery presentation of a rational homology sphere: the symmetric
// linking matrix of the surgery link, framings on the diagonal.  No planar
// diagram data is kept -- every formula downstream consumes linking numbers
// only.
class FramedLinkDiagram {
public:
    explicit FramedLinkDiagram(Mat<Integer> lk_matrix);

    long components() const { return lk_.rows(); }
    const Mat<Integer>& lk_matrix() const { return lk_; }

    // Surgery on the diagram yields a rational homology sphere iff the
    // linking matrix is nonsingular.
    bool is_rational_homology_sphere() const;

private:
    Mat<Integer> lk_;
};

// A curve in the surgered manifold, recorded by its S^3 linking numbers with
// the surgery components.
class CurveClass {
public:
    explicit CurveClass(std::vector<Integer> lk_vector) : lk_(std::move(lk_vector)) {}

    const std::vector<Integer>& lk_vector() const { return lk_; }
    long size() const { return static_cast<long>(lk_.size()); }

private:
    std::vector<Integer> lk_;
};

// Type of a generalized Seifert surface: one nonzero integer per component,
// coprime as a tuple.
class TypeVector {
public:
    explicit TypeVector(std::vector<Integer> tau);

    const std::vector<Integer>& entries() const { return tau_; }
    long size() const { return static_cast<long>(tau_.size()); }
    TypeVector negated() const;

    bool operator==(const TypeVector&) const = default;

private:
    std::vector<Integer> tau_;
};

// Linking number in the surgered manifold: lk_s3 - x^T A^{-1} y.
Rational lk_sigma(const FramedLinkDiagram& d, const CurveClass& x, const CurveClass& y,
                  const Rational& lk_s3);

// The previous formula applied entrywise to a family of curves; s3_lk holds
// the pairwise S^3 linking numbers with chosen framings on the diagonal.
Mat<Rational> induced_linking_matrix(const FramedLinkDiagram& d,
                                     const std::vector<CurveClass>& curves,
                                     const Mat<Rational>& s3_lk);

// Whether the linking matrix admits a generalized Seifert surface of type
// tau: every (1/tau_i) sum_j a_ij tau_j must be an integer.
bool admits_type(const Mat<Rational>& a_sigma, const TypeVector& tau);

// The unique framing diagonal d_i = -(1/tau_i) sum_j a_ij tau_j when the type
// is admitted; empty otherwise.
std::optional<std::vector<Integer>> framing_for_type(const Mat<Rational>& a_sigma,
                                                     const TypeVector& tau);

// B^T V^{-1} B = A with B integral and V integral symmetric nonsingular,
// produced from a symmetric congruence diagonalization A = P^T [D 0; 0 0] P.
struct Realization {
    Mat<Integer> b; // rank x dim
    Mat<Integer> v; // rank x rank
};

Realization realize_linking_matrix(const Mat<Rational>& a);

} // namespace qsig
