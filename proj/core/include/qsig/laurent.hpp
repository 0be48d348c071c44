#pragma once

#include <vector>

#include "qsig/gaussian.hpp"
#include "qsig/polynomial.hpp"

namespace qsig {

// Laurent polynomial over Q(i) in one variable t.  Stored densely from the
// lowest exponent; normalized so the first and last stored coefficients are
// nonzero (the zero polynomial stores nothing).
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long min_exp, std::vector<GaussianRational> coeffs)
        : min_(min_exp), c_(std::move(coeffs)) { normalize(); }
    static LaurentPoly monomial(GaussianRational a, long exp);
    static LaurentPoly constant(GaussianRational a) { return monomial(std::move(a), 0); }
    static LaurentPoly variable() { return monomial(GaussianRational(1), 1); }
    static LaurentPoly from_integer_poly(const IntegerPoly& p);

    bool is_zero() const { return c_.empty(); }
    long lowest() const;  // exponent of the lowest nonzero term
    long highest() const;
    GaussianRational coefficient(long exp) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const GaussianRational& s) const;
    bool operator==(const LaurentPoly& o) const { return min_ == o.min_ && c_ == o.c_; }

    // bar: t -> t^-1 together with complex conjugation of coefficients.
    LaurentPoly bar() const;
    bool is_bar_symmetric() const { return *this == bar(); }

    // t -> t^k.  k may be negative; k = 0 collapses to the constant p(1).
    LaurentPoly substitute_power(long k) const;

    GaussianRational eval(const GaussianRational& t) const; // t != 0

    std::string to_string(const std::string& var = "t") const;

private:
    void normalize();
    long min_ = 0;
    std::vector<GaussianRational> c_;
};

// For bar-symmetric p: the integer polynomial q with
//     q(tan(theta/2)) = L * (1 + tan(theta/2)^2)^N * p(e^{i theta}),
// where N = max(highest, -lowest, 0) and L is the least positive integer
// clearing all denominators (L = 1 for integral input).  Positivity of the
// cleared factor means q and theta -> p(e^{i theta}) change sign together;
// zeros of q in u = tan(theta/2) are exactly the zeros of p on the circle,
// minus the point theta = pi which the chart does not reach.
// Rejects input whose values on the circle are not real.
IntegerPoly circle_to_tangent(const LaurentPoly& p);

} // namespace qsig
