#pragma once

#include <memory>
#include <vector>

#include "qsig/polynomial.hpp"

namespace qsig {

// Exact real algebraic number: a squarefree primitive defining polynomial plus
// an isolating interval [lo, hi] whose endpoints are not roots and which
// contains exactly one root of the polynomial.  Values that happen to be
// rational carry the exact value as well, which short-circuits comparisons.
//
// The class is a value type; refinement happens on local copies inside the
// comparison routines, callers never observe mutation.
class RealAlgebraic {
public:
    static RealAlgebraic from_rational(const Rational& v);
    // Trusts the caller-supplied isolation data (checked with cheap asserts).
    static RealAlgebraic from_isolated_root(std::shared_ptr<const IntegerPoly> p,
                                            Rational lo, Rational hi);

    const IntegerPoly& defining_poly() const { return *p_; }
    const Rational& lower() const { return lo_; }
    const Rational& upper() const { return hi_; }
    bool is_rational() const { return exact_.has_value(); }
    const Rational& rational_value() const; // requires is_rational()

    // Halve the interval (or finish: detect a rational midpoint hit).
    void refine();
    // Refine until hi - lo <= width.
    void refine_below(const Rational& width);

    double approx() const; // refined to ~1e-15, then rounded

    std::string to_string() const;

private:
    std::shared_ptr<const IntegerPoly> p_;
    Rational lo_, hi_;
    int sign_at_lo_ = 0;              // sign of p(lo); cached for bisection
    std::optional<Rational> exact_;
};

int compare(const RealAlgebraic& x, const RealAlgebraic& y);
int compare(const RealAlgebraic& x, const Rational& v);
inline bool operator<(const RealAlgebraic& x, const RealAlgebraic& y) { return compare(x, y) < 0; }
inline bool operator==(const RealAlgebraic& x, const RealAlgebraic& y) { return compare(x, y) == 0; }

RealAlgebraic negate(const RealAlgebraic& x);

// Exact sign of g(x).
int sign_at(const IntegerPoly& g, const RealAlgebraic& x);
// Exact test g(x) == 0 via a gcd with the defining polynomial.
bool is_root_of(const IntegerPoly& g, const RealAlgebraic& x);

// Distinct real roots of the squarefree part of p inside [lo, hi] (closed,
// endpoints admitted), in increasing order.  The zero polynomial has no
// well-defined root set and is rejected.
std::vector<RealAlgebraic> sturm_isolate(const IntegerPoly& p, const Rational& lo, const Rational& hi);
// All real roots.
std::vector<RealAlgebraic> sturm_isolate_all(const IntegerPoly& p);

// One endpoint of an open interval on the extended real line.
struct ArcBound {
    enum class Kind { infinite, rational, algebraic } kind = Kind::infinite;
    int inf_sign = 0; // -1 or +1 when infinite
    Rational rat;
    std::optional<RealAlgebraic> alg;

    static ArcBound minus_infinity() { return {Kind::infinite, -1, {}, {}}; }
    static ArcBound plus_infinity() { return {Kind::infinite, +1, {}, {}}; }
    static ArcBound at(Rational v) { return {Kind::rational, 0, std::move(v), {}}; }
    static ArcBound at(RealAlgebraic v);
};

// The rational of smallest denominator (smallest numerator among those) in the
// open interval (lo, hi); lo < hi required, interval nonempty by irrationality
// or strict gap.  Stern-Brocot descent with exact endpoint comparisons.
Rational simplest_rational_between(const ArcBound& lo, const ArcBound& hi);

// Closed-interval evaluation helpers used by the refinement loops.
struct QInterval {
    Rational lo, hi;
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
};
QInterval interval_add(const QInterval& a, const QInterval& b);
QInterval interval_mul(const QInterval& a, const QInterval& b);
QInterval interval_eval(const IntegerPoly& p, const QInterval& x);
// 1/x for an interval with 0 strictly outside.
QInterval interval_recip(const QInterval& x);

} // namespace qsig
