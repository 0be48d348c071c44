#pragma once

#include <optional>
#include <utility>

#include "qsig/algebraic.hpp"

namespace qsig {

// Exact angle on the circle, plus an integer number of full turns so that
// reparametrized angles (n times a breakpoint, a query divided by a
// complexity) keep their identity as real numbers.
//
// Canonical part theta in [0, 2 pi), stored either as a rational multiple of
// pi or through u = tan(theta / 2), which parametrizes the circle minus the
// point theta = pi bijectively (u >= 0 covers [0, pi), u < 0 covers
// (pi, 2 pi)).  Rational tangents 0, 1, -1 are the only rational u landing on
// rational multiples of pi; construction normalizes them to the rational_pi
// kind, so mixed-kind comparisons stay cheap.
class Angle {
public:
    enum class Kind { rational_pi, tangent };

    // total is the full angle in units of pi; turns are folded into winding.
    static Angle rational_pi(const Rational& total);
    static Angle from_tangent_half(RealAlgebraic u, long winding);
    static Angle zero() { return rational_pi(0); }

    Kind kind() const { return kind_; }
    long winding() const { return winding_; }
    bool canonical_is_zero() const;

    // rational_pi only: canonical angle / full angle, in units of pi.
    const Rational& pi_multiple() const;
    Rational total_pi_multiple() const;
    // tangent only.
    const RealAlgebraic& tangent_half() const;

    Angle with_winding(long w) const;
    Angle negated() const; // negation of the full angle
    // n times the full angle.  Exact for every rational_pi angle and every
    // rational tangent; an irrational tangent has no closed-form multiple in
    // this representation and is rejected.
    Angle times(long n) const;

    double approx_radians() const; // full angle, for display and plotting

private:
    Kind kind_ = Kind::rational_pi;
    Rational rpi_;                      // canonical, in [0, 2)
    std::optional<RealAlgebraic> tan_;
    long winding_ = 0;
};

// Order on canonical angles in [0, 2 pi); winding is ignored.
int compare_canonical(const Angle& a, const Angle& b);
inline bool equal_canonical(const Angle& a, const Angle& b) { return compare_canonical(a, b) == 0; }
bool equal_total(const Angle& a, const Angle& b);

// Chart of the canonical angle: 0 for [0, pi), 1 for the point pi, 2 for
// (pi, 2 pi).  Canonical order is lexicographic in (chart, tangent key).
int angle_chart(const Angle& a);
// u = tan(theta/2) of the canonical angle; chart 1 (theta = pi) has none.
RealAlgebraic angle_tangent_key(const Angle& a);

// tan(r * pi / 2) for canonical r in [0, 2), r != 1, as an exact algebraic
// number (a root of the tangent-numerator polynomial below, located by its
// sorted index -- no numerics involved in the identification).
RealAlgebraic tan_of_half(const Rational& r);

// (1 + i u)^n = R_n(u) + i T_n(u): returns (T_n, R_n).  tan(n x) =
// T_n(tan x) / R_n(tan x) wherever defined; the roots of T_n are exactly
// tan(k pi / n), all simple.
std::pair<IntegerPoly, IntegerPoly> tangent_pair(long n);

} // namespace qsig
