#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qsig/angle.hpp"
#include "qsig/hermitian.hpp"
#include "qsig/seifert.hpp"

namespace qsig {

// theta -> signature of the twisted form of a Seifert matrix on the unit
// circle, as a certified piecewise-constant function: finitely many
// breakpoints in [0, 2 pi) with the constant value on each open arc between
// consecutive ones (cyclically) and the jump right-minus-left at each.
//
// Every angle where the signature could possibly move is a breakpoint
// candidate (a circle zero of the relevant characteristic coefficient, plus
// theta = 0 and theta = pi); candidates whose two neighbouring arcs carry the
// same value are dropped from the breakpoint list, so stored jumps are never
// zero.  The form can still lose rank at a dropped candidate, making the
// pointwise signature differ from the surrounding arcs, so those angles are
// remembered separately and value_at resolves an exact hit on one of them
// honestly instead of reporting the arc value.  theta = 0 is kept as a
// breakpoint when its arcs disagree even though the jump function is defined
// to vanish there; delta_at applies that convention, the stored jump records
// the actual arc difference.
class SignatureProfile {
public:
    const std::vector<Angle>& breakpoints() const { return breakpoints_; }
    // value on the open arc following each breakpoint (cyclically)
    const std::vector<long>& interval_values() const { return interval_values_; }
    // right minus left arc value at each breakpoint
    const std::vector<long>& jumps() const { return jumps_; }
    // signature at the breakpoints themselves; informational, computed on
    // first request through a path independent of the cyclotomic one
    const std::vector<long>& point_values() const;

    const SeifertMatrix& matrix() const { return *matrix_; }
    long dimension() const { return matrix_->dimension(); }
    int parity() const { return matrix_->parity(); }

    // rank of the form on the open arcs (it is the same on all of them)
    long arc_rank() const { return arc_rank_; }
    // the constant signature when there are no breakpoints at all
    long constant_value() const { return constant_value_; }

    // no breakpoints and constant value zero
    bool is_identically_zero() const { return breakpoints_.empty() && constant_value_ == 0; }
    // delta vanishes everywhere iff there are no jumps away from theta = 0
    bool has_zero_jump_function() const;

    // signature at an exact angle: arc value off breakpoints, point value at
    // them, and 0 at theta == 0 mod 2 pi where the form vanishes
    long value_at(const Angle& theta) const;
    // the jump at theta: 0 off breakpoints and forcibly 0 at theta == 0
    long delta_at(const Angle& theta) const;

private:
    friend SignatureProfile signature_profile(const SeifertMatrix& a);

    std::vector<long> pointwise_values(const std::vector<Angle>& at) const;
    const std::vector<long>& flat_values() const;

    std::shared_ptr<const SeifertMatrix> matrix_;
    std::vector<Angle> breakpoints_;
    std::vector<long> interval_values_;
    std::vector<long> jumps_;
    // candidates with equal arcs on both sides, in circle order; possible rank
    // drops, so exact queries must not take the arc value
    std::vector<Angle> flat_candidates_;
    long arc_rank_ = 0;
    long constant_value_ = 0;
    mutable std::optional<std::vector<long>> point_values_;
    mutable std::optional<std::vector<long>> flat_values_;
};

SignatureProfile signature_profile(const SeifertMatrix& a);

// sigma at an exactly representable angle, routed by its encoding: rational
// multiples of pi go through the cyclotomic field, rational tangents through
// Gaussian-rational elimination, and other algebraic angles through the
// profile.
long sigma_at(const SeifertMatrix& a, const Angle& theta);

// The jump of sigma at theta (0 at multiples of 2 pi).
long delta_at(const SeifertMatrix& a, const Angle& theta);

// Signature of the d-fold branched cover eigenspace: sigma at 2 pi k / d.
long branched_signature(const SeifertMatrix& a, long k, long d);

// delta of the profiled matrix at n*theta.  The multiple is never built as an
// Angle: n*theta is located on the circle through tan(n*theta/2), a rational
// function of tan(theta/2), so irrational tangents stay exact.
long delta_reparametrized(const SignatureProfile& prof, long n, const Angle& theta);

// Exact signature and rank of the twisted form at tan(theta/2) = u (covers
// every angle except pi) and at theta = pi.
SignatureRank sample_signature(const SeifertMatrix& a, const Rational& tangent_half);
SignatureRank sample_signature_at_pi(const SeifertMatrix& a);

} // namespace qsig
