#include "qsig/angle.hpp"

#include <mpfr.h>

#include <cmath>
#include <cstdlib>
#include <map>

namespace qsig {

// ------------------------------------------------------- tangent polynomials

std::pair<IntegerPoly, IntegerPoly> tangent_pair(long n) {
    if (n < 0)
        throw precondition_error("tangent_pair wants n >= 0");
    static std::map<long, std::pair<IntegerPoly, IntegerPoly>> cache;
    auto hit = cache.find(n);
    if (hit != cache.end())
        return hit->second;
    IntegerPoly r = IntegerPoly::constant(1), t; // (1+iu)^0
    const IntegerPoly u = IntegerPoly::power(1);
    for (long j = 0; j < n; ++j) {
        // (R + iT)(1 + iu) = (R - uT) + i(T + uR)
        IntegerPoly r2 = r - u * t;
        IntegerPoly t2 = t + u * r;
        r = std::move(r2);
        t = std::move(t2);
    }
    cache.emplace(n, std::make_pair(t, r));
    return {t, r};
}

RealAlgebraic tan_of_half(const Rational& r) {
    if (sgn(r) < 0 || r >= 2 || r == 1)
        throw precondition_error("tan_of_half wants canonical r in [0,2) away from pi");
    if (sgn(r) == 0)
        return RealAlgebraic::from_rational(0);
    if (r == Rational(1, 2))
        return RealAlgebraic::from_rational(1);
    if (r == Rational(3, 2))
        return RealAlgebraic::from_rational(-1);

    const long p = static_cast<long>(numerator(r).get_si());
    const long q = static_cast<long>(denominator(r).get_si());
    // tan(p pi / (2q)) is the root of T_{2q} with index k = p (p < q) or
    // p - 2q (p > q); the isolator returns roots sorted, and the roots of
    // T_{2q} are tan(k pi / 2q) for k in (-q, q), increasing in k.
    static std::map<long, std::vector<RealAlgebraic>> cache;
    auto hit = cache.find(q);
    if (hit == cache.end()) {
        auto [t, rr] = tangent_pair(2 * q);
        (void)rr;
        hit = cache.emplace(q, sturm_isolate_all(t)).first;
    }
    const auto& roots = hit->second;
    long k = (p < q) ? p : p - 2 * q;
    std::size_t pos = static_cast<std::size_t>(k + q - 1);
    if (roots.size() != static_cast<std::size_t>(2 * q - 1) || pos >= roots.size())
        throw precondition_error("tangent root table has unexpected shape");
    return roots[pos];
}

// ------------------------------------------------------------- construction

Angle Angle::rational_pi(const Rational& total) {
    Angle a;
    a.kind_ = Kind::rational_pi;
    Integer turns;
    // total = canonical + 2 * winding with canonical in [0, 2)
    Rational half = total / 2;
    turns = floor_of(half);
    a.rpi_ = total - Rational(turns) * 2;
    if (!mpz_fits_slong_p(turns.get_mpz_t()))
        throw precondition_error("angle winding out of range");
    a.winding_ = static_cast<long>(turns.get_si());
    return a;
}

Angle Angle::from_tangent_half(RealAlgebraic u, long winding) {
    // The rational tangents of rational-pi angles are exactly 0 and +-1;
    // normalize them so mixed comparisons can rely on kind.
    if (compare(u, Rational(0)) == 0)
        return rational_pi(Rational(2) * winding);
    if (compare(u, Rational(1)) == 0)
        return rational_pi(Rational(1, 2) + Rational(2) * winding);
    if (compare(u, Rational(-1)) == 0)
        return rational_pi(Rational(3, 2) + Rational(2) * winding);
    Angle a;
    a.kind_ = Kind::tangent;
    a.tan_ = std::move(u);
    a.winding_ = winding;
    return a;
}

bool Angle::canonical_is_zero() const {
    return kind_ == Kind::rational_pi && sgn(rpi_) == 0;
}

const Rational& Angle::pi_multiple() const {
    if (kind_ != Kind::rational_pi)
        throw precondition_error("pi_multiple of a tangent-kind angle");
    return rpi_;
}

Rational Angle::total_pi_multiple() const {
    return pi_multiple() + Rational(2) * winding_;
}

const RealAlgebraic& Angle::tangent_half() const {
    if (kind_ != Kind::tangent)
        throw precondition_error("tangent_half of a rational-pi angle");
    return *tan_;
}

Angle Angle::with_winding(long w) const {
    Angle a = *this;
    a.winding_ = w;
    return a;
}

Angle Angle::negated() const {
    if (kind_ == Kind::rational_pi)
        return rational_pi(-total_pi_multiple());
    Angle a;
    a.kind_ = Kind::tangent;
    a.tan_ = negate(*tan_);
    // canonical + 2 pi w = 2 atan(u) + 2 pi W with W = w + [u < 0]; negating
    // the full angle sends W to -W, and u != 0 here, so the stored winding
    // becomes -w - 1.
    a.winding_ = -winding_ - 1;
    return a;
}

// -------------------------------------------------------------------- charts

int angle_chart(const Angle& a) {
    if (a.kind() == Angle::Kind::rational_pi) {
        const Rational& r = a.pi_multiple();
        if (r < 1)
            return 0;
        return r == 1 ? 1 : 2;
    }
    return compare(a.tangent_half(), Rational(0)) >= 0 ? 0 : 2;
}

RealAlgebraic angle_tangent_key(const Angle& a) {
    if (a.kind() == Angle::Kind::tangent)
        return a.tangent_half();
    return tan_of_half(a.pi_multiple());
}

// ------------------------------------------- rational-pi vs tangent compares

namespace {

long angle_precision_ceiling() {
    if (const char* s = std::getenv("QSIG_PREC_CEILING")) {
        long v = std::atol(s);
        if (v >= 64)
            return v;
    }
    return 4096;
}

// Complex residue arithmetic in Q[u]/(p): enough to push (1+iu)^n through
// square-and-multiply without ever materializing the giant tangent
// polynomial.
struct ModPair {
    RationalPoly re, im;
};

ModPair mulmod(const ModPair& a, const ModPair& b, const RationalPoly& p) {
    ModPair c;
    c.re = (a.re * b.re - a.im * b.im).divrem(p).rem;
    c.im = (a.re * b.im + a.im * b.re).divrem(p).rem;
    return c;
}

// T_n reduced mod p, via the modular power of (1 + iu).
RationalPoly tangent_num_mod(long n, const RationalPoly& p) {
    ModPair base{RationalPoly::constant(1), RationalPoly::power(1).divrem(p).rem};
    ModPair acc{RationalPoly::constant(1), RationalPoly()};
    long e = n;
    while (e > 0) {
        if (e & 1)
            acc = mulmod(acc, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return acc.im;
}

// For u a root of T_{2q}: the integer m with u = tan(m pi / (2 q)),
// certified by an interval enclosure of atan(u) * 2q / pi around its exact
// integer value.
long tangent_grid_index(const RealAlgebraic& u, long q) {
    const long ceiling = angle_precision_ceiling();
    RealAlgebraic c = u;
    for (long prec = 64;; prec = std::min(prec * 2, ceiling)) {
        mpfr_t lo, hi, t;
        mpfr_inits2(prec, lo, hi, t, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_q(lo, c.lower().get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi, c.upper().get_mpq_t(), MPFR_RNDU);
        mpfr_atan(lo, lo, MPFR_RNDD);
        mpfr_atan(hi, hi, MPFR_RNDU);
        mpfr_mul_si(lo, lo, 2 * q, MPFR_RNDD);
        mpfr_mul_si(hi, hi, 2 * q, MPFR_RNDU);
        mpfr_const_pi(t, MPFR_RNDU);
        mpfr_div(lo, lo, t, MPFR_RNDD);
        mpfr_const_pi(t, MPFR_RNDD);
        mpfr_div(hi, hi, t, MPFR_RNDU);
        // The exact value is an integer; accept once a unique one is inside.
        mpfr_ceil(t, lo);
        long mlo = mpfr_get_si(t, MPFR_RNDN);
        mpfr_floor(t, hi);
        long mhi = mpfr_get_si(t, MPFR_RNDN);
        mpfr_clears(lo, hi, t, static_cast<mpfr_ptr>(nullptr));
        if (mlo == mhi)
            return mlo;
        if (prec >= ceiling)
            throw precision_error("tangent grid index needs more than QSIG_PREC_CEILING bits");
        c.refine();
        c.refine();
    }
}

// tan(r pi / 2) ? u for canonical r in chart 0 or 2 and irrational algebraic
// u in the same chart.  Exact equality test first, then certified numeric
// separation.
int compare_half_tangent(const Rational& r, const RealAlgebraic& u, int chart) {
    const long q = static_cast<long>(denominator(r).get_si());
    const long pnum = static_cast<long>(numerator(r).get_si());

    if (!u.is_rational()) {
        RationalPoly p = RationalPoly::from_integer(u.defining_poly());
        RationalPoly tmod = tangent_num_mod(2 * q, p);
        bool on_grid = tmod.is_zero() || is_root_of(tmod.cleared_to_integer(), u);
        if (on_grid) {
            long m = tangent_grid_index(u, q);
            long target = (pnum < q) ? pnum : pnum - 2 * q;
            if (m == target)
                return 0;
            // Same grid, different node: order by index within the chart.
            return target < m ? -1 : +1;
        }
    }
    // u is rational (hence off every rational-pi grid point except the
    // normalized ones) or lies off this grid: values differ, separate
    // numerically with certified enclosures.
    const long ceiling = angle_precision_ceiling();
    RealAlgebraic c = u;
    for (long prec = 64;; prec = std::min(prec * 2, ceiling)) {
        mpfr_t pi_lo, pi_hi, x_lo, x_hi, t_lo, t_hi, u_lo, u_hi;
        mpfr_inits2(prec, pi_lo, pi_hi, x_lo, x_hi, t_lo, t_hi, u_lo, u_hi,
                    static_cast<mpfr_ptr>(nullptr));
        mpfr_const_pi(pi_lo, MPFR_RNDD);
        mpfr_const_pi(pi_hi, MPFR_RNDU);
        // x = r * pi / 2, directed both ways (r > 0 here; r == 0 is the
        // rational-tangent shortcut upstream).
        mpfr_mul_q(x_lo, pi_lo, Rational(r / 2).get_mpq_t(), MPFR_RNDD);
        mpfr_mul_q(x_hi, pi_hi, Rational(r / 2).get_mpq_t(), MPFR_RNDU);
        mpfr_tan(t_lo, x_lo, MPFR_RNDD);
        mpfr_tan(t_hi, x_hi, MPFR_RNDU);
        bool sane = mpfr_cmp(t_lo, t_hi) <= 0 &&
                    (chart == 0 ? mpfr_sgn(t_lo) >= 0 : mpfr_sgn(t_hi) <= 0);
        int result = 2;
        if (sane) {
            mpfr_set_q(u_lo, c.lower().get_mpq_t(), MPFR_RNDD);
            mpfr_set_q(u_hi, c.upper().get_mpq_t(), MPFR_RNDU);
            if (mpfr_cmp(t_hi, u_lo) < 0)
                result = -1;
            else if (mpfr_cmp(u_hi, t_lo) < 0)
                result = +1;
        }
        mpfr_clears(pi_lo, pi_hi, x_lo, x_hi, t_lo, t_hi, u_lo, u_hi,
                    static_cast<mpfr_ptr>(nullptr));
        if (result != 2)
            return result;
        if (prec >= ceiling)
            throw precision_error("angle comparison needs more than QSIG_PREC_CEILING bits");
        c.refine();
        c.refine();
    }
}

} // namespace

int compare_canonical(const Angle& a, const Angle& b) {
    const int ca = angle_chart(a), cb = angle_chart(b);
    if (ca != cb)
        return ca < cb ? -1 : +1;
    if (ca == 1)
        return 0;

    const bool ra = a.kind() == Angle::Kind::rational_pi;
    const bool rb = b.kind() == Angle::Kind::rational_pi;
    if (ra && rb)
        return cmp(a.pi_multiple(), b.pi_multiple());
    if (!ra && !rb)
        return compare(a.tangent_half(), b.tangent_half());
    // Mixed: angle order within a chart is tangent-key order.
    if (ra)
        return compare_half_tangent(a.pi_multiple(), b.tangent_half(), ca);
    return -compare_half_tangent(b.pi_multiple(), a.tangent_half(), ca);
}

bool equal_total(const Angle& a, const Angle& b) {
    return a.winding() == b.winding() && equal_canonical(a, b);
}

// --------------------------------------------------------------------- times

namespace {

// tan(m pi / (2n)) for |m| < n, as an exact algebraic number.
RealAlgebraic tan_grid(long m, long n) {
    if (m >= 0)
        return tan_of_half(Rational(m, n));
    return negate(tan_of_half(Rational(-m, n)));
}

} // namespace

Angle Angle::times(long n) const {
    if (n == 0)
        return zero();
    if (kind_ == Kind::rational_pi)
        return rational_pi(total_pi_multiple() * n);
    if (n < 0)
        return negated().times(-n);
    if (n == 1)
        return *this;
    const RealAlgebraic& u = *tan_;
    if (!u.is_rational())
        throw precondition_error(
            "angle multiplication needs an exact rational tangent or rational-pi angle");
    const Rational uv = u.rational_value();

    // Full angle is 2 x + 2 pi W with x = atan(u), W = winding + [u < 0].
    const long W = winding_ + (sgn(uv) < 0 ? 1 : 0);

    // Locate n x within ((2j-1) pi / 2, (2j+1) pi / 2): equivalently u
    // between the grid tangents at (2j -+ 1) pi / (2n).  Rational u never
    // equals an interior grid tangent (those are irrational except 0, +-1,
    // which were normalized away), so the scan is strict.
    long j_found = 0;
    bool found = false;
    for (long j = -(n / 2 + 1); j <= n / 2 + 1 && !found; ++j) {
        bool lo_ok = (2 * j - 1 <= -n) || compare(tan_grid(2 * j - 1, n), uv) < 0;
        bool hi_ok = (2 * j + 1 >= n) || compare(tan_grid(2 * j + 1, n), uv) > 0;
        if (lo_ok && hi_ok) {
            j_found = j;
            found = true;
        }
    }
    if (!found)
        throw precondition_error("tangent branch location failed");

    auto [tn, rn] = tangent_pair(n);
    const Rational den = RationalPoly::from_integer(rn).eval(uv);
    if (sgn(den) == 0)
        throw precondition_error("tangent multiplication hit a pole off the rational set");
    const Rational v = RationalPoly::from_integer(tn).eval(uv) / den;

    // n * (2x + 2 pi W) = 2 atan(v) + 2 pi (j + n W).
    const long total_turns = j_found + n * W;
    RealAlgebraic va = RealAlgebraic::from_rational(v);
    return from_tangent_half(std::move(va), total_turns - (sgn(v) < 0 ? 1 : 0));
}

double Angle::approx_radians() const {
    const double pi = 3.14159265358979323846;
    if (kind_ == Kind::rational_pi)
        return total_pi_multiple().get_d() * pi;
    double u = tan_->approx();
    double canon = 2 * std::atan(u) + (u < 0 ? 2 * pi : 0.0);
    return canon + 2 * pi * static_cast<double>(winding_);
}

} // namespace qsig
