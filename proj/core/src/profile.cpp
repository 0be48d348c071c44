#include "qsig/profile.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "qsig/cyclotomic.hpp"
#include "qsig/linalg.hpp"

namespace qsig {

namespace {

// With u = tan(theta/2) and t = e^{i theta} one has
// 1 - t = -2iu(1+iu)/(1+u^2), so the twisted form
// M(t) = (1-t)A + eps(1-1/t)A^T, scaled by the positive factor (1+u^2) and
// multiplied by i when anti-hermitian, becomes a polynomial family in u:
//     eps = +1:  H(u) = 2u^2 (A + A^T) - 2iu  (A - A^T)
//     eps = -1:  H(u) = 2u  (A + A^T) + 2iu^2 (A - A^T)
// hermitian for every real u and with the signature of the form at theta.
// All chart computations below (samples, characteristic coefficients,
// candidate polynomials) are phrased in terms of H.

Mat<GaussianRational> chart_matrix(const SeifertMatrix& a, const Rational& u) {
    const long n = a.dimension();
    const Rational u2 = u * u;
    Mat<GaussianRational> h(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const Rational& aij = a.entries().at(i, j);
            const Rational& aji = a.entries().at(j, i);
            const Rational s = aij + aji;
            const Rational k = aij - aji;
            if (a.parity() > 0)
                h.at(i, j) = GaussianRational(2 * u2 * s, -2 * u * k);
            else
                h.at(i, j) = GaussianRational(2 * u * s, 2 * u2 * k);
        }
    return h;
}

// Dense polynomial in u over Q(i), lowest exponent 0; scratch type for the
// characteristic-coefficient computation.
using CPoly = std::vector<GaussianRational>;

void cpoly_trim(CPoly& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

CPoly cpoly_add(const CPoly& x, const CPoly& y) {
    CPoly out(std::max(x.size(), y.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < x.size())
            out[i] += x[i];
        if (i < y.size())
            out[i] += y[i];
    }
    cpoly_trim(out);
    return out;
}

CPoly cpoly_mul(const CPoly& x, const CPoly& y) {
    if (x.empty() || y.empty())
        return {};
    CPoly out(x.size() + y.size() - 1);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            out[i + j] += x[i] * y[j];
    cpoly_trim(out);
    return out;
}

// Coefficients c_1..c_n of det(lambda I - H(u)) = lambda^n + c_1 lambda^{n-1}
// + ... + c_n by Faddeev-LeVerrier over Q(i)[u].  Hermitian families have
// real c_j on the real line, so each c_j is returned as an integer polynomial
// after clearing by a positive rational; signs and root sets are unchanged.
std::vector<IntegerPoly> char_coefficients(const SeifertMatrix& a) {
    const long n = a.dimension();
    std::vector<std::vector<CPoly>> h(static_cast<std::size_t>(n),
                                      std::vector<CPoly>(static_cast<std::size_t>(n)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const Rational& aij = a.entries().at(i, j);
            const Rational& aji = a.entries().at(j, i);
            const Rational s = aij + aji;
            const Rational k = aij - aji;
            CPoly e(3);
            if (a.parity() > 0) {
                e[1] = GaussianRational(Rational(0), -2 * k);
                e[2] = GaussianRational(2 * s);
            } else {
                e[1] = GaussianRational(2 * s);
                e[2] = GaussianRational(Rational(0), 2 * k);
            }
            cpoly_trim(e);
            h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(e);
        }
    std::vector<std::vector<CPoly>> m(static_cast<std::size_t>(n),
                                      std::vector<CPoly>(static_cast<std::size_t>(n)));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
        m[i][i] = CPoly{GaussianRational(1)};
    std::vector<IntegerPoly> out(static_cast<std::size_t>(n));
    for (long step = 1; step <= n; ++step) {
        std::vector<std::vector<CPoly>> prod(static_cast<std::size_t>(n),
                                             std::vector<CPoly>(static_cast<std::size_t>(n)));
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
            for (std::size_t l = 0; l < static_cast<std::size_t>(n); ++l) {
                if (h[i][l].empty())
                    continue;
                for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
                    if (m[l][j].empty())
                        continue;
                    prod[i][j] = cpoly_add(prod[i][j], cpoly_mul(h[i][l], m[l][j]));
                }
            }
        CPoly tr;
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
            tr = cpoly_add(tr, prod[i][i]);
        const GaussianRational f(make_rational(Integer(-1), Integer(step)));
        CPoly ck;
        ck.reserve(tr.size());
        for (const GaussianRational& c : tr)
            ck.push_back(c * f);
        m = std::move(prod);
        for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
            m[i][i] = cpoly_add(m[i][i], ck);
        std::vector<Rational> re(ck.size());
        for (std::size_t idx = 0; idx < ck.size(); ++idx) {
            if (sign_of(ck[idx].im) != 0)
                throw precondition_error("characteristic coefficient was not real");
            re[idx] = ck[idx].re;
        }
        out[static_cast<std::size_t>(step - 1)] = RationalPoly(std::move(re)).cleared_to_integer();
    }
    return out;
}

// Signature of H(u0) at an algebraic u0 from the characteristic coefficients:
// the eigenvalues are real, so Descartes' rule is exact on both chi(lambda)
// and chi(-lambda), and the zero eigenvalue is split off by truncating at the
// last coefficient not vanishing at u0.
long signature_by_descartes(const std::vector<IntegerPoly>& chars, const RealAlgebraic& u0) {
    std::vector<int> s{1};
    for (const IntegerPoly& c : chars)
        s.push_back(c.is_zero() ? 0 : sign_at(c, u0));
    long r = 0;
    for (long j = static_cast<long>(s.size()) - 1; j >= 1; --j)
        if (s[static_cast<std::size_t>(j)] != 0) {
            r = j;
            break;
        }
    if (r == 0)
        return 0;
    const auto variations = [&](bool alternate) {
        int last = 0;
        long v = 0;
        for (long j = 0; j <= r; ++j) {
            int sj = s[static_cast<std::size_t>(j)];
            if (alternate && (j % 2 != 0))
                sj = -sj;
            if (sj == 0)
                continue;
            if (last != 0 && sj != last)
                ++v;
            last = sj;
        }
        return v;
    };
    return variations(false) - variations(true);
}

// sigma at e^{2 pi i k / d}, 0 < k < d, through the cyclotomic field with the
// embedding zeta -> e^{2 pi i / D} chosen so both the root of unity and (for
// even parity) the factor i are plain powers of zeta.
long cyclotomic_sigma(const SeifertMatrix& a, long k, long d) {
    const long g = std::gcd(k, d);
    k /= g;
    d /= g;
    const long n = a.dimension();
    Mat<RationalPoly> e(n, n);
    if (a.parity() > 0) {
        // (1 - w) a_ij + (1 - 1/w) a_ji with 1/w = w^{d-1}
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j) {
                const Rational& aij = a.entries().at(i, j);
                const Rational& aji = a.entries().at(j, i);
                std::vector<Rational> c(static_cast<std::size_t>(d));
                c[0] += aij + aji;
                c[1] -= aij;
                c[static_cast<std::size_t>(d - 1)] -= aji;
                e.at(i, j) = RationalPoly(std::move(c));
            }
        return signature_cyclotomic(CyclotomicMatrix(std::move(e), k, d)).signature;
    }
    // i [ (1 - w) a_ij - (1 - 1/w) a_ji ] with i = zeta^{D/4}, w = zeta^m
    const long D = std::lcm(4L, d);
    const long m = (k * (D / d)) % D;
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const Rational& aij = a.entries().at(i, j);
            const Rational& aji = a.entries().at(j, i);
            std::vector<Rational> c(static_cast<std::size_t>(D));
            c[static_cast<std::size_t>(D / 4)] += aij - aji;
            c[static_cast<std::size_t>((D / 4 + m) % D)] -= aij;
            c[static_cast<std::size_t>((D / 4 + D - m) % D)] += aji;
            e.at(i, j) = RationalPoly(std::move(c));
        }
    return signature_cyclotomic(CyclotomicMatrix(std::move(e), 1, D)).signature;
}

long jump_at_pi(const SignatureProfile& prof) {
    for (std::size_t k = 0; k < prof.breakpoints().size(); ++k)
        if (angle_chart(prof.breakpoints()[k]) == 1)
            return prof.jumps()[k];
    return 0;
}

// Decides T(u)/R(u) == w for an irrational w already known to satisfy
// g(T(u)/R(u)) = 0 for its defining polynomial g: the value interval is
// shrunk until it lies inside w's isolating interval (equal: the value is a
// root of g and the interval holds only w) or outside it (not equal: the
// other roots of g avoid the closed interval).
bool tangent_value_matches(const IntegerPoly& t, const IntegerPoly& r, RealAlgebraic u,
                           const RealAlgebraic& w) {
    for (;;) {
        const QInterval x{u.lower(), u.upper()};
        const QInterval rv = interval_eval(r, x);
        if (rv.contains_zero()) {
            u.refine();
            continue;
        }
        const QInterval v = interval_mul(interval_eval(t, x), interval_recip(rv));
        if (v.hi < w.lower() || v.lo > w.upper())
            return false;
        if (v.lo > w.lower() && v.hi < w.upper())
            return true;
        u.refine();
    }
}

} // namespace

SignatureRank sample_signature(const SeifertMatrix& a, const Rational& tangent_half) {
    if (sign_of(tangent_half) == 0)
        return {0, 0};
    return signature_exact(HermitianMatrix(chart_matrix(a, tangent_half)));
}

SignatureRank sample_signature_at_pi(const SeifertMatrix& a) {
    const long n = a.dimension();
    Mat<GaussianRational> m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            const Rational& aij = a.entries().at(i, j);
            const Rational& aji = a.entries().at(j, i);
            if (a.parity() > 0)
                m.at(i, j) = GaussianRational(2 * (aij + aji));
            else
                m.at(i, j) = GaussianRational(2 * (aij - aji));
        }
    if (a.parity() > 0)
        return signature_exact(HermitianMatrix(std::move(m)));
    return signature_antihermitian(m);
}

SignatureProfile signature_profile(const SeifertMatrix& a) {
    SignatureProfile prof;
    prof.matrix_ = std::make_shared<const SeifertMatrix>(a);
    if (a.dimension() == 0 || a.is_zero())
        return prof;

    // Breakpoint candidates.  det M(t) = (1-t)^n t^-n det(tA - eps A^T), so
    // when the Alexander polynomial is nonzero the candidates away from
    // theta = 0 are exactly its circle zeros; the identically-singular case
    // falls back to the last generically nonzero characteristic coefficient.
    // theta = 0 and theta = pi are always candidates: pi is invisible in the
    // tangent chart and 0 anchors the cyclic arc structure.
    const LaurentPoly alex = alexander(a).value();
    IntegerPoly cand;
    if (!alex.is_zero()) {
        cand = circle_to_tangent(alex * alex.bar());
    } else {
        const std::vector<IntegerPoly> chars = char_coefficients(a);
        long r = 0;
        for (long j = static_cast<long>(chars.size()); j >= 1; --j)
            if (!chars[static_cast<std::size_t>(j - 1)].is_zero()) {
                r = j;
                break;
            }
        // r >= 1 here: a vanishing form would mean a zero matrix
        cand = chars[static_cast<std::size_t>(r - 1)];
    }
    std::vector<RealAlgebraic> pos, neg;
    if (cand.degree() > 0)
        for (RealAlgebraic& root : sturm_isolate_all(cand)) {
            const int c = compare(root, Rational(0));
            if (c < 0)
                neg.push_back(std::move(root));
            else if (c > 0)
                pos.push_back(std::move(root));
            // roots at u = 0 merge into the always-present theta = 0
        }

    const long np = static_cast<long>(pos.size());
    const long nn = static_cast<long>(neg.size());
    const long total = 2 + np + nn;
    // candidate order: 0, positive tangents ascending, pi, negative ascending
    std::vector<Angle> angles;
    angles.reserve(static_cast<std::size_t>(total));
    angles.push_back(Angle::zero());
    for (const RealAlgebraic& r : pos)
        angles.push_back(Angle::from_tangent_half(r, 0));
    angles.push_back(Angle::rational_pi(Rational(1)));
    for (const RealAlgebraic& r : neg)
        angles.push_back(Angle::from_tangent_half(r, 0));

    std::vector<long> values(static_cast<std::size_t>(total));
    std::vector<long> ranks(static_cast<std::size_t>(total));
    for (long k = 0; k < total; ++k) {
        ArcBound lo, hi;
        if (k <= np) {
            lo = (k == 0) ? ArcBound::at(Rational(0))
                          : ArcBound::at(pos[static_cast<std::size_t>(k - 1)]);
            hi = (k == np) ? ArcBound::plus_infinity()
                           : ArcBound::at(pos[static_cast<std::size_t>(k)]);
        } else if (k == np + 1) {
            lo = ArcBound::minus_infinity();
            hi = nn ? ArcBound::at(neg[0]) : ArcBound::at(Rational(0));
        } else {
            const long j = k - np - 2;
            lo = ArcBound::at(neg[static_cast<std::size_t>(j)]);
            hi = (j + 1 < nn) ? ArcBound::at(neg[static_cast<std::size_t>(j + 1)])
                              : ArcBound::at(Rational(0));
        }
        const SignatureRank sr = sample_signature(a, simplest_rational_between(lo, hi));
        values[static_cast<std::size_t>(k)] = sr.signature;
        ranks[static_cast<std::size_t>(k)] = sr.rank;
    }
    prof.arc_rank_ = ranks[0];

    bool moves = false;
    for (long k = 0; k < total; ++k)
        if (values[static_cast<std::size_t>(k)] !=
            values[static_cast<std::size_t>((k + total - 1) % total)])
            moves = true;
    if (!moves) {
        prof.constant_value_ = values[0];
        prof.flat_candidates_.assign(angles.begin() + 1, angles.end());
        return prof;
    }
    for (long k = 0; k < total; ++k) {
        const long jump = values[static_cast<std::size_t>(k)] -
                          values[static_cast<std::size_t>((k + total - 1) % total)];
        if (jump == 0) {
            // theta = 0 is excluded: value_at already pins sigma(0) = 0
            if (k != 0)
                prof.flat_candidates_.push_back(angles[static_cast<std::size_t>(k)]);
            continue;
        }
        prof.breakpoints_.push_back(angles[static_cast<std::size_t>(k)]);
        prof.interval_values_.push_back(values[static_cast<std::size_t>(k)]);
        prof.jumps_.push_back(jump);
    }
    return prof;
}

std::vector<long> SignatureProfile::pointwise_values(const std::vector<Angle>& at) const {
    std::vector<long> out;
    out.reserve(at.size());
    std::optional<std::vector<IntegerPoly>> chars;
    for (const Angle& b : at) {
        if (b.canonical_is_zero()) {
            out.push_back(0);
            continue;
        }
        if (angle_chart(b) == 1) {
            out.push_back(sample_signature_at_pi(*matrix_).signature);
            continue;
        }
        const RealAlgebraic u = angle_tangent_key(b);
        if (u.is_rational()) {
            out.push_back(sample_signature(*matrix_, u.rational_value()).signature);
            continue;
        }
        if (!chars)
            chars = char_coefficients(*matrix_);
        out.push_back(signature_by_descartes(*chars, u));
    }
    return out;
}

const std::vector<long>& SignatureProfile::point_values() const {
    if (!point_values_)
        point_values_ = pointwise_values(breakpoints_);
    return *point_values_;
}

const std::vector<long>& SignatureProfile::flat_values() const {
    if (!flat_values_)
        flat_values_ = pointwise_values(flat_candidates_);
    return *flat_values_;
}

bool SignatureProfile::has_zero_jump_function() const {
    for (const Angle& b : breakpoints_)
        if (!b.canonical_is_zero())
            return false;
    return true;
}

long SignatureProfile::value_at(const Angle& theta) const {
    if (theta.canonical_is_zero())
        return 0;
    long before = -1;
    for (std::size_t k = 0; k < breakpoints_.size(); ++k) {
        const int c = compare_canonical(breakpoints_[k], theta);
        if (c == 0)
            return point_values()[k];
        if (c < 0)
            before = static_cast<long>(k);
        else
            break;
    }
    for (std::size_t k = 0; k < flat_candidates_.size(); ++k) {
        const int c = compare_canonical(flat_candidates_[k], theta);
        if (c == 0)
            return flat_values()[k];
        if (c > 0)
            break;
    }
    if (breakpoints_.empty())
        return constant_value_;
    if (before < 0)
        return interval_values_.back(); // wrapped around through 0
    return interval_values_[static_cast<std::size_t>(before)];
}

long SignatureProfile::delta_at(const Angle& theta) const {
    if (theta.canonical_is_zero())
        return 0;
    for (std::size_t k = 0; k < breakpoints_.size(); ++k)
        if (equal_canonical(breakpoints_[k], theta))
            return jumps_[k];
    return 0;
}

long sigma_at(const SeifertMatrix& a, const Angle& theta) {
    if (theta.canonical_is_zero())
        return 0;
    if (theta.kind() == Angle::Kind::rational_pi) {
        const Rational& r = theta.pi_multiple(); // in [0, 2)
        const Integer num = numerator(r);
        const Integer den = denominator(r);
        if (!num.fits_slong_p() || !den.fits_slong_p() || 2 * den.get_si() <= 0)
            throw input_error("angle is too fine for the cyclotomic evaluation");
        // theta = (num/den) pi = 2 pi num / (2 den)
        return cyclotomic_sigma(a, num.get_si(), 2 * den.get_si());
    }
    const RealAlgebraic& u = theta.tangent_half();
    if (u.is_rational())
        return sample_signature(a, u.rational_value()).signature;
    return signature_profile(a).value_at(theta);
}

long delta_at(const SeifertMatrix& a, const Angle& theta) {
    return signature_profile(a).delta_at(theta);
}

long branched_signature(const SeifertMatrix& a, long k, long d) {
    if (d <= 0)
        throw input_error("branched cover degree must be positive");
    if (k < 0 || k >= d)
        throw input_error("branch index must satisfy 0 <= k < d");
    if (k == 0)
        return 0;
    return cyclotomic_sigma(a, k, d);
}

long delta_reparametrized(const SignatureProfile& prof, long n, const Angle& theta) {
    if (n == 0 || prof.breakpoints().empty())
        return 0;
    if (theta.kind() == Angle::Kind::rational_pi)
        return prof.delta_at(theta.times(n));
    if (n == 1)
        return prof.delta_at(theta);
    if (n == -1)
        return prof.delta_at(theta.negated());

    const long m = n > 0 ? n : -n;
    const bool flip = n < 0; // tan(n theta / 2) = -T_m(u)/R_m(u) then
    const auto [t, r] = tangent_pair(m);
    const RealAlgebraic& u = theta.tangent_half();

    if (u.is_rational()) {
        const Rational& uv = u.rational_value();
        const Rational tv = RationalPoly::from_integer(t).eval(uv);
        const Rational rv = RationalPoly::from_integer(r).eval(uv);
        if (sign_of(rv) == 0)
            return jump_at_pi(prof); // n theta lands on pi
        if (sign_of(tv) == 0)
            return 0; // n theta lands on 0
        Rational v = tv / rv;
        if (flip)
            v = -v;
        return prof.delta_at(Angle::from_tangent_half(RealAlgebraic::from_rational(v), 0));
    }

    if (is_root_of(r, u))
        return jump_at_pi(prof);
    if (is_root_of(t, u))
        return 0;

    // Enclose v = tan(n theta / 2) once; interval disjointness rejects almost
    // every breakpoint before any gcd work.
    RealAlgebraic uu = u;
    QInterval enclosure{};
    bool have_enclosure = false;
    for (int round = 0; round < 64 && !have_enclosure; ++round) {
        const QInterval x{uu.lower(), uu.upper()};
        const QInterval rv = interval_eval(r, x);
        if (rv.contains_zero()) {
            uu.refine();
            continue;
        }
        enclosure = interval_mul(interval_eval(t, x), interval_recip(rv));
        have_enclosure = true;
    }
    // The filter and the exact tests below both compare T_m/R_m(u) against
    // the (sign-adjusted) breakpoint tangents, so the enclosure is never
    // negated; the flip lives entirely in w.

    for (std::size_t k = 0; k < prof.breakpoints().size(); ++k) {
        const Angle& b = prof.breakpoints()[k];
        if (b.canonical_is_zero() || angle_chart(b) == 1)
            continue;
        RealAlgebraic w = angle_tangent_key(b);
        if (flip)
            w = negate(w);
        if (w.is_rational()) {
            const Rational& pv = w.rational_value();
            const IntegerPoly f = t.scaled(denominator(pv)) - r.scaled(numerator(pv));
            if (is_root_of(f, u))
                return prof.jumps()[k];
            continue;
        }
        if (have_enclosure && (enclosure.hi < w.lower() || enclosure.lo > w.upper()))
            continue;
        const IntegerPoly f = compose_fraction(w.defining_poly(), t, r);
        if (is_root_of(f, u) && tangent_value_matches(t, r, u, w))
            return prof.jumps()[k];
    }
    return 0;
}

} // namespace qsig
