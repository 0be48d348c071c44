#include "qsig/cyclotomic.hpp"

#include <mpfr.h>

#include <cstdlib>
#include <map>
#include <numeric>

#include "qsig/hermitian.hpp"

namespace qsig {

// ------------------------------------------------------ cyclotomic polynomial

namespace {

IntegerPoly divide_exact(const IntegerPoly& a, const IntegerPoly& b) {
    // Exact quotient of integer polynomials (used with monic-up-to-sign b).
    auto qr = RationalPoly::from_integer(a).divrem(RationalPoly::from_integer(b));
    if (!qr.rem.is_zero())
        throw precondition_error("inexact polynomial division");
    return qr.quot.cleared_to_integer();
}

} // namespace

IntegerPoly cyclotomic_polynomial(long d) {
    if (d < 1)
        throw precondition_error("cyclotomic polynomial of nonpositive order");
    static std::map<long, IntegerPoly> cache;
    auto hit = cache.find(d);
    if (hit != cache.end())
        return hit->second;

    // x^d - 1 divided by the product of all lower cyclotomic polynomials.
    std::vector<Integer> xd(static_cast<std::size_t>(d) + 1);
    xd[0] = -1;
    xd.back() = 1;
    IntegerPoly num((std::vector<Integer>(xd)));
    for (long e = 1; e < d; ++e)
        if (d % e == 0)
            num = divide_exact(num, cyclotomic_polynomial(e));
    cache.emplace(d, num);
    return num;
}

// ----------------------------------------------------------- field arithmetic

namespace {

// Q(zeta_d) with zeta presented as x mod Phi_d.  Small helper bundle so the
// elimination below reads like textbook linear algebra.
struct Field {
    long d;
    RationalPoly phi;
    std::vector<RationalPoly> power; // x^m mod phi, m in [0, d)

    explicit Field(long order, const IntegerPoly& modulus)
        : d(order), phi(RationalPoly::from_integer(modulus)) {
        power.resize(static_cast<std::size_t>(d));
        power[0] = RationalPoly::constant(1);
        for (long m = 1; m < d; ++m)
            power[static_cast<std::size_t>(m)] =
                reduce(power[static_cast<std::size_t>(m - 1)] * RationalPoly::power(1));
    }

    RationalPoly reduce(const RationalPoly& f) const { return f.divrem(phi).rem; }

    RationalPoly mul(const RationalPoly& a, const RationalPoly& b) const {
        return reduce(a * b);
    }

    // zeta^m for any integer m (x^d = 1 in the field).
    const RationalPoly& zeta_power(long m) const {
        long r = m % d;
        if (r < 0)
            r += d;
        return power[static_cast<std::size_t>(r)];
    }

    RationalPoly conj(const RationalPoly& a) const {
        RationalPoly out;
        for (long j = 0; j <= a.degree(); ++j)
            if (sgn(a.coeff(j)) != 0)
                out = out + zeta_power(-j).scaled(a.coeff(j));
        return out;
    }

    RationalPoly inverse(const RationalPoly& a) const {
        if (a.is_zero())
            throw precondition_error("inverse of zero in a cyclotomic field");
        // Extended Euclid in Q[x]: s*a + t*phi = gcd = constant.
        RationalPoly r0 = phi, r1 = a;
        RationalPoly s0 = RationalPoly::constant(0), s1 = RationalPoly::constant(1);
        while (!r1.is_zero() && r1.degree() > 0) {
            auto qr = r0.divrem(r1);
            RationalPoly s2 = s0 - qr.quot * s1;
            r0 = std::move(r1);
            r1 = std::move(qr.rem);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.is_zero())
            throw precondition_error("non-invertible element mod a reducible modulus");
        return reduce(s1.scaled(1 / r1.coeff(0)));
    }
};

} // namespace

// ------------------------------------------------------------ CyclotomicMatrix

CyclotomicMatrix::CyclotomicMatrix(Mat<RationalPoly> entries, long k, long d) {
    if (d < 1)
        throw input_error("cyclotomic order must be positive");
    if (!entries.is_square())
        throw input_error("cyclotomic matrix must be square");
    k %= d;
    if (k < 0)
        k += d;
    const long g = std::gcd(k, d); // k == 0 gives g = d: the trivial embedding
    order_ = d / g;
    embed_ = k / g;
    modulus_ = cyclotomic_polynomial(order_);
    RationalPoly phi = RationalPoly::from_integer(modulus_);
    entries_ = std::move(entries);
    for (long i = 0; i < entries_.rows(); ++i)
        for (long j = 0; j < entries_.cols(); ++j)
            entries_.at(i, j) = entries_.at(i, j).divrem(phi).rem;
}

bool CyclotomicMatrix::is_hermitian() const {
    Field f(order_, modulus_);
    for (long i = 0; i < dim(); ++i)
        for (long j = i; j < dim(); ++j)
            if (!(entries_.at(i, j) == f.reduce(f.conj(entries_.at(j, i)))))
                return false;
    return true;
}

// -------------------------------------------------------- numeric pivot signs

namespace {

long precision_ceiling() {
    if (const char* s = std::getenv("QSIG_PREC_CEILING")) {
        long v = std::atol(s);
        if (v >= 64)
            return v;
    }
    return 4096;
}

// Minimal complex interval arithmetic on top of raw mpfr with directed
// rounding.  Everything lives at one fixed precision per ladder rung.
struct RIv {
    mpfr_t lo, hi;
    explicit RIv(mpfr_prec_t p) {
        mpfr_init2(lo, p);
        mpfr_init2(hi, p);
    }
    ~RIv() {
        mpfr_clear(lo);
        mpfr_clear(hi);
    }
    RIv(const RIv&) = delete;
    RIv& operator=(const RIv&) = delete;
    RIv(RIv&& o) noexcept {
        mpfr_init2(lo, mpfr_get_prec(o.lo));
        mpfr_init2(hi, mpfr_get_prec(o.hi));
        mpfr_set(lo, o.lo, MPFR_RNDD);
        mpfr_set(hi, o.hi, MPFR_RNDU);
    }

    void set_rational(const Rational& v) {
        mpfr_set_q(lo, v.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi, v.get_mpq_t(), MPFR_RNDU);
    }
    void set_zero() {
        mpfr_set_zero(lo, 0);
        mpfr_set_zero(hi, 0);
    }
    bool contains_zero() const {
        return mpfr_sgn(lo) <= 0 && mpfr_sgn(hi) >= 0;
    }
    int definite_sign() const { // 0 when the interval straddles zero
        if (mpfr_sgn(lo) > 0)
            return +1;
        if (mpfr_sgn(hi) < 0)
            return -1;
        return 0;
    }
};

void iv_add(RIv& out, const RIv& a, const RIv& b) {
    mpfr_add(out.lo, a.lo, b.lo, MPFR_RNDD);
    mpfr_add(out.hi, a.hi, b.hi, MPFR_RNDU);
}

void iv_mul(RIv& out, const RIv& a, const RIv& b, mpfr_prec_t p) {
    RIv t(p);
    mpfr_mul(t.lo, a.lo, b.lo, MPFR_RNDD);
    mpfr_set(t.hi, t.lo, MPFR_RNDU);
    mpfr_mul(t.hi, a.lo, b.lo, MPFR_RNDU);
    // Running min/max over the four endpoint products.
    mpfr_t prod;
    mpfr_init2(prod, p);
    auto consider = [&](const mpfr_t x, const mpfr_t y) {
        mpfr_mul(prod, x, y, MPFR_RNDD);
        if (mpfr_cmp(prod, t.lo) < 0)
            mpfr_set(t.lo, prod, MPFR_RNDD);
        mpfr_mul(prod, x, y, MPFR_RNDU);
        if (mpfr_cmp(prod, t.hi) > 0)
            mpfr_set(t.hi, prod, MPFR_RNDU);
    };
    consider(a.lo, b.hi);
    consider(a.hi, b.lo);
    consider(a.hi, b.hi);
    mpfr_clear(prod);
    mpfr_set(out.lo, t.lo, MPFR_RNDD);
    mpfr_set(out.hi, t.hi, MPFR_RNDU);
}

void iv_sub(RIv& out, const RIv& a, const RIv& b, mpfr_prec_t p) {
    RIv nb(p);
    mpfr_neg(nb.lo, b.hi, MPFR_RNDD);
    mpfr_neg(nb.hi, b.lo, MPFR_RNDU);
    iv_add(out, a, nb);
}

struct CIv {
    RIv re, im;
    explicit CIv(mpfr_prec_t p) : re(p), im(p) {}
};

void civ_mul(CIv& out, const CIv& a, const CIv& b, mpfr_prec_t p) {
    RIv t1(p), t2(p);
    iv_mul(t1, a.re, b.re, p);
    iv_mul(t2, a.im, b.im, p);
    RIv re(p);
    iv_sub(re, t1, t2, p);
    iv_mul(t1, a.re, b.im, p);
    iv_mul(t2, a.im, b.re, p);
    RIv im(p);
    iv_add(im, t1, t2);
    mpfr_set(out.re.lo, re.lo, MPFR_RNDD);
    mpfr_set(out.re.hi, re.hi, MPFR_RNDU);
    mpfr_set(out.im.lo, im.lo, MPFR_RNDD);
    mpfr_set(out.im.hi, im.hi, MPFR_RNDU);
}

// Enclosure of e^{2 pi i k / d}: correctly rounded midpoint sin/cos widened by
// the (directed) argument interval -- |cos'|, |sin'| <= 1 makes this sound.
void unit_root_enclosure(CIv& out, long k, long d, mpfr_prec_t p) {
    mpfr_t pi_lo, pi_hi, arg_lo, arg_hi, mid, rad, val;
    mpfr_inits2(p, pi_lo, pi_hi, arg_lo, arg_hi, mid, rad, val, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    // arg = 2 pi k / d with k >= 0
    mpfr_mul_si(arg_lo, pi_lo, 2 * k, MPFR_RNDD);
    mpfr_div_si(arg_lo, arg_lo, d, MPFR_RNDD);
    mpfr_mul_si(arg_hi, pi_hi, 2 * k, MPFR_RNDU);
    mpfr_div_si(arg_hi, arg_hi, d, MPFR_RNDU);
    // midpoint and radius
    mpfr_add(mid, arg_lo, arg_hi, MPFR_RNDN);
    mpfr_div_si(mid, mid, 2, MPFR_RNDN);
    mpfr_sub(rad, arg_hi, arg_lo, MPFR_RNDU);

    auto fill = [&](RIv& target, int (*fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)) {
        fn(val, mid, MPFR_RNDD);
        mpfr_sub(target.lo, val, rad, MPFR_RNDD);
        fn(val, mid, MPFR_RNDU);
        mpfr_add(target.hi, val, rad, MPFR_RNDU);
    };
    fill(out.re, mpfr_cos);
    fill(out.im, mpfr_sin);
    mpfr_clears(pi_lo, pi_hi, arg_lo, arg_hi, mid, rad, val, static_cast<mpfr_ptr>(nullptr));
}

// Sign of the real number f(e^{2 pi i k / d}) for f known to be nonzero and
// real-valued there.  Adaptive precision; certifies via interval exclusion.
int embedded_sign(const RationalPoly& f, long k, long d) {
    if (f.is_zero())
        return 0;
    const long ceiling = precision_ceiling();
    for (long prec = 64;; prec = (prec >= ceiling) ? prec : std::min(prec * 2, ceiling)) {
        const auto p = static_cast<mpfr_prec_t>(prec);
        CIv omega(p), acc(p), coeff(p);
        unit_root_enclosure(omega, k, d, p);
        acc.re.set_rational(f.coeff(f.degree()));
        acc.im.set_zero();
        for (long j = f.degree() - 1; j >= 0; --j) {
            CIv next(p);
            civ_mul(next, acc, omega, p);
            coeff.re.set_rational(f.coeff(j));
            coeff.im.set_zero();
            iv_add(next.re, next.re, coeff.re);
            mpfr_set(acc.re.lo, next.re.lo, MPFR_RNDD);
            mpfr_set(acc.re.hi, next.re.hi, MPFR_RNDU);
            mpfr_set(acc.im.lo, next.im.lo, MPFR_RNDD);
            mpfr_set(acc.im.hi, next.im.hi, MPFR_RNDU);
        }
        int s = acc.re.definite_sign();
        if (s != 0 && acc.im.contains_zero())
            return s;
        if (s != 0)
            throw precondition_error("cyclotomic pivot is not real at the embedding");
        if (prec >= ceiling)
            throw precision_error(
                "sign of a cyclotomic pivot needs more than QSIG_PREC_CEILING bits");
    }
}

} // namespace

// -------------------------------------------------------- signature (field)

SignatureRank signature_cyclotomic(const CyclotomicMatrix& m) {
    if (!m.is_hermitian())
        throw input_error("matrix is not hermitian under the cyclotomic involution");
    const long n = m.dim();
    Field f(m.order(), m.modulus());
    Mat<RationalPoly> e = m.entries();

    SignatureRank out;
    long k = 0;
    while (k < n) {
        // First nonzero diagonal entry (deterministic pivot order).
        long piv = -1;
        for (long i = k; i < n && piv < 0; ++i)
            if (!e.at(i, i).is_zero())
                piv = i;
        if (piv < 0) {
            // Repair an all-zero active diagonal: for a nonzero off-diagonal
            // z at (i, j), some twist λ = zeta^t makes 2 Re(conj(λ) z) != 0,
            // and row_i += λ row_j / col_i += conj(λ) col_j is a congruence.
            long fi = -1, fj = -1;
            for (long i = k; i < n && fi < 0; ++i)
                for (long j = i + 1; j < n; ++j)
                    if (!e.at(i, j).is_zero()) {
                        fi = i;
                        fj = j;
                        break;
                    }
            if (fi < 0)
                break; // active block is zero
            const RationalPoly z = e.at(fi, fj);
            // Some power of zeta rotates z off the imaginary axis: at most two
            // of the d distinct rotations e^{2 pi i k t / d} z can be purely
            // imaginary, and for order 1 or 2 the values are already real.
            RationalPoly lambda;
            for (long t = 0; t < m.order(); ++t) {
                RationalPoly cand = f.zeta_power(t);
                RationalPoly diag = f.reduce(f.mul(f.conj(cand), z) + f.mul(cand, f.conj(z)));
                if (!diag.is_zero()) {
                    lambda = std::move(cand);
                    break;
                }
            }
            if (lambda.is_zero())
                throw precondition_error("no diagonalizing twist found for a zero diagonal");
            for (long c = k; c < n; ++c)
                e.at(fi, c) = f.reduce(e.at(fi, c) + f.mul(lambda, e.at(fj, c)));
            RationalPoly lbar = f.conj(lambda);
            for (long r = k; r < n; ++r)
                e.at(r, fi) = f.reduce(e.at(r, fi) + f.mul(lbar, e.at(r, fj)));
            continue;
        }
        if (piv != k) {
            for (long c = 0; c < n; ++c)
                std::swap(e.at(piv, c), e.at(k, c));
            for (long r = 0; r < n; ++r)
                std::swap(e.at(r, piv), e.at(r, k));
        }
        const RationalPoly p = e.at(k, k);
        const RationalPoly pinv = f.inverse(p);
        for (long i = k + 1; i < n; ++i) {
            if (e.at(i, k).is_zero())
                continue;
            RationalPoly factor = f.mul(e.at(i, k), pinv);
            for (long j = k + 1; j < n; ++j)
                e.at(i, j) = f.reduce(e.at(i, j) - f.mul(factor, e.at(k, j)));
            e.at(i, k) = RationalPoly();
        }
        for (long j = k + 1; j < n; ++j)
            e.at(k, j) = RationalPoly();

        out.rank += 1;
        out.signature += embedded_sign(p, m.embed(), m.order());
        ++k;
    }
    return out;
}

} // namespace qsig
