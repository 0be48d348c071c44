#include "qsig/algebraic.hpp"

#include <cassert>
#include <variant>

namespace qsig {

// -------------------------------------------------------------- construction

RealAlgebraic RealAlgebraic::from_rational(const Rational& v) {
    RealAlgebraic x;
    // den*t - num: primitive by canonicity of v, squarefree trivially.
    x.p_ = std::make_shared<IntegerPoly>(
        IntegerPoly({-numerator(v), denominator(v)}));
    x.lo_ = v - 1;
    x.hi_ = v + 1;
    x.sign_at_lo_ = -1;
    x.exact_ = v;
    return x;
}

RealAlgebraic RealAlgebraic::from_isolated_root(std::shared_ptr<const IntegerPoly> p,
                                                Rational lo, Rational hi) {
    RealAlgebraic x;
    x.p_ = std::move(p);
    x.lo_ = std::move(lo);
    x.hi_ = std::move(hi);
    x.sign_at_lo_ = x.p_->sign_at(x.lo_);
    if (x.sign_at_lo_ == 0 || x.sign_at_lo_ * x.p_->sign_at(x.hi_) >= 0)
        throw precondition_error("isolating interval endpoints must straddle one simple root");
    if (x.p_->degree() == 1)
        x.exact_ = Rational(-x.p_->coeff(0)) / Rational(x.p_->coeff(1));
    return x;
}

const Rational& RealAlgebraic::rational_value() const {
    if (!exact_)
        throw precondition_error("rational_value of an irrational algebraic number");
    return *exact_;
}

void RealAlgebraic::refine() {
    if (exact_) {
        const Rational& e = *exact_;
        if (lo_ < e)
            lo_ = (lo_ + e) / 2;
        if (hi_ > e)
            hi_ = (hi_ + e) / 2;
        sign_at_lo_ = p_->sign_at(lo_);
        return;
    }
    Rational m = (lo_ + hi_) / 2;
    int s = p_->sign_at(m);
    if (s == 0) {
        Rational w = (hi_ - lo_) / 4;
        exact_ = m;
        lo_ = m - w;
        hi_ = m + w;
        sign_at_lo_ = p_->sign_at(lo_);
        return;
    }
    if (s == sign_at_lo_)
        lo_ = std::move(m);
    else
        hi_ = std::move(m);
}

void RealAlgebraic::refine_below(const Rational& width) {
    while (hi_ - lo_ > width)
        refine();
}

double RealAlgebraic::approx() const {
    if (exact_)
        return exact_->get_d();
    RealAlgebraic c = *this;
    Integer w = 1;
    mpz_ui_pow_ui(w.get_mpz_t(), 10, 16);
    c.refine_below(make_rational(1, w));
    return (Rational((c.lo_ + c.hi_) / 2)).get_d();
}

std::string RealAlgebraic::to_string() const {
    if (exact_)
        return qsig::to_string(*exact_);
    return "root of " + p_->to_string("x") + " in (" + qsig::to_string(lo_) + ", " +
           qsig::to_string(hi_) + ")";
}

// --------------------------------------------------------------- comparisons

int compare(const RealAlgebraic& x, const Rational& v) {
    if (x.is_rational())
        return cmp(x.rational_value(), v);
    if (x.defining_poly().sign_at(v) == 0 && x.lower() <= v && v <= x.upper())
        return 0;
    RealAlgebraic c = x;
    while (c.lower() <= v && v <= c.upper())
        c.refine();
    return v < c.lower() ? +1 : -1;
}

int compare(const RealAlgebraic& x, const RealAlgebraic& y) {
    if (x.is_rational())
        return -compare(y, x.rational_value());
    if (y.is_rational())
        return compare(x, y.rational_value());

    RealAlgebraic a = x, b = y;
    bool equality_tested = false;
    for (;;) {
        if (a.upper() < b.lower())
            return -1;
        if (b.upper() < a.lower())
            return +1;
        if (!equality_tested) {
            // Intervals overlap.  If x == y, their common root lies in the
            // overlap and is interior to both intervals, so the gcd of the
            // defining polynomials changes sign across the overlap.
            equality_tested = true;
            IntegerPoly h = poly_gcd(a.defining_poly(), b.defining_poly());
            if (h.degree() >= 1) {
                Rational olo = std::max(a.lower(), b.lower());
                Rational ohi = std::min(a.upper(), b.upper());
                if (h.sign_at(olo) * h.sign_at(ohi) < 0)
                    return 0;
            }
        }
        a.refine();
        b.refine();
    }
}

bool is_root_of(const IntegerPoly& g, const RealAlgebraic& x) {
    if (g.is_zero())
        return true;
    if (x.is_rational())
        return g.sign_at(x.rational_value()) == 0;
    IntegerPoly h = poly_gcd(g, x.defining_poly());
    if (h.degree() < 1)
        return false;
    // Roots of h are roots of the defining polynomial, so the interval
    // endpoints are not roots of h and the sign test is conclusive.
    return h.sign_at(x.lower()) * h.sign_at(x.upper()) < 0;
}

int sign_at(const IntegerPoly& g, const RealAlgebraic& x) {
    if (x.is_rational())
        return g.sign_at(x.rational_value());
    if (is_root_of(g, x))
        return 0;
    RealAlgebraic c = x;
    for (;;) {
        QInterval v = interval_eval(g, {c.lower(), c.upper()});
        if (!v.contains_zero())
            return sgn(v.lo) > 0 ? +1 : -1;
        c.refine();
    }
}

RealAlgebraic negate(const RealAlgebraic& x) {
    if (x.is_rational())
        return RealAlgebraic::from_rational(-x.rational_value());
    std::vector<Integer> c = x.defining_poly().coeffs();
    for (std::size_t k = 0; k < c.size(); k += 2)
        c[k] = -c[k];
    // p(-t) with sign flipped on even coefficients is (-1)^deg * p reversed in
    // sign; squarefree and primitive survive either way.
    auto p = std::make_shared<IntegerPoly>(IntegerPoly(std::move(c)));
    return RealAlgebraic::from_isolated_root(std::move(p), -x.upper(), -x.lower());
}

// ------------------------------------------------------------ root isolation

namespace {

struct Range {
    Rational a, b;
    long va, vb; // Sturm variation counts at the endpoints
};

// Emit an already-identified rational root m.  A rational root is best
// carried with its linear defining polynomial: comparisons short-circuit and
// gcd-based tests still work against any other polynomial.
struct EmitExact {
    Rational m;
};

// Shrink w until (m-w, m+w) isolates the known root m of q.
Rational isolating_radius(const IntegerPoly& q, const SturmChain& chain,
                          const Rational& m, Rational w) {
    for (;;) {
        if (q.sign_at(m - w) != 0 && q.sign_at(m + w) != 0 &&
            chain.count_in(m - w, m + w) == 1)
            return w;
        w /= 2;
    }
}

} // namespace

std::vector<RealAlgebraic> sturm_isolate_all(const IntegerPoly& p) {
    if (p.is_zero())
        throw precondition_error("indeterminate root set");
    IntegerPoly q = squarefree_part(p);
    std::vector<RealAlgebraic> out;
    if (q.degree() < 1)
        return out;
    auto qp = std::make_shared<const IntegerPoly>(q);
    SturmChain chain(q);

    // Cauchy bound: every real root has |root| < 1 + max|c_k| / |lead|.
    Integer maxc = 0;
    for (const Integer& c : q.coeffs())
        if (cmp(abs(c), maxc) > 0)
            maxc = abs(c);
    Integer bound;
    mpz_cdiv_q(bound.get_mpz_t(), maxc.get_mpz_t(), Integer(abs(q.leading())).get_mpz_t());
    bound += 1;
    Rational lo(-bound), hi(bound);

    std::vector<std::variant<Range, EmitExact>> stack;
    stack.push_back(Range{lo, hi, chain.variations_at(lo), chain.variations_at(hi)});

    while (!stack.empty()) {
        auto item = std::move(stack.back());
        stack.pop_back();
        if (std::holds_alternative<EmitExact>(item)) {
            out.push_back(RealAlgebraic::from_rational(std::get<EmitExact>(item).m));
            continue;
        }
        Range r = std::get<Range>(item);
        const long count = r.va - r.vb;
        if (count <= 0)
            continue;
        if (count == 1) {
            if (q.sign_at(r.b) == 0)
                out.push_back(RealAlgebraic::from_rational(r.b));
            else
                out.push_back(RealAlgebraic::from_isolated_root(qp, r.a, r.b));
            continue;
        }
        Rational m = (r.a + r.b) / 2;
        if (q.sign_at(m) == 0) {
            Rational w = isolating_radius(q, chain, m, (r.b - r.a) / 4);
            Rational ml = m - w, mr = m + w;
            long vml = chain.variations_at(ml), vmr = chain.variations_at(mr);
            // Stack order: right part processed last, keeps output sorted.
            stack.push_back(Range{mr, r.b, vmr, r.vb});
            stack.push_back(EmitExact{m});
            stack.push_back(Range{r.a, ml, r.va, vml});
        } else {
            long vm = chain.variations_at(m);
            stack.push_back(Range{m, r.b, vm, r.vb});
            stack.push_back(Range{r.a, m, r.va, vm});
        }
    }
    return out;
}

std::vector<RealAlgebraic> sturm_isolate(const IntegerPoly& p, const Rational& lo,
                                         const Rational& hi) {
    std::vector<RealAlgebraic> all = sturm_isolate_all(p);
    std::vector<RealAlgebraic> out;
    for (RealAlgebraic& r : all)
        if (compare(r, lo) >= 0 && compare(r, hi) <= 0)
            out.push_back(std::move(r));
    return out;
}

// -------------------------------------------------- simplest rational search

ArcBound ArcBound::at(RealAlgebraic v) {
    ArcBound b;
    if (v.is_rational()) {
        b.kind = Kind::rational;
        b.rat = v.rational_value();
    } else {
        b.kind = Kind::algebraic;
        b.alg = std::move(v);
    }
    return b;
}

namespace {

int bound_cmp(const ArcBound& b, const Rational& v) {
    switch (b.kind) {
    case ArcBound::Kind::infinite: return b.inf_sign;
    case ArcBound::Kind::rational: return cmp(b.rat, v);
    case ArcBound::Kind::algebraic: return compare(*b.alg, v);
    }
    return 0;
}

ArcBound bound_negate(const ArcBound& b) {
    switch (b.kind) {
    case ArcBound::Kind::infinite:
        return b.inf_sign > 0 ? ArcBound::minus_infinity() : ArcBound::plus_infinity();
    case ArcBound::Kind::rational:
        return ArcBound::at(Rational(-b.rat));
    case ArcBound::Kind::algebraic:
        return ArcBound::at(negate(*b.alg));
    }
    return {};
}

Integer bound_floor_plus_one(const ArcBound& b) {
    // Smallest integer strictly greater than the bound (finite bounds only).
    if (b.kind == ArcBound::Kind::rational)
        return floor_of(b.rat) + 1;
    RealAlgebraic c = *b.alg;
    if (c.is_rational())
        return floor_of(c.rational_value()) + 1;
    for (;;) {
        Integer fl = floor_of(c.lower()), fh = floor_of(c.upper());
        if (fl == fh)
            return fl + 1;
        // The value could be an exact integer that slipped through without the
        // rational flag; bisection would then straddle it forever.
        Rational candidate(fh);
        if (compare(c, candidate) == 0)
            return fh + 1;
        c.refine();
    }
}

} // namespace

Rational simplest_rational_between(const ArcBound& lo, const ArcBound& hi) {
    // Strictly between: candidates x with lo < x < hi.
    if (bound_cmp(lo, 0) < 0 && bound_cmp(hi, 0) > 0)
        return 0;
    if (bound_cmp(hi, 0) <= 0)
        return -simplest_rational_between(bound_negate(hi), bound_negate(lo));

    // Now 0 <= lo < hi.  Try the smallest admissible integer first.
    if (bound_cmp(lo, 0) >= 0) {
        Integer n = bound_floor_plus_one(lo);
        if (bound_cmp(hi, Rational(n)) > 0)
            return Rational(n);
    }

    // Stern-Brocot descent with doubling acceleration.  The first tree node
    // inside the open interval is the unique smallest-denominator rational.
    Integer pl = 0, ql = 1, pr = 1, qr = 0;
    for (;;) {
        Rational m = make_rational(pl + pr, ql + qr);
        int against_lo = bound_cmp(lo, m); // lo ? m
        int against_hi = bound_cmp(hi, m);
        if (against_lo < 0 && against_hi > 0)
            return m;
        if (against_lo >= 0) {
            // Whole interval is right of m: advance the left frame.  Find the
            // largest k with (pl + k*pr)/(ql + k*qr) <= lo by doubling.
            Integer k = 1;
            while (bound_cmp(lo, make_rational(pl + (2 * k) * pr, ql + (2 * k) * qr)) >= 0)
                k *= 2;
            Integer step = k, probe = k;
            while (probe > 1) {
                probe /= 2;
                if (bound_cmp(lo, make_rational(pl + (step + probe) * pr,
                                                ql + (step + probe) * qr)) >= 0)
                    step += probe;
            }
            pl += step * pr;
            ql += step * qr;
        } else {
            Integer k = 1;
            while (bound_cmp(hi, make_rational((2 * k) * pl + pr, (2 * k) * ql + qr)) <= 0)
                k *= 2;
            Integer step = k, probe = k;
            while (probe > 1) {
                probe /= 2;
                if (bound_cmp(hi, make_rational((step + probe) * pl + pr,
                                                (step + probe) * ql + qr)) <= 0)
                    step += probe;
            }
            pr += step * pl;
            qr += step * ql;
        }
    }
}

// ------------------------------------------------------- interval arithmetic

QInterval interval_add(const QInterval& a, const QInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

QInterval interval_mul(const QInterval& a, const QInterval& b) {
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    QInterval r{c[0], c[0]};
    for (int k = 1; k < 4; ++k) {
        if (c[k] < r.lo)
            r.lo = c[k];
        if (c[k] > r.hi)
            r.hi = c[k];
    }
    return r;
}

QInterval interval_eval(const IntegerPoly& p, const QInterval& x) {
    if (p.is_zero())
        return {Rational(0), Rational(0)};
    QInterval acc{Rational(p.leading()), Rational(p.leading())};
    for (long k = p.degree() - 1; k >= 0; --k) {
        acc = interval_mul(acc, x);
        acc = interval_add(acc, {Rational(p.coeff(k)), Rational(p.coeff(k))});
    }
    return acc;
}

QInterval interval_recip(const QInterval& x) {
    if (x.contains_zero())
        throw precondition_error("reciprocal of an interval containing zero");
    return {1 / x.hi, 1 / x.lo};
}

} // namespace qsig
