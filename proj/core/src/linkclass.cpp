#include "qsig/linkclass.hpp"

#include <utility>

#include "qsig/errors.hpp"
#include "qsig/linalg.hpp"

namespace qsig {

namespace {

long to_long(const Integer& z, const char* what) {
    if (!z.fits_slong_p())
        throw precondition_error(what);
    return z.get_si();
}

// theta / c, exact or rejected (rational multiples of pi divide exactly;
// a tangent-encoded angle only survives division by a unit).
Angle angle_over_complexity(const Angle& theta, const Integer& c) {
    if (c == 1)
        return theta;
    if (c == -1)
        return theta.negated();
    if (theta.kind() == Angle::Kind::rational_pi)
        return Angle::rational_pi(theta.total_pi_multiple() / Rational(c));
    throw precondition_error(
        "the angle must be a rational multiple of pi when the complexity exceeds one");
}

} // namespace

MeridianMatrix::MeridianMatrix(Mat<Rational> b) : b_(std::move(b)) {
    if (!b_.is_square())
        throw input_error("meridian matrix must be square");
    auto inv = rational_inverse(b_);
    if (!inv)
        throw precondition_error("meridian matrix is singular");
    inv_ = *std::move(inv);
}

Integer complexity_of_type(const MeridianMatrix& b, const TypeVector& tau) {
    const long m = b.matrix().rows();
    if (tau.size() != m)
        throw input_error("type vector length does not match the meridian matrix");
    Integer c(1);
    for (long j = 0; j < m; ++j) {
        Rational entry(0);
        for (long i = 0; i < m; ++i)
            entry += Rational(tau.entries()[static_cast<std::size_t>(i)]) * b.inverse().at(i, j);
        c = lcm_of(c, denominator(entry));
    }
    return c;
}

LinkClass::LinkClass(TypeVector tau, Integer complexity, SeifertMatrix a)
    : tau_(std::move(tau)), c_(std::move(complexity)), a_(std::move(a)) {
    if (c_ == 0)
        throw input_error("complexity must be nonzero");
}

const SignatureProfile& LinkClass::profile() const {
    if (!profile_)
        profile_ = std::make_shared<const SignatureProfile>(signature_profile(a_));
    return *profile_;
}

long link_delta(const LinkClass& l, const Angle& theta) {
    return sgn(l.complexity()) * l.profile().delta_at(angle_over_complexity(theta, l.complexity()));
}

long parallel_delta(const LinkClass& l, const SignTuple& alpha, const Angle& theta) {
    const long n = alpha.n_alpha();
    if (n == 0 && !intersection_form_nonsingular(l.matrix()))
        throw precondition_error("formula hypothesis violated");
    const Angle base_angle = angle_over_complexity(theta, l.complexity());
    const int cs = sgn(l.complexity());
    const long left =
        cs * signature_profile(reparam_matrix(l.matrix(), alpha)).delta_at(base_angle);
    const int ns = n > 0 ? 1 : (n < 0 ? -1 : 0);
    const long right = ns * cs * delta_reparametrized(l.profile(), n, base_angle);
    if (left != right)
        throw precondition_error("parallel copy formula verification failed");
    return right;
}

Rational period(const LinkClass& l) {
    const Integer period_turns = abs(l.complexity());
    const long turns = to_long(period_turns, "complexity is too large for certification");
    for (const Angle& b : l.profile().breakpoints()) {
        // A link-level angle theta with theta / c at the breakpoint; skipped
        // when no exact representative exists (then neither could a query).
        Angle theta = Angle::zero();
        Angle shifted = Angle::zero();
        if (b.kind() == Angle::Kind::rational_pi) {
            const Rational total = b.total_pi_multiple() * Rational(l.complexity());
            theta = Angle::rational_pi(total);
            shifted = Angle::rational_pi(total + Rational(2 * period_turns));
        } else if (period_turns == 1) {
            theta = l.complexity() > 0 ? b : b.negated();
            shifted = theta.with_winding(theta.winding() + turns);
        } else {
            continue;
        }
        if (link_delta(l, theta) != link_delta(l, shifted))
            throw precondition_error("period certification failed");
    }
    return Rational(2 * period_turns);
}

LinkClass rescaled(const LinkClass& l, const Integer& target) {
    if (target == 0)
        throw input_error("target complexity must be nonzero");
    const Integer r = target / l.complexity();
    if (r * l.complexity() != target)
        throw input_error("target complexity must be a multiple of the current one");
    const long rl = to_long(r, "complexity ratio is too large");
    return LinkClass(l.type(), target, reparam_matrix(l.matrix(), SignTuple::uniform(rl)));
}

LinkClass mirror_reverse(const LinkClass& l) {
    return LinkClass(l.type(), l.complexity(),
                     SeifertMatrix(eps_transpose(l.matrix()).entries().negated(), l.parity()));
}

CsumStars CsumStars::zero(long dim_sum, long c) {
    CsumStars s;
    s.surface_rows = Mat<Rational>(dim_sum, c - 1);
    s.curve_rows = Mat<Rational>(c - 1, dim_sum);
    s.center = Mat<Rational>(c - 1, c - 1);
    return s;
}

SeifertMatrix csum_matrix_q1(const SeifertMatrix& a1, const SeifertMatrix& a2, const Integer& c,
                             const CsumStars& stars) {
    if (a1.parity() != 1 || a2.parity() != 1)
        throw input_error("the q = 1 connected sum requires parity +1 matrices");
    if (c < 1)
        throw input_error("connected-sum complexity must be positive");
    const long cl = to_long(c, "connected-sum complexity is too large");
    const long d1 = a1.dimension(), d2 = a2.dimension();
    const long d = d1 + d2, band = cl - 1;
    if (stars.surface_rows.rows() != d || stars.surface_rows.cols() != band ||
        stars.curve_rows.rows() != band || stars.curve_rows.cols() != d ||
        stars.center.rows() != band || stars.center.cols() != band)
        throw input_error("star block dimensions do not match");

    RationalMatrix m(d + 2 * band, d + 2 * band);
    for (long i = 0; i < d1; ++i)
        for (long j = 0; j < d1; ++j)
            m.at(i, j) = a1.entries().at(i, j);
    for (long i = 0; i < d2; ++i)
        for (long j = 0; j < d2; ++j)
            m.at(d1 + i, d1 + j) = a2.entries().at(i, j);
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < band; ++j)
            m.at(i, d + j) = stars.surface_rows.at(i, j);
    for (long i = 0; i < band; ++i)
        for (long j = 0; j < d; ++j)
            m.at(d + i, j) = stars.curve_rows.at(i, j);
    for (long i = 0; i < band; ++i)
        for (long j = 0; j < band; ++j)
            m.at(d + i, d + j) = stars.center.at(i, j);
    // y_i against x_j and x_i against y_j, 1-based band formulas
    for (long i = 1; i <= band; ++i)
        for (long j = 1; j <= band; ++j) {
            m.at(d + i - 1, d + band + j - 1) = j < i ? make_rational(Integer(cl - i), Integer(cl))
                                                      : make_rational(Integer(-i), Integer(cl));
            m.at(d + band + i - 1, d + j - 1) = j < i ? make_rational(Integer(-j), Integer(cl))
                                                      : make_rational(Integer(cl - j), Integer(cl));
        }
    return SeifertMatrix(std::move(m), 1);
}

SeifertMatrix csum_matrix_q1(const SeifertMatrix& a1, const SeifertMatrix& a2, const Integer& c) {
    if (c < 1)
        throw input_error("connected-sum complexity must be positive");
    return csum_matrix_q1(a1, a2, c,
                          CsumStars::zero(a1.dimension() + a2.dimension(),
                                          to_long(c, "connected-sum complexity is too large")));
}

long csum_delta(const LinkClass& l1, const LinkClass& l2, const Angle& theta) {
    if (!(l1.type() == l2.type()) || l1.parity() != l2.parity())
        throw input_error("connected sum requires matching type and parity");
    const Integer cstar = lcm_of(l1.complexity(), l2.complexity());
    const LinkClass r1 = rescaled(l1, cstar);
    const LinkClass r2 = rescaled(l2, cstar);
    const SeifertMatrix composite =
        (l1.parity() == 1 && l1.is_knot() && l2.is_knot())
            ? csum_matrix_q1(r1.matrix(), r2.matrix(), cstar)
            : seifert_direct_sum(r1.matrix(), r2.matrix());
    return link_delta(LinkClass(l1.type(), cstar, composite), theta);
}

long satellite_delta(const LinkClass& j, const LinkClass& companion, long r, const Angle& theta) {
    if (!j.is_knot() || !companion.is_knot())
        throw input_error("satellite construction requires knots");
    if (j.parity() != companion.parity())
        throw input_error("satellite construction requires matching parity");
    if (r == 0)
        return link_delta(j, theta);
    const Integer cstar = lcm_of(j.complexity(), companion.complexity());
    const LinkClass pattern = rescaled(j, cstar);
    const LinkClass wrapped = rescaled(companion, cstar);
    const SeifertMatrix composite = seifert_direct_sum(
        pattern.matrix(), reparam_matrix(wrapped.matrix(), SignTuple::uniform(r)));
    const long left = link_delta(LinkClass(j.type(), cstar, composite), theta);
    const Angle base_angle = angle_over_complexity(theta, cstar);
    const long right = link_delta(pattern, theta) +
                       (r > 0 ? 1 : -1) * delta_reparametrized(wrapped.profile(), r, base_angle);
    if (left != right)
        throw precondition_error("satellite formula verification failed");
    return left;
}

bool kawauchi_torsion_test(const LinkClass& k) {
    if (!k.is_knot())
        throw input_error("the torsion test applies to knots");
    return k.profile().has_zero_jump_function();
}

LinkClass period_knot(const SeifertMatrix& base, long k, const Integer& n) {
    if (n == 0)
        throw input_error("the period construction requires a nonzero framing");
    SeifertMatrix m = reparam_matrix(base, SignTuple::uniform(k));
    const long pad = to_long(abs(n), "framing is too large") - 1;
    if (base.parity() > 0 && pad > 0)
        m = seifert_direct_sum(m, SeifertMatrix(RationalMatrix(pad, pad), 1));
    return LinkClass(TypeVector({Integer(1)}), n, m);
}

namespace {

SeifertMatrix family_base(int parity) {
    if (parity == 1) {
        RationalMatrix a(2, 2);
        a.at(0, 0) = 1;
        a.at(0, 1) = 1;
        a.at(1, 1) = 1;
        return SeifertMatrix(std::move(a), 1);
    }
    const int rows[4][4] = {{1, 1, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 1}, {0, 0, 0, 1}};
    RationalMatrix a(4, 4);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j)
            a.at(i, j) = rows[i][j];
    return SeifertMatrix(std::move(a), -1);
}

} // namespace

long IndependentFamily::combination_delta(const std::vector<Integer>& a,
                                          const Rational& theta_pi) const {
    if (static_cast<long>(a.size()) != static_cast<long>(primes_.size()))
        throw input_error("coefficient vector length does not match the family");
    long total = 0;
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        if (a[i] == 0)
            continue;
        const Rational scaled = theta_pi * make_rational(primes_[i], Integer(7));
        total += to_long(a[i], "family coefficient is too large") * multiplicity_ *
                 base_profile_->delta_at(Angle::rational_pi(scaled));
    }
    return total;
}

std::vector<FamilyCheck> IndependentFamily::verification_report() const {
    const long n = parity() == 1 ? 2 : 1;
    const std::vector<Integer> ones(primes_.size(), Integer(1));
    std::vector<FamilyCheck> report;
    for (const Integer& p : primes_) {
        FamilyCheck check;
        check.prime = p;
        check.theta_pi = make_rational(Integer(7 * n), 6 * p);
        check.delta_at_theta = combination_delta(ones, check.theta_pi);
        check.delta_after_turn = combination_delta(ones, check.theta_pi + 2);
        check.passed = check.delta_at_theta != 0 && check.delta_after_turn == 0;
        report.push_back(check);
    }
    return report;
}

bool IndependentFamily::all_passed() const {
    for (const FamilyCheck& c : verification_report())
        if (!c.passed)
            return false;
    return true;
}

IndependentFamily independent_family(int parity, const std::vector<Integer>& primes,
                                     bool eightfold) {
    if (parity != 1 && parity != -1)
        throw input_error("parity must be +1 or -1");
    if (eightfold && parity != -1)
        throw input_error("the eightfold option applies to parity -1 only");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (primes[i] <= 7)
            throw input_error("family primes must be greater than 7");
        if (mpz_probab_prime_p(primes[i].get_mpz_t(), 40) == 0)
            throw input_error("family parameters must be prime");
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j])
                throw input_error("family primes must be distinct");
    }

    IndependentFamily fam;
    fam.multiplicity_ = eightfold ? 8 : 1;
    fam.primes_ = primes;
    fam.base_ = std::make_shared<const SeifertMatrix>(family_base(parity));
    fam.base_profile_ = std::make_shared<const SignatureProfile>(signature_profile(*fam.base_));
    for (const Integer& p : primes) {
        SeifertMatrix parallel = reparam_matrix(
            *fam.base_, SignTuple::uniform(to_long(p, "family prime is too large")));
        SeifertMatrix member = parallel;
        for (long copy = 1; copy < fam.multiplicity_; ++copy)
            member = seifert_direct_sum(member, parallel);
        fam.members_.push_back(LinkClass(TypeVector({Integer(1)}), Integer(7), std::move(member)));
    }
    return fam;
}

} // namespace qsig
