#include "qsig/seifert.hpp"

#include "qsig/linalg.hpp"

namespace qsig {

SeifertMatrix::SeifertMatrix(RationalMatrix entries, int parity)
    : entries_(std::move(entries)), parity_(parity) {
    if (!entries_.is_square())
        throw input_error("Seifert matrix must be square");
    if (parity_ != 1 && parity_ != -1)
        throw input_error("parity must be +1 or -1");
}

bool SeifertMatrix::is_zero() const {
    for (long i = 0; i < dimension(); ++i)
        for (long j = 0; j < dimension(); ++j)
            if (sign_of(entries_.at(i, j)) != 0)
                return false;
    return true;
}

SignTuple::SignTuple(std::vector<int> signs) : signs_(std::move(signs)) {
    if (signs_.empty())
        throw input_error("sign tuple must be nonempty");
    for (int s : signs_)
        if (s != 1 && s != -1)
            throw input_error("sign tuple entries must be +1 or -1");
}

SignTuple SignTuple::uniform(long r) {
    if (r == 0)
        throw input_error("sign tuple must be nonempty");
    return SignTuple(std::vector<int>(static_cast<std::size_t>(r < 0 ? -r : r), r < 0 ? -1 : 1));
}

long SignTuple::n_alpha() const {
    long n = 0;
    for (int s : signs_)
        n += s;
    return n;
}

SignTuple SignTuple::negated() const {
    std::vector<int> out = signs_;
    for (int& s : out)
        s = -s;
    return SignTuple(std::move(out));
}

SeifertMatrix eps_transpose(const SeifertMatrix& a) {
    RationalMatrix t = a.entries().transpose();
    if (a.parity() < 0)
        t = t.negated();
    return SeifertMatrix(std::move(t), a.parity());
}

SeifertMatrix reparam_matrix(const SeifertMatrix& a, const SignTuple& alpha) {
    const long r = alpha.size();
    const long d = a.dimension();
    const RationalMatrix& up = a.entries();
    const RationalMatrix down = eps_transpose(a).entries();
    RationalMatrix out(r * d, r * d);
    for (long bm = 0; bm < r; ++bm)
        for (long bn = 0; bn < r; ++bn) {
            const RationalMatrix* block;
            if (bm < bn)
                block = &up;
            else if (bm > bn)
                block = &down;
            else
                block = alpha.signs()[static_cast<std::size_t>(bm)] > 0 ? &up : &down;
            for (long i = 0; i < d; ++i)
                for (long j = 0; j < d; ++j)
                    out.at(bm * d + i, bn * d + j) = block->at(i, j);
        }
    return SeifertMatrix(std::move(out), a.parity());
}

SeifertMatrix seifert_direct_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
    if (a.parity() != b.parity())
        throw input_error("block sum requires matching parity");
    return SeifertMatrix(a.entries().direct_sum(b.entries()), a.parity());
}

long eta(long a, const Angle& phi) {
    if (a == 0)
        return 0;
    if (a < 0)
        return eta(-a, phi.negated());
    if (phi.canonical_is_zero())
        return 0;
    // Smallest k in 1..a with phi <= 2 pi k / a.  The canonical angle is
    // strictly below 2 pi, so k = a always qualifies and the interior grid
    // points are the only possible equalities.
    long lo = 1, hi = a;
    while (lo < hi) {
        const long mid = lo + (hi - lo) / 2;
        Angle grid = Angle::rational_pi(make_rational(Integer(2 * mid), Integer(a)));
        if (compare_canonical(phi, grid) <= 0)
            hi = mid;
        else
            lo = mid + 1;
    }
    if (lo < a && equal_canonical(phi, Angle::rational_pi(make_rational(Integer(2 * lo), Integer(a)))))
        return a - 2 * lo;
    return a + 1 - 2 * lo;
}

AlexanderPolynomial alexander(const SeifertMatrix& a) {
    const long n = a.dimension();
    const Integer l = matrix_common_denominator(a.entries());
    // det(tA - eps A^T) = det(tA' - eps A'^T) / l^n with A' = l A integral.
    Mat<IntegerPoly> p(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Rational up = a.entries().at(i, j) * Rational(l);
            Rational dn = a.entries().at(j, i) * Rational(l);
            Integer c1 = numerator(up);
            Integer c0 = a.parity() > 0 ? Integer(-numerator(dn)) : numerator(dn);
            p.at(i, j) = IntegerPoly({std::move(c0), std::move(c1)});
        }
    IntegerPoly det = poly_matrix_determinant(p);
    Integer ln = 1;
    for (long i = 0; i < n; ++i)
        ln *= l;
    return AlexanderPolynomial(
        LaurentPoly::from_integer_poly(det).scaled(GaussianRational(make_rational(Integer(1), ln))));
}

AlexanderPolynomial AlexanderPolynomial::normalized() const {
    if (value_.is_zero())
        return *this;
    // Divide by the unit c * t^m where m is the lowest exponent and c the
    // positive rational making the coefficients coprime integers.
    const long m = value_.lowest();
    std::vector<Rational> coeffs;
    for (long e = m; e <= value_.highest(); ++e)
        coeffs.push_back(value_.coefficient(e).re);
    IntegerPoly shifted = RationalPoly(std::move(coeffs)).cleared_to_integer();
    Integer c = shifted.content();
    if (sgn(shifted.coeff(0)) < 0)
        c = -c;
    std::vector<GaussianRational> out;
    for (long k = 0; k <= shifted.degree(); ++k)
        out.emplace_back(make_rational(shifted.coeff(k), c));
    return AlexanderPolynomial(LaurentPoly(0, std::move(out)));
}

bool AlexanderPolynomial::equal_up_to_unit(const AlexanderPolynomial& other) const {
    return normalized().value() == other.normalized().value();
}

AlexanderPolynomial AlexanderPolynomial::substituted(long k) const {
    return AlexanderPolynomial(value_.substitute_power(k));
}

std::string AlexanderPolynomial::to_string(const std::string& var) const {
    return value_.to_string(var);
}

RationalMatrix intersection_form(const SeifertMatrix& a) {
    return a.entries() - eps_transpose(a).entries();
}

bool intersection_form_nonsingular(const SeifertMatrix& a) {
    return sign_of(rational_determinant(intersection_form(a))) != 0;
}

} // namespace qsig
