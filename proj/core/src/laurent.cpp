#include "qsig/laurent.hpp"

#include <map>
#include <sstream>

namespace qsig {

void LaurentPoly::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero())
        ++lead;
    if (lead == c_.size()) {
        c_.clear();
        min_ = 0;
        return;
    }
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        min_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

LaurentPoly LaurentPoly::monomial(GaussianRational a, long exp) {
    if (a.is_zero())
        return {};
    return LaurentPoly(exp, {std::move(a)});
}

LaurentPoly LaurentPoly::from_integer_poly(const IntegerPoly& p) {
    std::vector<GaussianRational> c(p.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = GaussianRational(Rational(p.coeffs()[k]));
    return LaurentPoly(0, std::move(c));
}

long LaurentPoly::lowest() const {
    if (is_zero())
        throw precondition_error("exponent range of the zero Laurent polynomial");
    return min_;
}

long LaurentPoly::highest() const {
    if (is_zero())
        throw precondition_error("exponent range of the zero Laurent polynomial");
    return min_ + static_cast<long>(c_.size()) - 1;
}

GaussianRational LaurentPoly::coefficient(long exp) const {
    long k = exp - min_;
    if (k < 0 || k >= static_cast<long>(c_.size()))
        return {};
    return c_[static_cast<std::size_t>(k)];
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero())
        return o;
    if (o.is_zero())
        return *this;
    long lo = std::min(min_, o.min_);
    long hi = std::max(highest(), o.highest());
    std::vector<GaussianRational> c(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e)
        c[static_cast<std::size_t>(e - lo)] = coefficient(e) + o.coefficient(e);
    return LaurentPoly(lo, std::move(c));
}

LaurentPoly LaurentPoly::operator-() const {
    std::vector<GaussianRational> c(c_.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = -c_[k];
    return LaurentPoly(min_, std::move(c));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (is_zero() || o.is_zero())
        return {};
    std::vector<GaussianRational> c(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (c_[a].is_zero())
            continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b)
            c[a + b] += c_[a] * o.c_[b];
    }
    return LaurentPoly(min_ + o.min_, std::move(c));
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& s) const {
    std::vector<GaussianRational> c(c_.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = c_[k] * s;
    return LaurentPoly(min_, std::move(c));
}

LaurentPoly LaurentPoly::bar() const {
    std::vector<GaussianRational> c(c_.rbegin(), c_.rend());
    for (GaussianRational& z : c)
        z = z.conj();
    return LaurentPoly(-(min_ + static_cast<long>(c_.size()) - 1), std::move(c));
}

LaurentPoly LaurentPoly::substitute_power(long k) const {
    if (is_zero())
        return {};
    if (k == 0) {
        GaussianRational s;
        for (const GaussianRational& z : c_)
            s += z;
        return constant(s);
    }
    std::map<long, GaussianRational> terms;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (!c_[j].is_zero())
            terms[(min_ + static_cast<long>(j)) * k] = c_[j];
    long lo = terms.begin()->first;
    long hi = terms.rbegin()->first;
    std::vector<GaussianRational> c(static_cast<std::size_t>(hi - lo + 1));
    for (auto& [e, z] : terms)
        c[static_cast<std::size_t>(e - lo)] = std::move(z);
    return LaurentPoly(lo, std::move(c));
}

GaussianRational LaurentPoly::eval(const GaussianRational& t) const {
    if (is_zero())
        return {};
    if (t.is_zero())
        throw precondition_error("Laurent polynomial evaluated at zero");
    // Horner on the plain part, then one division by t^{-min} if needed.
    GaussianRational acc;
    for (std::size_t k = c_.size(); k-- > 0;)
        acc = acc * t + c_[k];
    if (min_ > 0) {
        GaussianRational p(1);
        for (long j = 0; j < min_; ++j)
            p *= t;
        return acc * p;
    }
    GaussianRational p(1);
    for (long j = 0; j < -min_; ++j)
        p *= t;
    return acc / p;
}

std::string LaurentPoly::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (long e = lowest(); e <= highest(); ++e) {
        GaussianRational a = coefficient(e);
        if (a.is_zero())
            continue;
        std::string body;
        bool negative_real = a.is_real() && sgn(a.re) < 0;
        GaussianRational mag = negative_real ? -a : a;
        if (!mag.is_real())
            body = "(" + qsig::to_string(mag) + ")";
        else
            body = qsig::to_string(mag.re);
        std::string term;
        if (e == 0)
            term = body;
        else {
            std::string power = var + (e == 1 ? "" : "^" + std::to_string(e));
            term = (body == "1") ? power : body + "*" + power;
        }
        if (first) {
            out << (negative_real ? "-" : "") << term;
            first = false;
        } else {
            out << (negative_real ? " - " : " + ") << term;
        }
    }
    return out.str();
}

// ---------------------------------------------------------- circle_to_tangent

namespace {

using CPoly = std::vector<GaussianRational>; // dense, index = exponent

CPoly cpoly_mul(const CPoly& a, const CPoly& b) {
    CPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

} // namespace

IntegerPoly circle_to_tangent(const LaurentPoly& p) {
    if (p.is_zero())
        return {};
    if (!p.is_bar_symmetric())
        throw precondition_error("not real on circle");

    const long m = p.lowest(), M = p.highest();
    const long N = std::max({M, -m, 0L});

    // Powers of (1 + iu) and (1 - iu) up to 2N.
    std::vector<CPoly> plus(static_cast<std::size_t>(2 * N + 1));
    std::vector<CPoly> minus(static_cast<std::size_t>(2 * N + 1));
    plus[0] = minus[0] = {GaussianRational(1)};
    const CPoly up = {GaussianRational(1), GaussianRational::i()};
    const CPoly um = {GaussianRational(1), -GaussianRational::i()};
    for (long k = 1; k <= 2 * N; ++k) {
        plus[static_cast<std::size_t>(k)] = cpoly_mul(plus[static_cast<std::size_t>(k - 1)], up);
        minus[static_cast<std::size_t>(k)] = cpoly_mul(minus[static_cast<std::size_t>(k - 1)], um);
    }

    CPoly acc(static_cast<std::size_t>(2 * N + 1));
    for (long e = m; e <= M; ++e) {
        GaussianRational a = p.coefficient(e);
        if (a.is_zero())
            continue;
        CPoly term = cpoly_mul(plus[static_cast<std::size_t>(N + e)],
                               minus[static_cast<std::size_t>(N - e)]);
        for (std::size_t k = 0; k < term.size(); ++k)
            acc[k] += a * term[k];
    }

    std::vector<Rational> re(acc.size());
    for (std::size_t k = 0; k < acc.size(); ++k) {
        if (sgn(acc[k].im) != 0)
            throw precondition_error("not real on circle");
        re[k] = acc[k].re;
    }
    // Clear denominators by the least positive factor; positive scaling keeps
    // the sign correspondence with p on the circle.
    return RationalPoly(std::move(re)).cleared_to_integer();
}

} // namespace qsig
