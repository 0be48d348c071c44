#include "qsig/polynomial.hpp"

#include <sstream>

namespace qsig {

// ---------------------------------------------------------------- IntegerPoly

void IntegerPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

IntegerPoly IntegerPoly::power(long k) {
    if (k < 0)
        throw precondition_error("negative exponent for a plain polynomial");
    std::vector<Integer> c(static_cast<std::size_t>(k) + 1);
    c.back() = 1;
    return IntegerPoly(std::move(c));
}

const Integer& IntegerPoly::coeff(long k) const {
    static const Integer zero = 0;
    if (k < 0 || k >= static_cast<long>(c_.size()))
        return zero;
    return c_[static_cast<std::size_t>(k)];
}

const Integer& IntegerPoly::leading() const {
    if (c_.empty())
        throw precondition_error("leading coefficient of the zero polynomial");
    return c_.back();
}

IntegerPoly IntegerPoly::operator+(const IntegerPoly& o) const {
    std::vector<Integer> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < c_.size())
            c[k] += c_[k];
        if (k < o.c_.size())
            c[k] += o.c_[k];
    }
    return IntegerPoly(std::move(c));
}

IntegerPoly IntegerPoly::operator-(const IntegerPoly& o) const { return *this + (-o); }

IntegerPoly IntegerPoly::operator-() const {
    std::vector<Integer> c(c_.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = -c_[k];
    return IntegerPoly(std::move(c));
}

IntegerPoly IntegerPoly::operator*(const IntegerPoly& o) const {
    if (is_zero() || o.is_zero())
        return {};
    std::vector<Integer> c(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (sgn(c_[a]) == 0)
            continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b)
            c[a + b] += c_[a] * o.c_[b];
    }
    return IntegerPoly(std::move(c));
}

IntegerPoly IntegerPoly::scaled(const Integer& s) const {
    std::vector<Integer> c(c_.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = c_[k] * s;
    return IntegerPoly(std::move(c));
}

IntegerPoly IntegerPoly::derivative() const {
    if (c_.size() <= 1)
        return {};
    std::vector<Integer> c(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k)
        c[k - 1] = c_[k] * static_cast<long>(k);
    return IntegerPoly(std::move(c));
}

Integer IntegerPoly::content() const {
    Integer g = 0;
    for (const Integer& x : c_)
        g = gcd_of(g, x);
    return g;
}

IntegerPoly IntegerPoly::primitive_positive() const {
    if (is_zero())
        return {};
    Integer g = content();
    if (sgn(c_.back()) < 0)
        g = -g;
    std::vector<Integer> c(c_.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        mpz_divexact(c[k].get_mpz_t(), c_[k].get_mpz_t(), g.get_mpz_t());
    return IntegerPoly(std::move(c));
}

Integer IntegerPoly::eval(const Integer& x) const {
    Integer acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;)
        acc = acc * x + c_[k];
    return acc;
}

int IntegerPoly::sign_at(const Rational& x) const {
    if (is_zero())
        return 0;
    // Homogeneous Horner: sign of sum c_k p^k q^(d-k) equals sign of p(p/q).
    const Integer p = numerator(x), q = denominator(x);
    Integer acc = c_.back(), qk = 1;
    for (std::size_t k = c_.size() - 1; k-- > 0;) {
        qk *= q;
        acc = acc * p + c_[k] * qk;
    }
    return sgn(acc);
}

IntegerPoly IntegerPoly::shift(const Integer& a) const {
    // Horner on x + a, one linear multiply per coefficient.
    std::vector<Integer> acc; // coefficients of the running result
    for (std::size_t k = c_.size(); k-- > 0;) {
        acc.insert(acc.begin(), Integer(0)); // multiply by x
        for (std::size_t j = 0; j + 1 < acc.size(); ++j)
            acc[j] += a * acc[j + 1];
        acc[0] += c_[k];
    }
    return IntegerPoly(std::move(acc));
}

IntegerPoly IntegerPoly::reversed() const {
    std::vector<Integer> c(c_.rbegin(), c_.rend());
    return IntegerPoly(std::move(c));
}

IntegerPoly IntegerPoly::compose_power(long k) const {
    if (k < 1)
        throw precondition_error("compose_power wants k >= 1");
    if (is_zero())
        return {};
    std::vector<Integer> c(static_cast<std::size_t>(degree() * k) + 1);
    for (std::size_t j = 0; j < c_.size(); ++j)
        c[j * static_cast<std::size_t>(k)] = c_[j];
    return IntegerPoly(std::move(c));
}

std::string IntegerPoly::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Integer& a = c_[k];
        if (sgn(a) == 0)
            continue;
        if (!first)
            out << (sgn(a) > 0 ? " + " : " - ");
        else if (sgn(a) < 0)
            out << "-";
        Integer mag = abs(a);
        if (mag != 1 || k == 0)
            out << mag.get_str();
        if (k > 0) {
            if (mag != 1)
                out << "*";
            out << var;
            if (k > 1)
                out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

IntegerPoly compose_fraction(const IntegerPoly& p, const IntegerPoly& num, const IntegerPoly& den) {
    // den^deg(p) * p(num/den), by Horner with a running power of den.
    if (p.is_zero())
        return {};
    const long d = p.degree();
    IntegerPoly acc = IntegerPoly::constant(p.coeff(d));
    IntegerPoly dpow = IntegerPoly::constant(1);
    for (long k = d - 1; k >= 0; --k) {
        dpow = dpow * den;
        acc = acc * num + dpow.scaled(p.coeff(k));
    }
    return acc;
}

IntegerPoly pseudo_rem(const IntegerPoly& a, const IntegerPoly& b) {
    if (b.is_zero())
        throw precondition_error("pseudo-division by zero");
    if (a.degree() < b.degree())
        return a;
    IntegerPoly r = a;
    const long db = b.degree();
    const Integer& lb = b.leading();
    long scalings = a.degree() - db + 1;
    while (!r.is_zero() && r.degree() >= db) {
        const long shift = r.degree() - db;
        const Integer lr = r.leading();
        // r <- lb * r - lr * x^shift * b ; strictly lowers deg(r)
        IntegerPoly t = (b * IntegerPoly::power(shift)).scaled(lr);
        r = r.scaled(lb) - t;
        --scalings;
    }
    // The degree can drop by more than one per step, so pay any missing factors:
    // the result must be exactly lb^(deg a - deg b + 1) * a mod b.  Sturm chains
    // correct for the sign of that factor by its parity, which would otherwise
    // be unpredictable.
    if (scalings > 0 && !r.is_zero()) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(scalings));
        r = r.scaled(f);
    }
    return r;
}

IntegerPoly poly_gcd(const IntegerPoly& a, const IntegerPoly& b) {
    IntegerPoly r0 = a.primitive_positive();
    IntegerPoly r1 = b.primitive_positive();
    if (r0.is_zero())
        return r1;
    if (r1.is_zero())
        return r0;
    if (r0.degree() < r1.degree())
        std::swap(r0, r1);
    while (!r1.is_zero()) {
        IntegerPoly r2 = pseudo_rem(r0, r1).primitive_positive();
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.primitive_positive();
}

IntegerPoly squarefree_part(const IntegerPoly& p) {
    if (p.is_zero())
        return {};
    if (p.degree() == 0)
        return IntegerPoly::constant(1);
    IntegerPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0)
        return p.primitive_positive();
    // Exact quotient p / g, computed over Q and cleared back to Z.
    RationalPoly q = RationalPoly::from_integer(p).divrem(RationalPoly::from_integer(g)).quot;
    return q.cleared_to_integer().primitive_positive();
}

// ----------------------------------------------------------------- SturmChain

namespace {

// Content-free copy that keeps the sign of the leading coefficient.
IntegerPoly primitive_keep_sign(const IntegerPoly& p) {
    IntegerPoly q = p.primitive_positive();
    if (!p.is_zero() && sgn(p.leading()) < 0)
        return -q;
    return q;
}

} // namespace

SturmChain::SturmChain(const IntegerPoly& squarefree) {
    if (squarefree.is_zero())
        throw precondition_error("Sturm chain of the zero polynomial");
    chain_.push_back(primitive_keep_sign(squarefree));
    if (squarefree.degree() == 0)
        return;
    chain_.push_back(primitive_keep_sign(squarefree.derivative()));
    while (!chain_.back().is_zero() && chain_.back().degree() > 0) {
        const IntegerPoly& a = chain_[chain_.size() - 2];
        const IntegerPoly& b = chain_.back();
        IntegerPoly r = pseudo_rem(a, b);
        // prem scaled a by lc(b)^(deg a - deg b + 1); if that factor is
        // negative the remainder sign is flipped relative to a mod b, and the
        // Sturm sign convention would break.  Undo it.
        if (sgn(b.leading()) < 0 && (a.degree() - b.degree() + 1) % 2 != 0)
            r = -r;
        if (r.is_zero())
            break;
        chain_.push_back(primitive_keep_sign(-r));
    }
}

long SturmChain::variations_at(const Rational& x) const {
    long v = 0;
    int prev = 0;
    for (const IntegerPoly& p : chain_) {
        int s = p.sign_at(x);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

namespace {

long variations_at_infinity(const std::vector<IntegerPoly>& chain, int dir) {
    long v = 0;
    int prev = 0;
    for (const IntegerPoly& p : chain) {
        if (p.is_zero())
            continue;
        int s = sgn(p.leading());
        if (dir < 0 && p.degree() % 2 != 0)
            s = -s;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

} // namespace

long SturmChain::variations_at_plus_infinity() const { return variations_at_infinity(chain_, +1); }
long SturmChain::variations_at_minus_infinity() const { return variations_at_infinity(chain_, -1); }

long SturmChain::count_in(const Rational& a, const Rational& b) const {
    if (!(a < b))
        return 0;
    return variations_at(a) - variations_at(b);
}

long SturmChain::count_all() const {
    return variations_at_minus_infinity() - variations_at_plus_infinity();
}

// --------------------------------------------------------------- RationalPoly

void RationalPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0)
        c_.pop_back();
}

RationalPoly RationalPoly::power(long k) {
    if (k < 0)
        throw precondition_error("negative exponent for a plain polynomial");
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    c.back() = 1;
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::from_integer(const IntegerPoly& p) {
    std::vector<Rational> c(p.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = Rational(p.coeffs()[k]);
    return RationalPoly(std::move(c));
}

const Rational& RationalPoly::coeff(long k) const {
    static const Rational zero = 0;
    if (k < 0 || k >= static_cast<long>(c_.size()))
        return zero;
    return c_[static_cast<std::size_t>(k)];
}

const Rational& RationalPoly::leading() const {
    if (c_.empty())
        throw precondition_error("leading coefficient of the zero polynomial");
    return c_.back();
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k < c_.size())
            c[k] += c_[k];
        if (k < o.c_.size())
            c[k] += o.c_[k];
    }
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + (-o); }

RationalPoly RationalPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = -c_[k];
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero())
        return {};
    std::vector<Rational> c(c_.size() + o.c_.size() - 1);
    for (std::size_t a = 0; a < c_.size(); ++a) {
        if (sgn(c_[a]) == 0)
            continue;
        for (std::size_t b = 0; b < o.c_.size(); ++b)
            c[a + b] += c_[a] * o.c_[b];
    }
    return RationalPoly(std::move(c));
}

RationalPoly RationalPoly::scaled(const Rational& s) const {
    std::vector<Rational> c(c_.size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = c_[k] * s;
    return RationalPoly(std::move(c));
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t k = c_.size(); k-- > 0;)
        acc = acc * x + c_[k];
    return acc;
}

PolyDivRem RationalPoly::divrem(const RationalPoly& d) const {
    if (d.is_zero())
        throw precondition_error("polynomial division by zero");
    RationalPoly r = *this;
    std::vector<Rational> q;
    if (degree() >= d.degree())
        q.resize(static_cast<std::size_t>(degree() - d.degree()) + 1);
    const long dd = d.degree();
    while (!r.is_zero() && r.degree() >= dd) {
        const long shift = r.degree() - dd;
        Rational f = r.leading() / d.leading();
        q[static_cast<std::size_t>(shift)] = f;
        r = r - (d * RationalPoly::power(shift)).scaled(f);
    }
    return {RationalPoly(std::move(q)), std::move(r)};
}

IntegerPoly RationalPoly::cleared_to_integer() const {
    Integer l = common_denominator(c_);
    std::vector<Integer> c(c_.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        Rational v = c_[k] * Rational(l);
        c[k] = numerator(v);
    }
    return IntegerPoly(std::move(c));
}

std::string RationalPoly::to_string(const std::string& var) const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& a = c_[k];
        if (sgn(a) == 0)
            continue;
        if (!first)
            out << (sgn(a) > 0 ? " + " : " - ");
        else if (sgn(a) < 0)
            out << "-";
        Rational mag = abs(a);
        if (mag != 1 || k == 0)
            out << mag.get_str();
        if (k > 0) {
            if (mag != 1)
                out << "*";
            out << var;
            if (k > 1)
                out << "^" << k;
        }
        first = false;
    }
    return out.str();
}

} // namespace qsig
