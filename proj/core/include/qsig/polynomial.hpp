#pragma once

#include <vector>

#include "qsig/rational.hpp"

namespace qsig {

// Dense univariate polynomial over Z; coefficient index equals exponent.
// Invariant: no trailing zero coefficients; the zero polynomial is empty.
class IntegerPoly {
public:
    IntegerPoly() = default;
    explicit IntegerPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }
    static IntegerPoly constant(Integer v) { return IntegerPoly({std::move(v)}); }
    // x^k
    static IntegerPoly power(long k);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    const Integer& coeff(long k) const;
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& leading() const;

    IntegerPoly operator+(const IntegerPoly& o) const;
    IntegerPoly operator-(const IntegerPoly& o) const;
    IntegerPoly operator*(const IntegerPoly& o) const;
    IntegerPoly operator-() const;
    IntegerPoly scaled(const Integer& s) const;
    bool operator==(const IntegerPoly& o) const { return c_ == o.c_; }

    IntegerPoly derivative() const;

    // gcd of coefficients (non-negative; 0 for the zero polynomial).
    Integer content() const;
    // content 1, leading coefficient positive; zero stays zero.
    IntegerPoly primitive_positive() const;

    Integer eval(const Integer& x) const;
    // sign of p(a/b) for b > 0, via homogeneous evaluation -- no rationals built.
    int sign_at(const Rational& x) const;

    // p(x + a)
    IntegerPoly shift(const Integer& a) const;
    // x^deg * p(1/x)
    IntegerPoly reversed() const;
    // p(x^k), k >= 1
    IntegerPoly compose_power(long k) const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Integer> c_;
};

// den^deg(p) * p(num/den): the numerator of p applied to a rational function.
IntegerPoly compose_fraction(const IntegerPoly& p, const IntegerPoly& num, const IntegerPoly& den);

// gcd over Z[x] via the primitive PRS; result primitive with positive leading
// coefficient (gcd(0,0) = 0).
IntegerPoly poly_gcd(const IntegerPoly& a, const IntegerPoly& b);

// p / gcd(p, p'), primitive, positive leading coefficient.  Same real roots
// as p, all simple.
IntegerPoly squarefree_part(const IntegerPoly& p);

// Pseudo-remainder prem(a, b) = (lc(b)^(deg a - deg b + 1) * a) mod b, b != 0.
IntegerPoly pseudo_rem(const IntegerPoly& a, const IntegerPoly& b);

// Sturm chain of a squarefree polynomial; counts distinct real roots in
// half-open intervals (a, b].
class SturmChain {
public:
    explicit SturmChain(const IntegerPoly& squarefree);
    long variations_at(const Rational& x) const;
    long variations_at_plus_infinity() const;
    long variations_at_minus_infinity() const;
    long count_in(const Rational& a, const Rational& b) const; // roots in (a, b]
    long count_all() const;

private:
    std::vector<IntegerPoly> chain_;
};

struct PolyDivRem;

// Dense univariate polynomial over Q, same layout conventions as IntegerPoly.
class RationalPoly {
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RationalPoly constant(Rational v) { return RationalPoly({std::move(v)}); }
    static RationalPoly power(long k);
    static RationalPoly from_integer(const IntegerPoly& p);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& coeff(long k) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& leading() const;

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator-() const;
    RationalPoly scaled(const Rational& s) const;
    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

    Rational eval(const Rational& x) const;

    // Euclidean division by a nonzero divisor: *this = q * d + r, deg r < deg d.
    PolyDivRem divrem(const RationalPoly& d) const;

    // Least positive L with L * p integral, L * p returned.
    IntegerPoly cleared_to_integer() const;

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

struct PolyDivRem {
    RationalPoly quot, rem;
};

} // namespace qsig
