#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "qsig/errors.hpp"

namespace qsig {

// GMP-backed exact scalars.  mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation, which the rest of
// the library relies on when hashing, comparing and printing.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign_of(const Integer& x) { return sgn(x); }
inline int sign_of(const Rational& x) { return sgn(x); }

// num/den as Integer copies (mpq_class has no cheap const accessors).
inline Integer numerator(const Rational& x) { return x.get_num(); }
inline Integer denominator(const Rational& x) { return x.get_den(); }

Rational make_rational(const Integer& num, const Integer& den);

inline Integer floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
    return q;
}
inline Integer ceil_of(const Rational& x) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), mpq_numref(x.get_mpq_t()), mpq_denref(x.get_mpq_t()));
    return q;
}

Integer lcm_of(const Integer& a, const Integer& b);
Integer gcd_of(const Integer& a, const Integer& b);

// Least positive integer L with L*x integral for every x in the list.
Integer common_denominator(std::span<const Rational> xs);

// "p/q" or "p", optional leading '-'.  Empty optional on any syntax problem;
// throws input_error on a zero denominator (syntactically fine, semantically not).
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

} // namespace qsig
