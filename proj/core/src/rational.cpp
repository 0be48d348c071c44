#include "qsig/rational.hpp"

#include <cctype>

namespace qsig {

Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0)
        throw input_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer lcm_of(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd_of(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer common_denominator(std::span<const Rational> xs) {
    Integer l = 1;
    for (const Rational& x : xs)
        l = lcm_of(l, denominator(x));
    return l;
}

std::optional<Rational> parse_rational(std::string_view text) {
    // Shape check up front: mpq_set_str accepts some forms (whitespace, hex)
    // that we do not want to silently admit in data files.
    if (text.empty())
        return std::nullopt;
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+')
        ++i;
    bool digits = false, slash = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = true;
        } else if (c == '/' && digits && !slash) {
            slash = true;
            digits = false; // require digits after the slash too
        } else {
            return std::nullopt;
        }
    }
    if (!digits)
        return std::nullopt;

    Rational r;
    if (mpq_set_str(r.get_mpq_t(), std::string(text).c_str(), 10) != 0)
        return std::nullopt;
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw input_error("rational with zero denominator: '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& x) { return x.get_str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

} // namespace qsig
