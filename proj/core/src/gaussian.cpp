#include "qsig/gaussian.hpp"

namespace qsig {

std::string to_string(const GaussianRational& z) {
    if (z.is_real())
        return to_string(z.re);
    std::string imag;
    if (z.im == 1)
        imag = "i";
    else if (z.im == -1)
        imag = "-i";
    else
        imag = to_string(z.im) + "i";
    if (sgn(z.re) == 0)
        return imag;
    if (sgn(z.im) > 0)
        return to_string(z.re) + "+" + imag;
    return to_string(z.re) + imag; // imag already starts with '-'
}

std::optional<GaussianRational> parse_gaussian(std::string_view text) {
    if (text.empty())
        return std::nullopt;

    auto parse_imag_magnitude = [](std::string_view t) -> std::optional<Rational> {
        // t is the part before the trailing 'i' (may be empty or just a sign).
        if (t.empty())
            return Rational(1);
        if (t == "-")
            return Rational(-1);
        if (t == "+")
            return Rational(1);
        return parse_rational(t);
    };

    if (text.back() == 'i') {
        std::string_view body = text.substr(0, text.size() - 1);
        // Split a+bi / a-bi at the last sign that is not the leading one and
        // not a sign inside "p/-q" (which parse_rational rejects anyway).
        for (std::size_t k = body.size(); k-- > 1;) {
            if (body[k] == '+' || body[k] == '-') {
                if (body[k - 1] == '/')
                    return std::nullopt;
                auto re = parse_rational(body.substr(0, k));
                auto im = parse_imag_magnitude(body.substr(k));
                if (re && im)
                    return GaussianRational(*re, *im);
                return std::nullopt;
            }
        }
        auto im = parse_imag_magnitude(body);
        if (im)
            return GaussianRational(Rational(0), *im);
        return std::nullopt;
    }

    auto re = parse_rational(text);
    if (re)
        return GaussianRational(*re);
    return std::nullopt;
}

} // namespace qsig
