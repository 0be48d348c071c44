#include "qsig/linalg.hpp"

namespace qsig {

Integer integer_determinant(const Mat<Integer>& m) {
    if (!m.is_square())
        throw input_error("determinant of a non-square matrix");
    const long n = m.rows();
    if (n == 0)
        return 1;
    Mat<Integer> w = m;
    Integer prev = 1;
    int swap_sign = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (sgn(w.at(k, k)) == 0) {
            long r = -1;
            for (long i = k + 1; i < n; ++i)
                if (sgn(w.at(i, k)) != 0) { r = i; break; }
            if (r < 0)
                return 0;
            for (long j = k; j < n; ++j)
                std::swap(w.at(k, j), w.at(r, j));
            swap_sign = -swap_sign;
        }
        for (long i = k + 1; i < n; ++i)
            for (long j = k + 1; j < n; ++j) {
                Integer t = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return swap_sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

Integer matrix_common_denominator(const Mat<Rational>& m) {
    Integer l = 1;
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            l = lcm_of(l, denominator(m.at(i, j)));
    return l;
}

Rational rational_determinant(const Mat<Rational>& m) {
    if (!m.is_square())
        throw input_error("determinant of a non-square matrix");
    const long n = m.rows();
    const Integer l = matrix_common_denominator(m);
    Mat<Integer> w(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Rational s = m.at(i, j) * Rational(l);
            w.at(i, j) = numerator(s);
        }
    Rational scale(Integer(1), l);
    Rational out(integer_determinant(w));
    for (long i = 0; i < n; ++i)
        out *= scale;
    return out;
}

IntegerPoly poly_matrix_determinant(const Mat<IntegerPoly>& m) {
    if (!m.is_square())
        throw input_error("determinant of a non-square matrix");
    const long n = m.rows();
    if (n == 0)
        return IntegerPoly::constant(1);
    long bound = 0;
    for (long i = 0; i < n; ++i) {
        long row_max = 0;
        for (long j = 0; j < n; ++j)
            row_max = std::max(row_max, std::max(m.at(i, j).degree(), 0L));
        bound += row_max;
    }
    // Values det(m(t)) at t = 0..bound.
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(bound) + 1);
    for (long t = 0; t <= bound; ++t) {
        Mat<Integer> w(n, n);
        for (long i = 0; i < n; ++i)
            for (long j = 0; j < n; ++j)
                w.at(i, j) = m.at(i, j).eval(Integer(t));
        values.emplace_back(integer_determinant(w));
    }
    // Newton forward interpolation on the nodes 0..bound.
    std::vector<Rational> diffs = values; // diffs[k] becomes the k-th divided difference
    for (long k = 1; k <= bound; ++k)
        for (long i = bound; i >= k; --i) {
            diffs[static_cast<std::size_t>(i)] =
                (diffs[static_cast<std::size_t>(i)] - diffs[static_cast<std::size_t>(i - 1)]) /
                Rational(k);
        }
    RationalPoly acc;
    RationalPoly basis = RationalPoly::constant(Rational(1));
    for (long k = 0; k <= bound; ++k) {
        acc = acc + basis.scaled(diffs[static_cast<std::size_t>(k)]);
        basis = basis * RationalPoly({Rational(-k), Rational(1)});
    }
    // An integer matrix determinant is an integer for every integer t, and the
    // nodes 0..bound with bound >= degree make the interpolant the determinant
    // itself; its coefficients are integers because the entries are.
    std::vector<Integer> out(acc.coeffs().size());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const Rational& c = acc.coeff(static_cast<long>(k));
        if (denominator(c) != 1)
            throw precondition_error("polynomial determinant interpolation was not integral");
        out[k] = numerator(c);
    }
    return IntegerPoly(std::move(out));
}

std::optional<Mat<Rational>> rational_inverse(const Mat<Rational>& m) {
    if (!m.is_square())
        throw input_error("inverse of a non-square matrix");
    const long n = m.rows();
    Mat<Rational> w = m;
    Mat<Rational> inv = Mat<Rational>::identity(n);
    for (long k = 0; k < n; ++k) {
        long p = -1;
        for (long i = k; i < n; ++i)
            if (sign_of(w.at(i, k)) != 0) { p = i; break; }
        if (p < 0)
            return std::nullopt;
        if (p != k)
            for (long j = 0; j < n; ++j) {
                std::swap(w.at(k, j), w.at(p, j));
                std::swap(inv.at(k, j), inv.at(p, j));
            }
        Rational piv = w.at(k, k);
        for (long j = 0; j < n; ++j) {
            w.at(k, j) /= piv;
            inv.at(k, j) /= piv;
        }
        for (long i = 0; i < n; ++i) {
            if (i == k || sign_of(w.at(i, k)) == 0)
                continue;
            Rational f = w.at(i, k);
            for (long j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

} // namespace qsig
