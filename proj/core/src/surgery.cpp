#include "qsig/surgery.hpp"

#include <utility>

#include "qsig/errors.hpp"

namespace qsig {

namespace {

Mat<Rational> to_rational(const Mat<Integer>& m) {
    Mat<Rational> r(m.rows(), m.cols());
    for (long i = 0; i < m.rows(); ++i)
        for (long j = 0; j < m.cols(); ++j)
            r.at(i, j) = Rational(m.at(i, j));
    return r;
}

// x^T inv y with the inverse already computed.
Rational pairing_defect(const Mat<Rational>& inv, const CurveClass& x, const CurveClass& y) {
    const long m = inv.rows();
    Rational total(0);
    for (long i = 0; i < m; ++i) {
        Rational row(0);
        for (long j = 0; j < m; ++j)
            row += inv.at(i, j) * Rational(y.lk_vector()[static_cast<std::size_t>(j)]);
        total += Rational(x.lk_vector()[static_cast<std::size_t>(i)]) * row;
    }
    return total;
}

Mat<Rational> inverse_or_throw(const FramedLinkDiagram& d) {
    auto inv = rational_inverse(to_rational(d.lk_matrix()));
    if (!inv)
        throw precondition_error("not a rational homology sphere");
    return *std::move(inv);
}

void require_curve_length(const CurveClass& c, long m) {
    if (c.size() != m)
        throw input_error("curve linking vector length does not match the diagram");
}

} // namespace

FramedLinkDiagram::FramedLinkDiagram(Mat<Integer> lk_matrix) : lk_(std::move(lk_matrix)) {
    if (!lk_.is_square())
        throw input_error("linking matrix must be square");
    for (long i = 0; i < lk_.rows(); ++i)
        for (long j = i + 1; j < lk_.cols(); ++j)
            if (lk_.at(i, j) != lk_.at(j, i))
                throw input_error("linking matrix must be symmetric");
}

bool FramedLinkDiagram::is_rational_homology_sphere() const {
    return integer_determinant(lk_) != 0;
}

TypeVector::TypeVector(std::vector<Integer> tau) : tau_(std::move(tau)) {
    if (tau_.empty())
        throw input_error("type vector must be nonempty");
    Integer g(0);
    for (const Integer& t : tau_) {
        if (t == 0)
            throw input_error("type vector entries must be nonzero");
        g = gcd_of(g, t);
    }
    if (g != 1)
        throw input_error("type vector entries must be coprime as a tuple");
}

TypeVector TypeVector::negated() const {
    std::vector<Integer> t;
    t.reserve(tau_.size());
    for (const Integer& w : tau_)
        t.push_back(-w);
    return TypeVector(std::move(t));
}

Rational lk_sigma(const FramedLinkDiagram& d, const CurveClass& x, const CurveClass& y,
                  const Rational& lk_s3) {
    require_curve_length(x, d.components());
    require_curve_length(y, d.components());
    return lk_s3 - pairing_defect(inverse_or_throw(d), x, y);
}

Mat<Rational> induced_linking_matrix(const FramedLinkDiagram& d,
                                     const std::vector<CurveClass>& curves,
                                     const Mat<Rational>& s3_lk) {
    const long n = static_cast<long>(curves.size());
    if (s3_lk.rows() != n || s3_lk.cols() != n)
        throw input_error("linking data dimension does not match the number of curves");
    for (const CurveClass& c : curves)
        require_curve_length(c, d.components());
    const Mat<Rational> inv = inverse_or_throw(d);
    Mat<Rational> out(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            out.at(i, j) = s3_lk.at(i, j) -
                           pairing_defect(inv, curves[static_cast<std::size_t>(i)],
                                          curves[static_cast<std::size_t>(j)]);
    return out;
}

namespace {

void require_type_shape(const Mat<Rational>& a_sigma, const TypeVector& tau) {
    if (!a_sigma.is_square())
        throw input_error("linking matrix must be square");
    if (a_sigma.rows() != tau.size())
        throw input_error("type vector length does not match the matrix dimension");
}

// (1/tau_i) sum_j a_ij tau_j for each i.
std::vector<Rational> framing_candidates(const Mat<Rational>& a_sigma, const TypeVector& tau) {
    const long m = tau.size();
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(m));
    for (long i = 0; i < m; ++i) {
        Rational s(0);
        for (long j = 0; j < m; ++j)
            s += a_sigma.at(i, j) * Rational(tau.entries()[static_cast<std::size_t>(j)]);
        out.push_back(s / Rational(tau.entries()[static_cast<std::size_t>(i)]));
    }
    return out;
}

} // namespace

bool admits_type(const Mat<Rational>& a_sigma, const TypeVector& tau) {
    require_type_shape(a_sigma, tau);
    for (const Rational& c : framing_candidates(a_sigma, tau))
        if (denominator(c) != 1)
            return false;
    return true;
}

std::optional<std::vector<Integer>> framing_for_type(const Mat<Rational>& a_sigma,
                                                     const TypeVector& tau) {
    require_type_shape(a_sigma, tau);
    std::vector<Integer> d;
    for (const Rational& c : framing_candidates(a_sigma, tau)) {
        if (denominator(c) != 1)
            return std::nullopt;
        d.push_back(-numerator(c));
    }
    return d;
}

Realization realize_linking_matrix(const Mat<Rational>& a) {
    if (!a.is_square())
        throw input_error("linking matrix must be square");
    const long m = a.rows();
    for (long i = 0; i < m; ++i)
        for (long j = i + 1; j < m; ++j)
            if (a.at(i, j) != a.at(j, i))
                throw input_error("linking matrix must be symmetric");

    // Symmetric congruence diagonalization, A = Q W Q^T throughout.  Row and
    // column operations are applied to W in matching pairs; Q absorbs the
    // inverse column operation each time.  The pivot rule matches the exact
    // signature routine: widest diagonal entry first, ties to the lowest
    // index, and an all-zero diagonal repaired from the first nonzero
    // off-diagonal entry in row-major order.
    Mat<Rational> w = a;
    Mat<Rational> q = Mat<Rational>::identity(m);

    const auto add_row_col = [&](long i, long j, const Rational& f) {
        // row_i += f row_j and col_i += f col_j on W; Q gets col_j -= f col_i.
        for (long t = 0; t < m; ++t)
            w.at(i, t) += f * w.at(j, t);
        for (long t = 0; t < m; ++t)
            w.at(t, i) += f * w.at(t, j);
        for (long t = 0; t < m; ++t)
            q.at(t, j) -= f * q.at(t, i);
    };
    const auto swap_row_col = [&](long i, long j) {
        for (long t = 0; t < m; ++t)
            std::swap(w.at(i, t), w.at(j, t));
        for (long t = 0; t < m; ++t)
            std::swap(w.at(t, i), w.at(t, j));
        for (long t = 0; t < m; ++t)
            std::swap(q.at(t, i), q.at(t, j));
    };

    long rank = 0;
    for (long k = 0; k < m; ++k) {
        long best = -1;
        for (long i = k; i < m; ++i)
            if (w.at(i, i) != 0 && (best < 0 || abs(w.at(i, i)) > abs(w.at(best, best))))
                best = i;
        if (best < 0) {
            long fi = -1, fj = -1;
            for (long i = k; i < m && fi < 0; ++i)
                for (long j = k; j < m; ++j)
                    if (i != j && w.at(i, j) != 0) {
                        fi = i;
                        fj = j;
                        break;
                    }
            if (fi < 0)
                break; // active block is zero; the rest of the diagonal stays zero
            add_row_col(fi, fj, Rational(1));
            best = fi;
        }
        if (best != k)
            swap_row_col(k, best);
        const Rational pivot = w.at(k, k);
        for (long i = k + 1; i < m; ++i)
            if (w.at(i, k) != 0)
                add_row_col(i, k, -(w.at(i, k) / pivot));
        ++rank;
    }

    // A = P^T [D 0; 0 0] P with P = Q^T, so the first `rank` rows of P are the
    // first `rank` columns of Q.  Choose n as the least common denominator of
    // those rows together with D, then enlarge it once so that n^2 D^{-1} has
    // integer entries as well.
    Integer n(1);
    for (long j = 0; j < rank; ++j)
        for (long i = 0; i < m; ++i)
            n = lcm_of(n, denominator(q.at(i, j)));
    for (long k = 0; k < rank; ++k)
        n = lcm_of(n, denominator(w.at(k, k)));
    Integer stretch(1);
    for (long k = 0; k < rank; ++k) {
        const Integer p = abs(numerator(w.at(k, k)));
        stretch = lcm_of(stretch, p / gcd_of(p, n * n * denominator(w.at(k, k))));
    }
    n *= stretch;

    Realization r;
    r.b = Mat<Integer>(rank, m);
    for (long i = 0; i < rank; ++i)
        for (long j = 0; j < m; ++j)
            r.b.at(i, j) = numerator(Rational(n) * q.at(j, i));
    r.v = Mat<Integer>(rank, rank);
    for (long k = 0; k < rank; ++k) {
        const Rational vkk = Rational(n) * Rational(n) / w.at(k, k);
        r.v.at(k, k) = numerator(vkk);
    }
    return r;
}

} // namespace qsig
