#pragma once

#include <vector>

#include "qsig/errors.hpp"

namespace qsig {

// Dense row-major matrix over an exact scalar type.  Deliberately tiny: the
// matrices in this library are Seifert-sized (a few dozen rows at the very
// most), so there is nothing to gain from a linear-algebra dependency that
// cannot run on mpq_class entries anyway.
template <class T>
class Mat {
public:
    Mat() = default;
    Mat(long rows, long cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows * cols)) {
        if (rows < 0 || cols < 0)
            throw input_error("matrix with negative dimension");
    }

    static Mat identity(long n) {
        Mat m(n, n);
        for (long i = 0; i < n; ++i)
            m.at(i, i) = T(1);
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(long i, long j) { return v_[static_cast<std::size_t>(i * cols_ + j)]; }
    const T& at(long i, long j) const { return v_[static_cast<std::size_t>(i * cols_ + j)]; }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < v_.size(); ++k)
            r.v_[k] = v_[k] + o.v_[k];
        return r;
    }

    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < v_.size(); ++k)
            r.v_[k] = v_[k] - o.v_[k];
        return r;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_)
            throw input_error("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (long i = 0; i < rows_; ++i)
            for (long k = 0; k < cols_; ++k) {
                const T& a = at(i, k);
                for (long j = 0; j < o.cols_; ++j)
                    r.at(i, j) = r.at(i, j) + a * o.at(k, j);
            }
        return r;
    }

    Mat scaled(const T& s) const {
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < v_.size(); ++k)
            r.v_[k] = v_[k] * s;
        return r;
    }

    Mat negated() const {
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < v_.size(); ++k)
            r.v_[k] = -v_[k];
        return r;
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && v_ == o.v_;
    }

    // Block-diagonal join: this ⊕ other.
    Mat direct_sum(const Mat& o) const {
        Mat r(rows_ + o.rows_, cols_ + o.cols_);
        for (long i = 0; i < rows_; ++i)
            for (long j = 0; j < cols_; ++j)
                r.at(i, j) = at(i, j);
        for (long i = 0; i < o.rows_; ++i)
            for (long j = 0; j < o.cols_; ++j)
                r.at(rows_ + i, cols_ + j) = o.at(i, j);
        return r;
    }

private:
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw input_error("matrix shape mismatch");
    }

    long rows_ = 0, cols_ = 0;
    std::vector<T> v_;
};

} // namespace qsig
