#pragma once

#include <cassert>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace collapse {

using cplx = std::complex<double>;

// Dense row-major complex matrix. Small and self-contained; sized for the
// spectral truncations used here (dimension up to a few thousand).
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static CMatrix identity(int n) {
        CMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const cplx& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    CMatrix operator+(const CMatrix& o) const {
        check_same(o);
        CMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    CMatrix operator-(const CMatrix& o) const {
        check_same(o);
        CMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    CMatrix& operator+=(const CMatrix& o) {
        check_same(o);
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    CMatrix operator*(const CMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("CMatrix: shape mismatch in product");
        CMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                const cplx aik = (*this)(i, k);
                if (aik == cplx(0.0)) continue;
                const cplx* orow = &o.a_[static_cast<size_t>(k) * o.cols_];
                cplx* rrow = &r.a_[static_cast<size_t>(i) * o.cols_];
                for (int j = 0; j < o.cols_; ++j) rrow[j] += aik * orow[j];
            }
        }
        return r;
    }
    CMatrix operator*(cplx s) const {
        CMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
        return r;
    }
    friend CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }

    CMatrix adjoint() const {
        CMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
        return r;
    }

    CMatrix kron(const CMatrix& o) const {
        CMatrix r(rows_ * o.rows_, cols_ * o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const cplx v = (*this)(i, j);
                if (v == cplx(0.0)) continue;
                for (int p = 0; p < o.rows_; ++p)
                    for (int q = 0; q < o.cols_; ++q)
                        r(i * o.rows_ + p, j * o.cols_ + q) = v * o(p, q);
            }
        return r;
    }

    CMatrix block(int i0, int j0, int nr, int nc) const {
        CMatrix r(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) r(i, j) = (*this)(i0 + i, j0 + j);
        return r;
    }
    void set_block(int i0, int j0, const CMatrix& b) {
        for (int i = 0; i < b.rows_; ++i)
            for (int j = 0; j < b.cols_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : a_) m = std::max(m, std::abs(v));
        return m;
    }
    double max_abs_diff(const CMatrix& o) const {
        check_same(o);
        double m = 0.0;
        for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
        return m;
    }
    double hermiticity_defect() const {
        assert(rows_ == cols_);
        double m = 0.0;
        for (int i = 0; i < rows_; ++i)
            for (int j = i; j < cols_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }
    cplx trace() const {
        cplx t = 0.0;
        for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

    // Inverse via LU with partial pivoting.
    CMatrix inverse() const {
        if (rows_ != cols_) throw std::invalid_argument("CMatrix: inverse of non-square");
        const int n = rows_;
        CMatrix lu = *this;
        CMatrix inv = identity(n);
        std::vector<int> piv(n);
        for (int i = 0; i < n; ++i) piv[i] = i;
        for (int c = 0; c < n; ++c) {
            int p = c;
            double best = std::abs(lu(c, c));
            for (int r = c + 1; r < n; ++r)
                if (std::abs(lu(r, c)) > best) { best = std::abs(lu(r, c)); p = r; }
            if (best == 0.0) throw std::runtime_error("CMatrix: singular matrix in inverse()");
            if (p != c)
                for (int j = 0; j < n; ++j) {
                    std::swap(lu(c, j), lu(p, j));
                    std::swap(inv(c, j), inv(p, j));
                }
            const cplx d = lu(c, c);
            for (int r = c + 1; r < n; ++r) {
                const cplx f = lu(r, c) / d;
                if (f == cplx(0.0)) continue;
                for (int j = c; j < n; ++j) lu(r, j) -= f * lu(c, j);
                for (int j = 0; j < n; ++j) inv(r, j) -= f * inv(c, j);
            }
        }
        for (int c = n - 1; c >= 0; --c) {
            const cplx d = lu(c, c);
            for (int j = 0; j < n; ++j) inv(c, j) /= d;
            for (int r = 0; r < c; ++r) {
                const cplx f = lu(r, c);
                if (f == cplx(0.0)) continue;
                for (int j = 0; j < n; ++j) inv(r, j) -= f * inv(c, j);
            }
        }
        return inv;
    }

    const std::vector<cplx>& data() const { return a_; }

private:
    void check_same(const CMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("CMatrix: shape mismatch");
    }
    int rows_, cols_;
    std::vector<cplx> a_;
};

}  // namespace collapse
