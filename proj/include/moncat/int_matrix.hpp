#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace moncat {

// Exact arbitrary-precision integer. Expression templates are disabled so the
// type has plain value semantics (auto, concepts, std containers all behave).
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

/// Dense integer matrix, row-major storage.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<Int>> rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows.begin()->size();
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw std::invalid_argument("IntMatrix: ragged rows");
            std::size_t j = 0;
            for (const auto& v : row) m.at(i, j++) = v;
            ++i;
        }
        return m;
    }

    static IntMatrix column(const std::vector<Int>& entries) {
        IntMatrix m(entries.size(), 1);
        for (std::size_t i = 0; i < entries.size(); ++i) m.at(i, 0) = entries[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const IntMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& v : a_)
            if (v != 0) return false;
        return true;
    }

    IntMatrix operator*(const IntMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
        IntMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& v = at(i, k);
                if (v == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

    IntMatrix operator+(const IntMatrix& o) const {
        require_same_shape(o, "sum");
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }

    IntMatrix operator-(const IntMatrix& o) const {
        require_same_shape(o, "difference");
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }

    IntMatrix operator-() const {
        IntMatrix r(rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    IntMatrix transpose() const {
        IntMatrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    IntMatrix col(std::size_t j) const {
        IntMatrix r(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) r.at(i, 0) = at(i, j);
        return r;
    }

    void set_col(std::size_t j, const IntMatrix& c) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = c.at(i, 0);
    }

    /// Columns of `this` followed by columns of `o`.
    IntMatrix hstack(const IntMatrix& o) const {
        if (rows_ != o.rows_) throw std::invalid_argument("IntMatrix: hstack row mismatch");
        IntMatrix r(rows_, cols_ + o.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
        }
        return r;
    }

    IntMatrix vstack(const IntMatrix& o) const {
        if (cols_ != o.cols_) throw std::invalid_argument("IntMatrix: vstack column mismatch");
        IntMatrix r(rows_ + o.rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t i = 0; i < o.rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
        return r;
    }

    static IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r(a.rows_ + b.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
        return r;
    }

    /// Kronecker product; block (i,j) of the result is a(i,j) * b.
    static IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
        IntMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) {
                const Int& v = a.at(i, j);
                if (v == 0) continue;
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        r.at(i * b.rows_ + k, j * b.cols_ + l) = v * b.at(k, l);
            }
        return r;
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
    }
    /// row i += f * row j
    void add_row_multiple(std::size_t i, std::size_t j, const Int& f) {
        if (f == 0) return;
        for (std::size_t k = 0; k < cols_; ++k) at(i, k) += f * at(j, k);
    }
    /// col i += f * col j
    void add_col_multiple(std::size_t i, std::size_t j, const Int& f) {
        if (f == 0) return;
        for (std::size_t k = 0; k < rows_; ++k) at(k, i) += f * at(k, j);
    }
    void negate_row(std::size_t i) {
        for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
    }
    void negate_col(std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
    }

    /// Exact determinant by Bareiss fraction-free elimination (square only).
    Int determinant() const {
        if (rows_ != cols_) throw std::invalid_argument("IntMatrix: determinant of non-square");
        const std::size_t n = rows_;
        if (n == 0) return 1;
        IntMatrix m = *this;
        Int sign = 1, prev = 1;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            if (m.at(k, k) == 0) {
                std::size_t p = k + 1;
                while (p < n && m.at(p, k) == 0) ++p;
                if (p == n) return 0;
                m.swap_rows(k, p);
                sign = -sign;
            }
            for (std::size_t i = k + 1; i < n; ++i)
                for (std::size_t j = k + 1; j < n; ++j) {
                    Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    m.at(i, j) = t / prev;  // divides exactly (Bareiss invariant)
                }
            prev = m.at(k, k);
        }
        return sign * m.at(n - 1, n - 1);
    }

    std::string to_string() const {
        std::ostringstream os;
        os << *this;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i == 0 ? "[" : " [");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j == 0 ? "" : " ") << m.at(i, j);
            os << "]" << (i + 1 == m.rows_ ? "" : "\n");
        }
        return os << "]";
    }

private:
    void require_same_shape(const IntMatrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("IntMatrix: shape mismatch in ") + what);
    }

    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

}  // namespace moncat
