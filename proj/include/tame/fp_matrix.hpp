#ifndef TAME_FP_MATRIX_HPP
#define TAME_FP_MATRIX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tame/errors.hpp"

namespace tame {

// Dense matrix over the prime field F_p for small p (p < 2^15). Entries are
// kept reduced to [0, p). All operations are pure; Gaussian elimination is
// exact (no pivoting concerns over a field).
class FpMatrix {
  public:
    FpMatrix(unsigned p, unsigned rows, unsigned cols)
        : p_(p), rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0) {
        if (p < 2) throw DimensionMismatch("modulus must be >= 2");
    }

    static FpMatrix identity(unsigned p, unsigned n) {
        FpMatrix m(p, n, n);
        for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    unsigned p() const { return p_; }
    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }

    uint32_t& at(unsigned r, unsigned c) { return e_[size_t(r) * cols_ + c]; }
    uint32_t at(unsigned r, unsigned c) const { return e_[size_t(r) * cols_ + c]; }

    bool operator==(const FpMatrix& o) const {
        return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const FpMatrix& o) const { return !(*this == o); }

    FpMatrix operator*(const FpMatrix& o) const {
        check_same_field(o);
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
        FpMatrix r(p_, rows_, o.cols_);
        for (unsigned i = 0; i < rows_; ++i)
            for (unsigned k = 0; k < cols_; ++k) {
                uint64_t a = at(i, k);
                if (!a) continue;
                for (unsigned j = 0; j < o.cols_; ++j)
                    r.at(i, j) = uint32_t((r.at(i, j) + a * o.at(k, j)) % p_);
            }
        return r;
    }

    FpMatrix operator+(const FpMatrix& o) const {
        check_same_shape(o);
        FpMatrix r(p_, rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = (e_[i] + o.e_[i]) % p_;
        return r;
    }

    FpMatrix operator-(const FpMatrix& o) const {
        check_same_shape(o);
        FpMatrix r(p_, rows_, cols_);
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = (e_[i] + p_ - o.e_[i]) % p_;
        return r;
    }

    FpMatrix pow(unsigned k) const {
        if (rows_ != cols_) throw DimensionMismatch("power of non-square matrix");
        FpMatrix r = identity(p_, rows_), b = *this;
        for (; k; k >>= 1) {
            if (k & 1) r = r * b;
            if (k > 1) b = b * b;
        }
        return r;
    }

    FpMatrix transpose() const {
        FpMatrix r(p_, cols_, rows_);
        for (unsigned i = 0; i < rows_; ++i)
            for (unsigned j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    std::vector<uint32_t> apply(const std::vector<uint32_t>& v) const {
        if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape");
        std::vector<uint32_t> r(rows_, 0);
        for (unsigned i = 0; i < rows_; ++i) {
            uint64_t acc = 0;
            for (unsigned j = 0; j < cols_; ++j) acc += uint64_t(at(i, j)) * v[j];
            r[i] = uint32_t(acc % p_);
        }
        return r;
    }

    unsigned rank() const { return FpMatrix(*this).echelon(); }

    // Basis of the right kernel {x : Ax = 0}.
    std::vector<std::vector<uint32_t>> kernel() const {
        FpMatrix m(*this);
        std::vector<int> pivot_of_col(cols_, -1);
        unsigned r = m.echelon(&pivot_of_col);
        std::vector<std::vector<uint32_t>> basis;
        for (unsigned j = 0; j < cols_; ++j) {
            if (pivot_of_col[j] >= 0) continue;
            std::vector<uint32_t> v(cols_, 0);
            v[j] = 1;
            for (unsigned jj = 0; jj < cols_; ++jj)
                if (pivot_of_col[jj] >= 0)
                    v[jj] = (p_ - m.at(unsigned(pivot_of_col[jj]), j)) % p_;
            basis.push_back(std::move(v));
        }
        (void)r;
        return basis;
    }

    // A solution of Ax = b, or empty if inconsistent (distinguished from the
    // zero solution by the bool flag).
    std::pair<bool, std::vector<uint32_t>> solve(const std::vector<uint32_t>& b) const {
        if (b.size() != rows_) throw DimensionMismatch("solve rhs length");
        FpMatrix aug(p_, rows_, cols_ + 1);
        for (unsigned i = 0; i < rows_; ++i) {
            for (unsigned j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_) = b[i] % p_;
        }
        std::vector<int> pivot_of_col(cols_ + 1, -1);
        aug.echelon(&pivot_of_col);
        if (pivot_of_col[cols_] >= 0) return {false, {}};
        std::vector<uint32_t> x(cols_, 0);
        for (unsigned j = 0; j < cols_; ++j)
            if (pivot_of_col[j] >= 0) x[j] = aug.at(unsigned(pivot_of_col[j]), cols_);
        return {true, x};
    }

    std::pair<bool, FpMatrix> inverse() const {
        if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
        FpMatrix aug(p_, rows_, 2 * cols_);
        for (unsigned i = 0; i < rows_; ++i) {
            for (unsigned j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
            aug.at(i, cols_ + i) = 1;
        }
        std::vector<int> pivot_of_col(2 * cols_, -1);
        aug.echelon(&pivot_of_col);
        // [A | I] always has full row rank; A is invertible iff every column
        // of the left block received a pivot.
        for (unsigned j = 0; j < cols_; ++j)
            if (pivot_of_col[j] < 0) return {false, FpMatrix(p_, 0, 0)};
        FpMatrix inv(p_, rows_, cols_);
        for (unsigned i = 0; i < rows_; ++i)
            for (unsigned j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
        return {true, inv};
    }

  private:
    void check_same_field(const FpMatrix& o) const {
        if (p_ != o.p_) throw DimensionMismatch("mixed moduli");
    }
    void check_same_shape(const FpMatrix& o) const {
        check_same_field(o);
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("shape mismatch");
    }

    uint32_t inv_mod(uint32_t a) const {  // p prime, a != 0
        uint32_t r = 1, b = a, k = p_ - 2;
        for (; k; k >>= 1) {
            if (k & 1) r = uint32_t(uint64_t(r) * b % p_);
            b = uint32_t(uint64_t(b) * b % p_);
        }
        return r;
    }

    // In-place reduced row echelon form; returns rank. If pivot_of_col is
    // given, pivot_of_col[j] = row index of the pivot in column j, or -1.
    unsigned echelon(std::vector<int>* pivot_of_col = nullptr) {
        unsigned rank = 0;
        for (unsigned col = 0; col < cols_ && rank < rows_; ++col) {
            unsigned piv = rank;
            while (piv < rows_ && at(piv, col) == 0) ++piv;
            if (piv == rows_) continue;
            if (piv != rank)
                for (unsigned j = 0; j < cols_; ++j) std::swap(at(piv, j), at(rank, j));
            uint32_t inv = inv_mod(at(rank, col));
            for (unsigned j = col; j < cols_; ++j)
                at(rank, j) = uint32_t(uint64_t(at(rank, j)) * inv % p_);
            for (unsigned i = 0; i < rows_; ++i) {
                if (i == rank || at(i, col) == 0) continue;
                uint64_t f = at(i, col);
                for (unsigned j = col; j < cols_; ++j)
                    at(i, j) = uint32_t((at(i, j) + (p_ - 1) * f % p_ * at(rank, j)) % p_);
            }
            if (pivot_of_col) (*pivot_of_col)[col] = int(rank);
            ++rank;
        }
        return rank;
    }

    unsigned p_, rows_, cols_;
    std::vector<uint32_t> e_;
};

}  // namespace tame

#endif
