#ifndef STIELTJES_MATRIX_HPP
#define STIELTJES_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "stieltjes/rational.hpp"

namespace stieltjes {

// Dense p x q matrix of exact complex rationals, row major.  Values are
// immutable in spirit: every operation returns a fresh matrix and the
// mutating accessors exist only for construction code.
class CMatrix {
public:
    CMatrix() : rows_(0), cols_(0) {}
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static CMatrix identity(std::size_t n);
    static CMatrix zero(std::size_t rows, std::size_t cols);
    static CMatrix from_rows(std::initializer_list<std::initializer_list<GaussRational>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const GaussRational& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }
    GaussRational& at(std::size_t i, std::size_t j) {
        return entries_[i * cols_ + j];
    }

    CMatrix conj_transpose() const;
    CMatrix transpose() const;

    bool is_zero() const;
    bool is_hermitian() const;
    bool is_square() const { return rows_ == cols_; }

    CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const CMatrix& m);

    friend bool operator==(const CMatrix& a, const CMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const CMatrix& a, const CMatrix& b) { return !(a == b); }

    CMatrix operator-() const;
    friend CMatrix operator+(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator-(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend CMatrix operator*(const GaussRational& c, const CMatrix& a);

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GaussRational> entries_;
};

// Kronecker product; kron(identity(m), B) is the block diagonal
// diag(B, ..., B) with m copies.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// diag(blocks[0], ..., blocks[k-1]); blocks may differ in shape.
CMatrix block_diag(const std::vector<CMatrix>& blocks);

} // namespace stieltjes

#endif
