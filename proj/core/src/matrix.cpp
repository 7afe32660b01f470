#include "stieltjes/matrix.hpp"

#include <sstream>

#include "stieltjes/error.hpp"

namespace stieltjes {

namespace {

void require_same_shape(const CMatrix& a, const CMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream os;
        os << op << " needs equal shapes, got " << a.rows() << "x" << a.cols()
           << " and " << b.rows() << "x" << b.cols();
        throw error("shape-mismatch", os.str());
    }
}

} // namespace

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GaussRational(1);
    return m;
}

CMatrix CMatrix::zero(std::size_t rows, std::size_t cols) {
    return CMatrix(rows, cols);
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<GaussRational>> rows) {
    const std::size_t nr = rows.size();
    std::size_t nc = 0;
    if (nr > 0) nc = rows.begin()->size();
    CMatrix m(nr, nc);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != nc) {
            throw error("shape-mismatch", "ragged row list in matrix literal");
        }
        std::size_t j = 0;
        for (const auto& v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

CMatrix CMatrix::conj_transpose() const {
    CMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
    return m;
}

CMatrix CMatrix::transpose() const {
    CMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool CMatrix::is_zero() const {
    for (const auto& v : entries_)
        if (!v.is_zero()) return false;
    return true;
}

bool CMatrix::is_hermitian() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i; j < cols_; ++j)
            if (at(i, j) != at(j, i).conj()) return false;
    return true;
}

CMatrix CMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) {
        throw error("index-out-of-range", "block exceeds matrix bounds");
    }
    CMatrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = at(r0 + i, c0 + j);
    return m;
}

void CMatrix::set_block(std::size_t r0, std::size_t c0, const CMatrix& m) {
    if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) {
        throw error("index-out-of-range", "block exceeds matrix bounds");
    }
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) at(r0 + i, c0 + j) = m.at(i, j);
}

CMatrix CMatrix::operator-() const {
    CMatrix m(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = -entries_[k];
    return m;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "matrix sum");
    CMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k)
        m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    require_same_shape(a, b, "matrix difference");
    CMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k)
        m.entries_[k] = a.entries_[k] - b.entries_[k];
    return m;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_) {
        std::ostringstream os;
        os << "matrix product needs inner dimensions to agree, got "
           << a.rows_ << "x" << a.cols_ << " and " << b.rows_ << "x" << b.cols_;
        throw error("shape-mismatch", os.str());
    }
    CMatrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const GaussRational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                m.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return m;
}

CMatrix operator*(const GaussRational& c, const CMatrix& a) {
    CMatrix m(a.rows_, a.cols_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k) m.entries_[k] = c * a.entries_[k];
    return m;
}

std::string CMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i > 0) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j > 0) os << ", ";
            os << stieltjes::to_string(at(i, j));
        }
    }
    os << "]";
    return os.str();
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const GaussRational& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return m;
}

CMatrix block_diag(const std::vector<CMatrix>& blocks) {
    std::size_t nr = 0;
    std::size_t nc = 0;
    for (const auto& blk : blocks) {
        nr += blk.rows();
        nc += blk.cols();
    }
    CMatrix m(nr, nc);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const auto& blk : blocks) {
        m.set_block(r0, c0, blk);
        r0 += blk.rows();
        c0 += blk.cols();
    }
    return m;
}

} // namespace stieltjes
