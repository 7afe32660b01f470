#include "stieltjes/linalg.hpp"

#include <sstream>

#include "stieltjes/error.hpp"

namespace stieltjes {

CMatrix rref(const CMatrix& a, std::vector<std::size_t>& pivot_cols) {
    CMatrix m = a;
    pivot_cols.clear();
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) {
                GaussRational tmp = m.at(row, j);
                m.at(row, j) = m.at(piv, j);
                m.at(piv, j) = tmp;
            }
        }
        const GaussRational inv = pinv(m.at(row, col));
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const GaussRational f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                m.at(i, j) -= f * m.at(row, j);
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return m;
}

std::size_t rank(const CMatrix& a) {
    std::vector<std::size_t> pivots;
    rref(a, pivots);
    return pivots.size();
}

GaussRational det(const CMatrix& a) {
    if (!a.is_square()) {
        throw error("shape-mismatch", "determinant of a non-square matrix");
    }
    const std::size_t n = a.rows();
    CMatrix m = a;
    GaussRational d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m.at(piv, col).is_zero()) ++piv;
        if (piv == n) return GaussRational(0);
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) {
                GaussRational tmp = m.at(col, j);
                m.at(col, j) = m.at(piv, j);
                m.at(piv, j) = tmp;
            }
            d = -d;
        }
        d = d * m.at(col, col);
        const GaussRational inv = pinv(m.at(col, col));
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            const GaussRational f = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) {
                m.at(i, j) -= f * m.at(col, j);
            }
        }
    }
    return d;
}

CMatrix inverse(const CMatrix& a) {
    if (!a.is_square()) {
        throw error("shape-mismatch", "inverse of a non-square matrix");
    }
    const std::size_t n = a.rows();
    CMatrix aug(n, 2 * n);
    aug.set_block(0, 0, a);
    aug.set_block(0, n, CMatrix::identity(n));
    std::vector<std::size_t> pivots;
    CMatrix r = rref(aug, pivots);
    if (pivots.size() != n || (n > 0 && pivots[n - 1] != n - 1)) {
        throw error("division-by-zero", "inverse of a singular matrix");
    }
    return r.block(0, n, n, n);
}

CMatrix pinv(const CMatrix& a) {
    std::vector<std::size_t> pivots;
    const CMatrix r = rref(a, pivots);
    const std::size_t rk = pivots.size();
    if (rk == 0) return CMatrix::zero(a.cols(), a.rows());

    CMatrix f(a.rows(), rk);
    for (std::size_t j = 0; j < rk; ++j)
        f.set_block(0, j, a.block(0, pivots[j], a.rows(), 1));
    const CMatrix g = r.block(0, 0, rk, a.cols());

    const CMatrix fs = f.conj_transpose();
    const CMatrix gs = g.conj_transpose();
    return gs * inverse(fs * a * gs) * fs;
}

Definiteness psd_check(const CMatrix& a) {
    if (!a.is_hermitian()) return Definiteness::not_hermitian;
    const std::size_t n = a.rows();
    CMatrix w = a;
    std::vector<bool> active(n, true);
    std::size_t rk = 0;
    for (;;) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i]) continue;
            const GaussRational& d = w.at(i, i);
            if (d.re < 0) return Definiteness::indefinite;
            if (piv == n && d.re > 0) piv = i;
        }
        if (piv == n) break;
        const GaussRational inv = pinv(w.at(piv, piv));
        for (std::size_t i = 0; i < n; ++i) {
            if (!active[i] || i == piv || w.at(i, piv).is_zero()) continue;
            const GaussRational f = w.at(i, piv) * inv;
            for (std::size_t j = 0; j < n; ++j) {
                if (!active[j] || j == piv) continue;
                w.at(i, j) -= f * w.at(piv, j);
            }
        }
        active[piv] = false;
        ++rk;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!active[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (!active[j]) continue;
            if (!w.at(i, j).is_zero()) return Definiteness::indefinite;
        }
    }
    return rk == n ? Definiteness::pd : Definiteness::psd;
}

bool kernel_included(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.cols()) {
        throw error("shape-mismatch", "kernel inclusion needs equal column counts");
    }
    return b * pinv(a) * a == b;
}

bool range_included(const CMatrix& a, const CMatrix& c) {
    if (a.rows() != c.rows()) {
        throw error("shape-mismatch", "range inclusion needs equal row counts");
    }
    return a * pinv(a) * c == c;
}

} // namespace stieltjes
