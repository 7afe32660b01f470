#include "stieltjes/builders.hpp"

#include <sstream>

#include "stieltjes/error.hpp"
#include "stieltjes/linalg.hpp"
#include "stieltjes/transforms.hpp"

namespace stieltjes {

namespace {

void require_top_index(const MatSeq& s, std::size_t needed, const char* what) {
    if (static_cast<long>(needed) > s.kappa()) {
        std::ostringstream os;
        os << what << " needs sequence members up to index " << needed
           << ", top index is " << s.kappa();
        throw error("index-out-of-range", os.str());
    }
}

CMatrix hankel_shifted(const MatSeq& s, std::size_t n, std::size_t shift) {
    CMatrix m((n + 1) * s.p(), (n + 1) * s.q());
    for (std::size_t j = 0; j <= n; ++j)
        for (std::size_t k = 0; k <= n; ++k)
            m.set_block(j * s.p(), k * s.q(), s.at(j + k + shift));
    return m;
}

} // namespace

CMatrix hankel_block(const MatSeq& s, HankelKind kind, std::size_t n) {
    switch (kind) {
        case HankelKind::H:
            require_top_index(s, 2 * n, "H_n");
            return hankel_shifted(s, n, 0);
        case HankelKind::K:
            require_top_index(s, 2 * n + 1, "K_n");
            return hankel_shifted(s, n, 1);
        case HankelKind::G:
            require_top_index(s, 2 * n + 2, "G_n");
            return hankel_shifted(s, n, 2);
        case HankelKind::Halpha:
            require_top_index(s, 2 * n + 1, "H_alpha_n");
            return -s.alpha() * hankel_shifted(s, n, 0) + hankel_shifted(s, n, 1);
    }
    throw error("invalid-config", "unknown Hankel kind");
}

ToeplitzPair toeplitz_pair(const MatSeq& s, std::size_t m) {
    require_top_index(s, m, "S_m");
    ToeplitzPair pair{CMatrix((m + 1) * s.p(), (m + 1) * s.q()),
                      CMatrix((m + 1) * s.p(), (m + 1) * s.q())};
    for (std::size_t j = 0; j <= m; ++j)
        for (std::size_t k = 0; k <= j; ++k) {
            pair.lower.set_block(j * s.p(), k * s.q(), s.at(j - k));
            pair.upper.set_block(k * s.p(), j * s.q(), s.at(j - k));
        }
    return pair;
}

CMatrix structural(std::size_t q, std::size_t n, StructuralKind which,
                   const std::optional<GaussRational>& z) {
    const std::size_t nq = n * q;
    switch (which) {
        case StructuralKind::T: {
            CMatrix t((n + 1) * q, (n + 1) * q);
            for (std::size_t j = 1; j <= n; ++j)
                t.set_block(j * q, (j - 1) * q, CMatrix::identity(q));
            return t;
        }
        case StructuralKind::R: {
            if (!z) throw error("invalid-config", "structural R needs the point z");
            CMatrix r((n + 1) * q, (n + 1) * q);
            for (std::size_t j = 0; j <= n; ++j) {
                GaussRational zp(1);
                for (std::size_t k = j + 1; k-- > 0;) {
                    r.set_block(j * q, k * q, zp * CMatrix::identity(q));
                    zp = zp * *z;
                }
            }
            return r;
        }
        case StructuralKind::v: {
            CMatrix m((n + 1) * q, q);
            m.set_block(0, 0, CMatrix::identity(q));
            return m;
        }
        case StructuralKind::IO: {
            CMatrix m((n + 1) * q, nq);
            m.set_block(0, 0, CMatrix::identity(nq));
            return m;
        }
        case StructuralKind::OI: {
            CMatrix m((n + 1) * q, nq);
            m.set_block(q, 0, CMatrix::identity(nq));
            return m;
        }
    }
    throw error("invalid-config", "unknown structural kind");
}

CMatrix schur_L(const MatSeq& s, std::size_t n) {
    require_top_index(s, 2 * n, "L_n");
    if (n == 0) return s.at(0);
    const CMatrix h = hankel_block(s, HankelKind::H, n - 1);
    const CMatrix y = stacked_col(s, n, 2 * n - 1);
    const CMatrix z = stacked_row(s, n, 2 * n - 1);
    return s.at(2 * n) - z * pinv(h) * y;
}

CMatrix schur_Theta(const MatSeq& s, std::size_t n) {
    if (n == 0) return CMatrix::zero(s.p(), s.q());
    require_top_index(s, 2 * n - 1, "Theta_n");
    const CMatrix h = hankel_block(s, HankelKind::H, n - 1);
    const CMatrix y = stacked_col(s, n, 2 * n - 1);
    const CMatrix z = stacked_row(s, n, 2 * n - 1);
    return z * pinv(h) * y;
}

CMatrix schur_Lambda(const MatSeq& s, std::size_t n) {
    if (n == 0) {
        throw error("index-out-of-range", "Lambda_n needs n >= 1");
    }
    require_top_index(s, 2 * n, "Lambda_n");
    const CMatrix g = hankel_block(s, HankelKind::G, n - 1);
    const CMatrix y = stacked_col(s, 1, n);
    const CMatrix z = stacked_row(s, 1, n);
    return g - y * pinv(s.at(0)) * z;
}

CMatrix schur_L_alpha(const MatSeq& s, std::size_t n) {
    require_top_index(s, 2 * n + 1, "L_alpha_n");
    return schur_L(alpha_shift(s), n);
}

CMatrix schur_Theta_alpha(const MatSeq& s, std::size_t n) {
    if (n == 0) return CMatrix::zero(s.p(), s.q());
    require_top_index(s, 2 * n, "Theta_alpha_n");
    return schur_Theta(alpha_shift(s), n);
}

SchurComplements schur_complements(const MatSeq& s, std::size_t n) {
    SchurComplements out;
    const long kappa = s.kappa();
    const long ln = static_cast<long>(n);
    if (2 * ln <= kappa) out.L = schur_L(s, n);
    if (n == 0 || 2 * ln - 1 <= kappa) out.Theta = schur_Theta(s, n);
    if (n >= 1 && 2 * ln <= kappa) out.Lambda = schur_Lambda(s, n);
    if (2 * ln + 1 <= kappa) out.L_alpha = schur_L_alpha(s, n);
    if (n == 0 || 2 * ln <= kappa) out.Theta_alpha = schur_Theta_alpha(s, n);
    return out;
}

DPair d_matrices(const MatSeq& s, std::size_t m, DVariant variant) {
    require_top_index(s, m, "D_m");
    const MatSeq base = variant == DVariant::plus_alpha ? splus(s) : s;
    const ToeplitzPair rez = toeplitz_pair(reciprocal(base), m);
    const CMatrix s0 = base.at(0);
    const CMatrix s0_dag = pinv(s0);
    const CMatrix eye = CMatrix::identity(m + 1);
    const CMatrix left_proj = CMatrix::identity(s.p()) - s0 * s0_dag;
    const CMatrix right_proj = CMatrix::identity(s.q()) - s0_dag * s0;
    return DPair{kron(eye, s0) * rez.lower + kron(eye, left_proj),
                 rez.upper * kron(eye, s0) + kron(eye, right_proj)};
}

} // namespace stieltjes
