#include <qpc/linalg.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>

namespace qpc {

QrResult qr(const ComplexMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("qr: square matrices only");
    if (!M.allFinite()) throw std::invalid_argument("qr: non-finite entries");
    const Eigen::Index m = M.rows();

    Eigen::HouseholderQR<ComplexMatrix> fac(M);
    ComplexMatrix Q = fac.householderQ();
    ComplexMatrix R = fac.matrixQR().triangularView<Eigen::Upper>();

    // Fold diagonal phases into Q: M = (Q D)(D^* R), diag(D^* R) = |diag R|.
    for (Eigen::Index i = 0; i < m; ++i) {
        const std::complex<double> rii = R(i, i);
        const double a = std::abs(rii);
        if (a > 0.0) {
            const std::complex<double> phase = rii / a;
            Q.col(i) *= phase;
            R.row(i) *= std::conj(phase);
        }
        R(i, i) = a;  // clear the residual imaginary dust
    }

    QrResult out{std::move(Q), std::move(R), false};
    const double scale = M.norm();
    for (Eigen::Index i = 0; i < m; ++i) {
        if (out.R(i, i).real() < 1e-14 * scale) { out.rank_deficient = true; break; }
    }
    return out;
}

SvdResult svd(const ComplexMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("svd: square matrices only");
    Eigen::JacobiSVD<ComplexMatrix> fac(M, Eigen::ComputeFullU | Eigen::ComputeFullV);
    return SvdResult{fac.matrixU(), fac.singularValues(), fac.matrixV()};
}

SubspaceFrame::SubspaceFrame(int ambient, ComplexMatrix basis) : ambient_(ambient) {
    if (basis.rows() != ambient) throw std::invalid_argument("SubspaceFrame: ambient mismatch");
    const Eigen::Index k = basis.cols();
    if (k < 1 || k > ambient) throw std::invalid_argument("SubspaceFrame: rank out of range");
    Eigen::HouseholderQR<ComplexMatrix> fac(basis);
    ComplexMatrix q = fac.householderQ() * ComplexMatrix::Identity(ambient, k);
    // Reject rank-deficient spanning sets.
    ComplexMatrix r = fac.matrixQR().topRows(k).triangularView<Eigen::Upper>();
    for (Eigen::Index i = 0; i < k; ++i) {
        if (std::abs(r(i, i)) < 1e-12 * (basis.norm() + 1e-300))
            throw std::invalid_argument("SubspaceFrame: spanning set is rank deficient");
    }
    basis_ = std::move(q);
}

SubspaceFrame SubspaceFrame::span_of(const ComplexMatrix& vectors) {
    return SubspaceFrame(static_cast<int>(vectors.rows()), vectors);
}

SubspaceFrame SubspaceFrame::coordinate_plane(int ambient, int k) {
    return SubspaceFrame(ambient, ComplexMatrix::Identity(ambient, k));
}

double principal_angle(const SubspaceFrame& U, const SubspaceFrame& V) {
    if (U.ambient() != V.ambient()) throw std::invalid_argument("principal_angle: ambient mismatch");
    if (U.rank() != V.rank()) throw std::invalid_argument("principal_angle: rank mismatch");

    const ComplexMatrix G = U.basis().adjoint() * V.basis();  // k x k, sigma = cosines
    Eigen::JacobiSVD<ComplexMatrix> gsvd(G);
    const double c = std::min(1.0, gsvd.singularValues().minCoeff());

    // (I - U U^*) V has singular values = sines of the principal angles.
    const ComplexMatrix S = V.basis() - U.basis() * G;
    Eigen::JacobiSVD<ComplexMatrix> ssvd(S);
    const double s = std::min(1.0, ssvd.singularValues().maxCoeff());

    return std::atan2(s, c);
}

}  // namespace qpc
