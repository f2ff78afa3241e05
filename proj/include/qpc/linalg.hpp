#pragma once

// Dense complex linear algebra for the small matrices (m <= 16) the cocycle
// machinery produces: QR with a nonnegative real diagonal, SVD, orthonormal
// subspace frames and principal angles.

#include <Eigen/Dense>

namespace qpc {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

struct QrResult {
    ComplexMatrix Q;  // unitary
    ComplexMatrix R;  // upper triangular, diag(R) real and >= 0
    bool rank_deficient = false;
};

// QR with the diagonal phases folded into Q, so diag(R) is real >= 0.
// rank_deficient flags any diagonal entry below 1e-14 * ||M||.
QrResult qr(const ComplexMatrix& M);

struct SvdResult {
    ComplexMatrix U;
    Eigen::VectorXd sigma;  // descending
    ComplexMatrix V;
};

SvdResult svd(const ComplexMatrix& M);

// A k-dimensional subspace of C^m held as an m x k matrix with orthonormal
// columns (columns re-orthonormalized on construction).
class SubspaceFrame {
public:
    SubspaceFrame(int ambient, ComplexMatrix basis);
    static SubspaceFrame span_of(const ComplexMatrix& vectors);  // ambient = rows
    static SubspaceFrame coordinate_plane(int ambient, int k);   // span(e_1..e_k)

    int ambient() const { return ambient_; }
    int rank() const { return static_cast<int>(basis_.cols()); }
    const ComplexMatrix& basis() const { return basis_; }

private:
    int ambient_;
    ComplexMatrix basis_;
};

// Largest principal angle between equal-rank frames, in [0, pi/2]. Uses the
// sine characterization near 0 and the cosine one near pi/2 (atan2 of both),
// so tiny angles are resolved well below the acos(1-eps) floor.
double principal_angle(const SubspaceFrame& U, const SubspaceFrame& V);

}  // namespace qpc
