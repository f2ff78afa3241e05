#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qpc/linalg.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

using namespace qpc;

namespace {

ComplexMatrix random_matrix(int m, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix M(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) M(i, j) = {g(rng), g(rng)};
    return M;
}

ComplexMatrix random_unitary(int m, unsigned seed) { return qr(random_matrix(m, seed)).Q; }

}  // namespace

TEST_CASE("qr of the identity") {
    const ComplexMatrix I = ComplexMatrix::Identity(3, 3);
    const QrResult f = qr(I);
    CHECK((f.Q - I).norm() <= 1e-14);
    CHECK((f.R - I).norm() <= 1e-14);
    CHECK_FALSE(f.rank_deficient);
}

TEST_CASE("qr of a positive diagonal is trivial") {
    ComplexMatrix D = ComplexMatrix::Zero(2, 2);
    D(0, 0) = 2.0;
    D(1, 1) = 0.5;
    const QrResult f = qr(D);
    CHECK((f.Q - ComplexMatrix::Identity(2, 2)).norm() <= 1e-14);
    CHECK((f.R - D).norm() <= 1e-14);
}

TEST_CASE("qr reconstruction, unitarity, and nonnegative real diagonal") {
    const ComplexMatrix M = random_matrix(3, 12345);
    const QrResult f = qr(M);
    CHECK((f.Q * f.R - M).norm() <= 1e-12 * M.norm());
    CHECK((f.Q.adjoint() * f.Q - ComplexMatrix::Identity(3, 3)).norm() <= 1e-13);
    for (int i = 0; i < 3; ++i) {
        CHECK(f.R(i, i).imag() == 0.0);
        CHECK(f.R(i, i).real() >= 0.0);
    }
    for (int i = 1; i < 3; ++i)
        for (int j = 0; j < i; ++j) CHECK(std::abs(f.R(i, j)) == 0.0);
}

TEST_CASE("qr flags rank deficiency") {
    ComplexMatrix M(2, 2);
    M << 1.0, 2.0, 0.5, 1.0;  // rank 1
    CHECK(qr(M).rank_deficient);
}

TEST_CASE("qr rejects non-finite input") {
    ComplexMatrix M = ComplexMatrix::Identity(2, 2);
    M(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(qr(M), std::invalid_argument);
}

TEST_CASE("svd of a diagonal") {
    ComplexMatrix D = ComplexMatrix::Zero(3, 3);
    D(0, 0) = 3.0;
    D(1, 1) = 2.0;
    D(2, 2) = 1.0;
    const SvdResult s = svd(D);
    CHECK(s.sigma(0) == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(s.sigma(1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s.sigma(2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("svd of a unitary matrix: all singular values 1") {
    const SvdResult s = svd(random_unitary(4, 777));
    for (int i = 0; i < 4; ++i) CHECK(s.sigma(i) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("svd of [[0,2],[1,0]]") {
    // eigenvalues of M^* M are 4 and 1, so sigma = (2, 1)
    ComplexMatrix M(2, 2);
    M << 0.0, 2.0, 1.0, 0.0;
    const SvdResult s = svd(M);
    CHECK(s.sigma(0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(s.sigma(1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("svd reconstructs and sigma product matches |det|") {
    for (unsigned seed : {1u, 2u, 3u, 4u}) {
        const ComplexMatrix M = random_matrix(4, seed);
        const SvdResult s = svd(M);
        CHECK((s.U * s.sigma.asDiagonal().toDenseMatrix().cast<std::complex<double>>() * s.V.adjoint() - M)
                  .norm() <= 1e-10 * M.norm());
        CHECK(s.sigma.prod() == doctest::Approx(std::abs(M.determinant())).epsilon(1e-9));
        for (int i = 0; i + 1 < 4; ++i) CHECK(s.sigma(i) >= s.sigma(i + 1));
    }
}

TEST_CASE("qr then svd of R gives the singular values of M") {
    const ComplexMatrix M = random_matrix(5, 99);
    const Eigen::VectorXd s1 = svd(M).sigma;
    const Eigen::VectorXd s2 = svd(qr(M).R).sigma;
    CHECK((s1 - s2).cwiseAbs().maxCoeff() <= 1e-9 * s1(0));
}

TEST_CASE("principal angle: named values") {
    const auto e1 = SubspaceFrame::coordinate_plane(2, 1);
    ComplexMatrix v2(2, 1);
    v2 << 0.0, 1.0;
    const SubspaceFrame e2(2, v2);
    ComplexMatrix diag(2, 1);
    diag << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
    const SubspaceFrame halfway(2, diag);

    CHECK(principal_angle(e1, e1) <= 1e-12);
    CHECK(principal_angle(e1, e2) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
    CHECK(principal_angle(e1, halfway) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-12));
}

TEST_CASE("principal angle resolves tiny angles") {
    // rotate e1 by 1e-9 in the (e1,e2) plane; acos alone cannot see this
    ComplexMatrix v(2, 1);
    const double t = 1e-9;
    v << std::cos(t), std::sin(t);
    const double a = principal_angle(SubspaceFrame::coordinate_plane(2, 1), SubspaceFrame(2, v));
    CHECK(a == doctest::Approx(t).epsilon(1e-6));
}

TEST_CASE("principal angle: symmetry and triangle inequality on random triples") {
    std::mt19937_64 rng(2024);
    std::normal_distribution<double> g(0.0, 1.0);
    auto random_frame = [&](int m, int k) {
        ComplexMatrix W(m, k);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < k; ++j) W(i, j) = {g(rng), g(rng)};
        return SubspaceFrame(m, W);
    };
    for (int trial = 0; trial < 25; ++trial) {
        const int m = 4, k = 2;
        const SubspaceFrame A = random_frame(m, k), B = random_frame(m, k), C = random_frame(m, k);
        const double ab = principal_angle(A, B), ba = principal_angle(B, A);
        const double bc = principal_angle(B, C), ac = principal_angle(A, C);
        CHECK(std::abs(ab - ba) <= 1e-8);
        CHECK(ac <= ab + bc + 1e-8);
    }
}

TEST_CASE("principal angle rejects mismatched shapes") {
    CHECK_THROWS_AS(principal_angle(SubspaceFrame::coordinate_plane(3, 1), SubspaceFrame::coordinate_plane(3, 2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(principal_angle(SubspaceFrame::coordinate_plane(3, 1), SubspaceFrame::coordinate_plane(4, 1)),
                    std::invalid_argument);
}
