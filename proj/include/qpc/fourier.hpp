#pragma once

// Analytic quasi-periodic cocycles represented as matrix-valued trigonometric
// polynomials on T^d: a finite map from integer frequency vectors n to complex
// m x m coefficients A_n, with A(x) = sum_n A_n exp(2 pi i <n,x>). Keeping the
// representation structural makes complexification an exact coefficient
// operation and conjugation a frequency flip.

#include <qpc/linalg.hpp>
#include <qpc/torus.hpp>

#include <complex>
#include <map>
#include <optional>
#include <vector>

namespace qpc {

using FreqVec = std::vector<int>;  // lexicographic order under std::map

// Scalar-valued trigonometric polynomial (the a, b of the SU-form builder).
struct ScalarFourier {
    int d = 2;
    double strip = 0.5;
    std::map<FreqVec, std::complex<double>> coeffs;

    std::complex<double> evaluate(const TorusPoint& x) const;
    ScalarFourier conjugated() const;  // coefficients conj(c_{-n})

    static ScalarFourier constant(int d, std::complex<double> c, double strip = 0.5);
    static ScalarFourier monomial(int d, const FreqVec& n, std::complex<double> c, double strip = 0.5);
};

class FourierCocycle {
public:
    FourierCocycle(int d, int m, double strip) : d_(d), m_(m), strip_(strip) {
        if (d < 1 || m < 1 || !(strip > 0)) throw std::invalid_argument("FourierCocycle: bad dimensions");
    }

    int base_dim() const { return d_; }
    int fiber_dim() const { return m_; }
    double strip() const { return strip_; }
    const std::map<FreqVec, ComplexMatrix>& coefficients() const { return coeffs_; }

    // Adds into the coefficient at n (creating it if absent).
    void add_coefficient(const FreqVec& n, const ComplexMatrix& a);
    void set_coefficient(const FreqVec& n, ComplexMatrix a);

    ComplexMatrix evaluate(const TorusPoint& x) const;
    std::complex<double> det_at(const TorusPoint& x) const { return evaluate(x).determinant(); }

    FourierCocycle scaled(std::complex<double> c) const;  // c * A

    static FourierCocycle constant(int d, const ComplexMatrix& A, double strip = 0.5);

private:
    int d_, m_;
    double strip_;
    std::map<FreqVec, ComplexMatrix> coeffs_;
};

// Offset sample grid {(i_1+1/2)/g, ..., (i_d+1/2)/g}, row-major order.
std::vector<TorusPoint> phase_grid(int d, int per_dim, bool offset = true);

// min |det A(x)| over the certification grid; the cocycle is usable as a
// GL_m-valued map only when ok.
struct InvertibilityCertificate {
    bool ok = false;
    double min_abs_det = 0.0;
    Eigen::VectorXd argmin;
    int grid_per_dim = 64;
    double threshold = 1e-10;
};
InvertibilityCertificate certify_invertibility(const FourierCocycle& C, int grid_per_dim = 64,
                                               double threshold = 1e-10);

// A^{(n)}(x) = A(T^{n-1}x) ... A(Tx) A(x) kept in QR-factored form:
// A^{(n)} = Q * R[n-1] * ... * R[0]. The direct product is kept only for
// n <= 30 (entries grow like e^{n lambda_1}).
struct IterateResult {
    long n = 0;
    ComplexMatrix Q;
    std::vector<ComplexMatrix> r_factors;  // application order: r_factors[0] first
    std::optional<ComplexMatrix> direct;

    ComplexMatrix reassemble() const;  // Q * R[n-1] * ... * R[0]
};
IterateResult iterate(const FourierCocycle& C, const Translation& T, const TorusPoint& x, long n);

// Complexification A_y(x) = A(x + iy): coefficients scale by
// exp(-2 pi <n, y>). Throws when some |y_j| >= strip.
FourierCocycle complexify(const FourierCocycle& C, const Eigen::VectorXd& y);

// A(x) = [ a(x)  -conj(b(x)); b(x)  conj(a(x)) ], det = |a|^2 + |b|^2.
// Throws when |a|^2+|b|^2 dips below 1e-10 on the certification grid.
FourierCocycle build_su_form(const ScalarFourier& a, const ScalarFourier& b, int grid_per_dim = 64);

// Block cocycle blockdiag(lambda I_{k-1}, A2(pi(x)), mu I_{m-k-1}) over T^d
// with pi(x) = (x_1, x_2) and mu = lambda^{-(k-1)/(m-k-1)} when m-k-1 > 0.
// When m-k-1 == 0 and k > 1 the determinant-one normalization forces
// lambda = 1; anything else is reported unsatisfiable.
FourierCocycle build_block_prop34(const FourierCocycle& A2, int d, int k, int m, double lambda);

}  // namespace qpc
