#include <qpc/fourier.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double freq_dot(const FreqVec& n, const Eigen::VectorXd& x) {
    double s = 0.0;
    for (size_t j = 0; j < n.size(); ++j) s += n[j] * x(static_cast<Eigen::Index>(j));
    return s;
}
}  // namespace

std::complex<double> ScalarFourier::evaluate(const TorusPoint& x) const {
    if (x.dim() != d) throw std::invalid_argument("ScalarFourier::evaluate: dimension mismatch");
    std::complex<double> s = 0.0;
    for (const auto& [n, c] : coeffs) s += c * std::polar(1.0, kTwoPi * freq_dot(n, x.coords()));
    return s;
}

ScalarFourier ScalarFourier::conjugated() const {
    ScalarFourier out;
    out.d = d;
    out.strip = strip;
    for (const auto& [n, c] : coeffs) {
        FreqVec neg(n.size());
        for (size_t j = 0; j < n.size(); ++j) neg[j] = -n[j];
        out.coeffs[neg] = std::conj(c);
    }
    return out;
}

ScalarFourier ScalarFourier::constant(int d, std::complex<double> c, double strip) {
    ScalarFourier f;
    f.d = d;
    f.strip = strip;
    f.coeffs[FreqVec(static_cast<size_t>(d), 0)] = c;
    return f;
}

ScalarFourier ScalarFourier::monomial(int d, const FreqVec& n, std::complex<double> c, double strip) {
    if (static_cast<int>(n.size()) != d) throw std::invalid_argument("ScalarFourier::monomial: bad frequency");
    ScalarFourier f;
    f.d = d;
    f.strip = strip;
    f.coeffs[n] = c;
    return f;
}

void FourierCocycle::add_coefficient(const FreqVec& n, const ComplexMatrix& a) {
    if (static_cast<int>(n.size()) != d_) throw std::invalid_argument("FourierCocycle: frequency dimension mismatch");
    if (a.rows() != m_ || a.cols() != m_) throw std::invalid_argument("FourierCocycle: coefficient shape mismatch");
    auto it = coeffs_.find(n);
    if (it == coeffs_.end())
        coeffs_.emplace(n, a);
    else
        it->second += a;
}

void FourierCocycle::set_coefficient(const FreqVec& n, ComplexMatrix a) {
    if (static_cast<int>(n.size()) != d_) throw std::invalid_argument("FourierCocycle: frequency dimension mismatch");
    if (a.rows() != m_ || a.cols() != m_) throw std::invalid_argument("FourierCocycle: coefficient shape mismatch");
    coeffs_[n] = std::move(a);
}

ComplexMatrix FourierCocycle::evaluate(const TorusPoint& x) const {
    if (x.dim() != d_) throw std::invalid_argument("FourierCocycle::evaluate: dimension mismatch");
    ComplexMatrix A = ComplexMatrix::Zero(m_, m_);
    for (const auto& [n, coef] : coeffs_)
        A += coef * std::polar(1.0, kTwoPi * freq_dot(n, x.coords()));
    return A;
}

FourierCocycle FourierCocycle::scaled(std::complex<double> c) const {
    FourierCocycle out(d_, m_, strip_);
    for (const auto& [n, coef] : coeffs_) out.set_coefficient(n, ComplexMatrix(c * coef));
    return out;
}

FourierCocycle FourierCocycle::constant(int d, const ComplexMatrix& A, double strip) {
    if (A.rows() != A.cols()) throw std::invalid_argument("FourierCocycle::constant: square matrices only");
    FourierCocycle out(d, static_cast<int>(A.rows()), strip);
    out.set_coefficient(FreqVec(static_cast<size_t>(d), 0), A);
    return out;
}

std::vector<TorusPoint> phase_grid(int d, int per_dim, bool offset) {
    if (d < 1 || per_dim < 1) throw std::invalid_argument("phase_grid: bad parameters");
    std::vector<TorusPoint> pts;
    pts.reserve(static_cast<size_t>(std::pow(per_dim, d)));
    std::vector<int> idx(static_cast<size_t>(d), 0);
    const double shift = offset ? 0.5 : 0.0;
    while (true) {
        Eigen::VectorXd x(d);
        for (int j = 0; j < d; ++j) x(j) = (idx[static_cast<size_t>(j)] + shift) / per_dim;
        pts.emplace_back(x);
        int j = d - 1;  // row-major: last coordinate fastest
        for (; j >= 0; --j) {
            if (++idx[static_cast<size_t>(j)] < per_dim) break;
            idx[static_cast<size_t>(j)] = 0;
        }
        if (j < 0) break;
    }
    return pts;
}

InvertibilityCertificate certify_invertibility(const FourierCocycle& C, int grid_per_dim, double threshold) {
    InvertibilityCertificate cert;
    cert.grid_per_dim = grid_per_dim;
    cert.threshold = threshold;
    cert.min_abs_det = std::numeric_limits<double>::infinity();
    for (const TorusPoint& x : phase_grid(C.base_dim(), grid_per_dim)) {
        const double a = std::abs(C.det_at(x));
        if (a < cert.min_abs_det) {
            cert.min_abs_det = a;
            cert.argmin = x.coords();
        }
    }
    cert.ok = cert.min_abs_det > threshold;
    return cert;
}

ComplexMatrix IterateResult::reassemble() const {
    ComplexMatrix P = Q;
    for (auto it = r_factors.rbegin(); it != r_factors.rend(); ++it) P = P * (*it);
    return P;
}

IterateResult iterate(const FourierCocycle& C, const Translation& T, const TorusPoint& x, long n) {
    if (n < 1) throw std::invalid_argument("iterate: n must be >= 1");
    const int m = C.fiber_dim();

    IterateResult out;
    out.n = n;
    out.Q = ComplexMatrix::Identity(m, m);
    out.r_factors.reserve(static_cast<size_t>(n));

    std::optional<ComplexMatrix> direct;
    if (n <= 30) direct = ComplexMatrix::Identity(m, m);

    TorusPoint p = x;
    for (long j = 0; j < n; ++j) {
        const ComplexMatrix A = C.evaluate(p);
        QrResult f = qr(A * out.Q);
        out.Q = std::move(f.Q);
        out.r_factors.push_back(std::move(f.R));
        if (direct) *direct = A * (*direct);
        p = T.step(p);
    }
    out.direct = std::move(direct);
    return out;
}

FourierCocycle complexify(const FourierCocycle& C, const Eigen::VectorXd& y) {
    if (y.size() != C.base_dim()) throw std::invalid_argument("complexify: dimension mismatch");
    const double ymax = y.size() ? y.cwiseAbs().maxCoeff() : 0.0;
    if (ymax >= C.strip())
        throw std::domain_error("complexify: |y| exceeds the strip of analyticity");
    FourierCocycle out(C.base_dim(), C.fiber_dim(), C.strip() - ymax);
    for (const auto& [n, coef] : C.coefficients()) {
        const double scale = std::exp(-kTwoPi * freq_dot(n, y));
        out.set_coefficient(n, ComplexMatrix(scale * coef));
    }
    return out;
}

FourierCocycle build_su_form(const ScalarFourier& a, const ScalarFourier& b, int grid_per_dim) {
    if (a.d != b.d) throw std::invalid_argument("build_su_form: a and b live on different tori");
    const int d = a.d;
    const double strip = std::min(a.strip, b.strip);

    const ScalarFourier abar = a.conjugated();
    const ScalarFourier bbar = b.conjugated();

    FourierCocycle C(d, 2, strip);
    auto put = [&](const std::map<FreqVec, std::complex<double>>& src, int row, int col,
                   std::complex<double> factor) {
        for (const auto& [n, c] : src) {
            ComplexMatrix blk = ComplexMatrix::Zero(2, 2);
            blk(row, col) = factor * c;
            C.add_coefficient(n, blk);
        }
    };
    put(a.coeffs, 0, 0, 1.0);
    put(bbar.coeffs, 0, 1, -1.0);
    put(b.coeffs, 1, 0, 1.0);
    put(abar.coeffs, 1, 1, 1.0);

    // det A = |a|^2 + |b|^2 must stay away from zero.
    double lo = std::numeric_limits<double>::infinity();
    for (const TorusPoint& x : phase_grid(d, grid_per_dim)) {
        const double v = std::norm(a.evaluate(x)) + std::norm(b.evaluate(x));
        lo = std::min(lo, v);
    }
    if (!(lo > 1e-10))
        throw std::domain_error("build_su_form: |a|^2+|b|^2 dips below 1e-10 on the certification grid");
    return C;
}

FourierCocycle build_block_prop34(const FourierCocycle& A2, int d, int k, int m, double lambda) {
    if (A2.base_dim() != 2 || A2.fiber_dim() != 2)
        throw std::invalid_argument("build_block_prop34: A2 must be a cocycle on T^2 with m = 2");
    if (d < 2) throw std::invalid_argument("build_block_prop34: d must be >= 2");
    if (k < 1 || k >= m) throw std::invalid_argument("build_block_prop34: need 1 <= k < m");
    if (!(lambda > 0)) throw std::invalid_argument("build_block_prop34: lambda must be positive");

    // The construction assumes det A2 == 1.
    for (const TorusPoint& x : phase_grid(2, 16)) {
        if (std::abs(A2.det_at(x) - 1.0) > 1e-8)
            throw std::invalid_argument("build_block_prop34: det A2 != 1");
    }

    const int top = k - 1;       // lambda block
    const int bottom = m - k - 1;  // mu block
    double mu = 0.0;
    if (bottom > 0) {
        mu = std::pow(lambda, -double(top) / double(bottom));
    } else if (top > 0 && lambda != 1.0) {
        throw std::domain_error("build_block_prop34: unsatisfiable determinant-one normalization (k = m-1 needs lambda = 1)");
    } else {
        lambda = 1.0;  // degenerate normalization; blocks may be empty anyway
    }

    FourierCocycle out(d, m, A2.strip());

    ComplexMatrix scalars = ComplexMatrix::Zero(m, m);
    for (int i = 0; i < top; ++i) scalars(i, i) = lambda;
    for (int i = k + 1; i < m; ++i) scalars(i, i) = mu;
    if (top > 0 || bottom > 0) out.add_coefficient(FreqVec(static_cast<size_t>(d), 0), scalars);

    for (const auto& [n2, coef] : A2.coefficients()) {
        FreqVec n(static_cast<size_t>(d), 0);
        n[0] = n2[0];
        n[1] = n2[1];
        ComplexMatrix blk = ComplexMatrix::Zero(m, m);
        blk.block(top, top, 2, 2) = coef;
        out.add_coefficient(n, blk);
    }
    return out;
}

}  // namespace qpc
