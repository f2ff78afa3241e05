#include <qpc/lyapunov.hpp>

#include <qpc/linalg.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace qpc {

Filtration oseledets_dims(const Eigen::VectorXd& sorted_exponents, double gap_tol) {
    const Eigen::Index m = sorted_exponents.size();
    if (m == 0) throw std::invalid_argument("oseledets_dims: empty spectrum");
    if (!sorted_exponents.allFinite()) throw std::invalid_argument("oseledets_dims: non-finite exponents");

    Filtration f;
    f.gap_tol = gap_tol;

    int start = 0;
    for (Eigen::Index i = 1; i <= m; ++i) {
        if (i == m || sorted_exponents(i - 1) - sorted_exponents(i) > gap_tol) {
            ExponentCluster c;
            c.dim = static_cast<int>(i) - start;
            c.mean = sorted_exponents.segment(start, c.dim).mean();
            f.clusters.push_back(c);
            start = static_cast<int>(i);
        }
    }

    for (Eigen::Index i = 0; i < m; ++i) {
        if (std::abs(sorted_exponents(i)) <= gap_tol) { f.ambiguous = true; break; }
    }
    if (!f.ambiguous) {
        int dim_plus = 0;
        for (Eigen::Index i = 0; i < m; ++i)
            if (sorted_exponents(i) > 0) ++dim_plus;
        f.eplus_dim = dim_plus;
    }
    return f;
}

Filtration oseledets_dims(const LyapunovReport& report, double gap_tol) {
    return oseledets_dims(report.exponents, gap_tol);
}

LyapunovReport lyapunov_spectrum(const FourierCocycle& C, const Translation& T, long n,
                                 const std::vector<TorusPoint>& phases, double gap_tol) {
    if (n < 100) throw std::invalid_argument("lyapunov_spectrum: n must be >= 100");
    if (phases.empty()) throw std::invalid_argument("lyapunov_spectrum: need at least one phase");
    const int m = C.fiber_dim();
    const int P = static_cast<int>(phases.size());

    Eigen::MatrixXd per_phase(m, P);
    double det_acc = 0.0;

    for (int p = 0; p < P; ++p) {
        ComplexMatrix Q = ComplexMatrix::Identity(m, m);
        Eigen::VectorXd sums = Eigen::VectorXd::Zero(m);
        TorusPoint x = phases[static_cast<size_t>(p)];
        for (long j = 0; j < n; ++j) {
            QrResult f = qr(C.evaluate(x) * Q);
            for (int i = 0; i < m; ++i) {
                const double rii = f.R(i, i).real();
                const double lg = std::log(rii);
                if (!std::isfinite(lg))
                    throw std::runtime_error("lyapunov_spectrum: non-finite accumulation at phase " +
                                             std::to_string(p) + ", step " + std::to_string(j));
                sums(i) += lg;
            }
            Q = std::move(f.Q);
            x = T.step(x);
        }
        Eigen::VectorXd rates = sums / double(n);
        std::sort(rates.data(), rates.data() + m, std::greater<double>());
        per_phase.col(p) = rates;
        det_acc += sums.sum() / double(n);  // sum_i log R_ii(j) == log|det A(T^j x)|
    }

    LyapunovReport rep;
    rep.n_used = n;
    rep.phases_used = P;
    rep.exponents = per_phase.rowwise().mean();
    rep.det_log_average = det_acc / double(P);

    rep.stderr_across_phases = Eigen::VectorXd::Zero(m);
    if (P > 1) {
        for (int i = 0; i < m; ++i) {
            const double mu = rep.exponents(i);
            double ss = 0.0;
            for (int p = 0; p < P; ++p) ss += (per_phase(i, p) - mu) * (per_phase(i, p) - mu);
            rep.stderr_across_phases(i) = std::sqrt(ss / double(P - 1)) / std::sqrt(double(P));
        }
    }

    std::sort(rep.exponents.data(), rep.exponents.data() + m, std::greater<double>());
    rep.filtration = oseledets_dims(rep.exponents, gap_tol);
    return rep;
}

std::vector<TorusPoint> default_phases(int d, int count, unsigned long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::vector<TorusPoint> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        Eigen::VectorXd x(d);
        for (int j = 0; j < d; ++j) x(j) = unif(rng);
        out.emplace_back(x);
    }
    return out;
}

}  // namespace qpc
