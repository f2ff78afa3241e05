#include <qpc/domination.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qpc {

namespace {

std::vector<std::vector<int>> combinations(int m, int p) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) c[static_cast<size_t>(i)] = i;
    while (true) {
        out.push_back(c);
        int i = p - 1;
        while (i >= 0 && c[static_cast<size_t>(i)] == m - p + i) --i;
        if (i < 0) break;
        ++c[static_cast<size_t>(i)];
        for (int j = i + 1; j < p; ++j) c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

// Lambda^p M: matrix of p x p minors over lexicographic index sets.
ComplexMatrix compound_matrix(const ComplexMatrix& M, const std::vector<std::vector<int>>& combos) {
    const size_t C = combos.size();
    const int p = static_cast<int>(combos.front().size());
    ComplexMatrix out(static_cast<Eigen::Index>(C), static_cast<Eigen::Index>(C));
    ComplexMatrix sub(p, p);
    for (size_t I = 0; I < C; ++I) {
        for (size_t J = 0; J < C; ++J) {
            for (int r = 0; r < p; ++r)
                for (int c = 0; c < p; ++c)
                    sub(r, c) = M(combos[I][static_cast<size_t>(r)], combos[J][static_cast<size_t>(c)]);
            out(static_cast<Eigen::Index>(I), static_cast<Eigen::Index>(J)) = sub.determinant();
        }
    }
    return out;
}

// Tracks log ||Lambda^p (A_n ... A_1)||_2 with per-step Frobenius rescaling.
class CompoundNormTracker {
public:
    CompoundNormTracker(int m, int p) : p_(p) {
        if (p > 0 && p <= m) {
            combos_ = combinations(m, p);
            const auto C = static_cast<Eigen::Index>(combos_.size());
            M_ = ComplexMatrix::Identity(C, C);
        }
    }

    void step(const ComplexMatrix& A) {
        if (p_ == 0) return;  // Lambda^0 = 1 identically
        M_ = compound_matrix(A, combos_) * M_;
        const double f = M_.norm();
        if (!(f > 0.0) || !std::isfinite(f)) {
            dead_ = true;
            return;
        }
        M_ /= f;
        log_scale_ += std::log(f);
    }

    // log of the top singular value of the accumulated compound product.
    double log_top() const {
        if (p_ == 0) return 0.0;
        if (dead_) return -std::numeric_limits<double>::infinity();
        Eigen::JacobiSVD<ComplexMatrix> s(M_);
        return log_scale_ + std::log(s.singularValues()(0));
    }

private:
    int p_;
    std::vector<std::vector<int>> combos_;
    ComplexMatrix M_;
    double log_scale_ = 0.0;
    bool dead_ = false;
};

ComplexMatrix thin_orthonormalize(const ComplexMatrix& W) {
    Eigen::HouseholderQR<ComplexMatrix> f(W);
    return f.householderQ() * ComplexMatrix::Identity(W.rows(), W.cols());
}

// Deterministic start frame for the subspace iteration.
ComplexMatrix seed_frame(int m, int k) {
    std::mt19937_64 rng(0x5eedf7a3u + static_cast<unsigned>(m * 31 + k));
    std::normal_distribution<double> g(0.0, 1.0);
    ComplexMatrix W(m, k);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) W(i, j) = {g(rng), g(rng)};
    return thin_orthonormalize(W);
}

}  // namespace

std::vector<std::pair<long, double>> singular_gap_trace(const FourierCocycle& C, const Translation& T,
                                                        const TorusPoint& x, int k,
                                                        const std::vector<long>& n_list) {
    const int m = C.fiber_dim();
    if (k < 1 || k >= m) throw std::invalid_argument("singular_gap_trace: need 1 <= k < m");
    if (n_list.empty()) throw std::invalid_argument("singular_gap_trace: empty schedule");
    if (!std::is_sorted(n_list.begin(), n_list.end()))
        throw std::invalid_argument("singular_gap_trace: n_list must be ascending");
    if (n_list.front() < 1) throw std::invalid_argument("singular_gap_trace: n must be >= 1");

    CompoundNormTracker lo(m, k - 1), mid(m, k), hi(m, k + 1);

    std::vector<std::pair<long, double>> trace;
    trace.reserve(n_list.size());
    size_t next = 0;
    TorusPoint p = x;
    for (long j = 0; j < n_list.back() && next < n_list.size(); ++j) {
        const ComplexMatrix A = C.evaluate(p);
        lo.step(A);
        mid.step(A);
        hi.step(A);
        p = T.step(p);
        if (j + 1 == n_list[next]) {
            // log sigma_k - log sigma_{k+1} = 2 g_k - g_{k-1} - g_{k+1}
            const double gap = 2.0 * mid.log_top() - lo.log_top() - hi.log_top();
            trace.emplace_back(n_list[next], gap);
            ++next;
        }
    }
    return trace;
}

SectionCandidate section_candidate(const FourierCocycle& C, const Translation& T, const TorusPoint& x,
                                   int k, long n, int refinements) {
    const int m = C.fiber_dim();
    if (k < 1 || k >= m) throw std::invalid_argument("section_candidate: need 1 <= k < m");
    if (n < 1) throw std::invalid_argument("section_candidate: n must be >= 1");

    SectionCandidate out;
    out.gap_log = singular_gap_trace(C, T, x, k, {n}).front().second;
    if (!(out.gap_log > std::log1p(1e-12))) {
        out.degenerate = true;
        return out;
    }

    const std::vector<TorusPoint> pts = orbit(T, x, n);
    std::vector<ComplexMatrix> factors;
    factors.reserve(static_cast<size_t>(n));
    for (const TorusPoint& pt : pts) factors.push_back(C.evaluate(pt));

    // (A^{(n)})^* = A(x)^* A(Tx)^* ... A(T^{n-1}x)^*: apply adjoints from the
    // far end; the image of a generic frame is the top-k right subspace.
    ComplexMatrix W = seed_frame(m, k);
    auto backward = [&](ComplexMatrix V) {
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
            V = thin_orthonormalize(it->adjoint() * V);
        return V;
    };
    auto forward = [&](ComplexMatrix V) {
        for (const auto& A : factors) V = thin_orthonormalize(A * V);
        return V;
    };

    W = backward(W);
    for (int r = 0; r < refinements; ++r) W = backward(forward(W));

    out.frame = SubspaceFrame(m, std::move(W));
    return out;
}

const char* to_string(DominationOutcome v) {
    switch (v) {
        case DominationOutcome::certified: return "certified";
        case DominationOutcome::refuted: return "refuted";
        default: return "inconclusive";
    }
}

DominationVerdict test_domination(const FourierCocycle& C, const Translation& T, int k,
                                  const DominationParams& params) {
    const int m = C.fiber_dim();
    const int d = C.base_dim();
    if (k < 1 || k >= m) throw std::invalid_argument("test_domination: need 1 <= k < m");
    if (params.grid_per_dim < 8) throw std::invalid_argument("test_domination: grid_per_dim must be >= 8");
    if (params.n_schedule.empty() || !std::is_sorted(params.n_schedule.begin(), params.n_schedule.end()))
        throw std::invalid_argument("test_domination: bad n schedule");

    const std::vector<TorusPoint> grid = phase_grid(d, params.grid_per_dim);
    const long n_last = params.n_schedule.back();

    DominationVerdict out;
    out.k = k;

    // Gap evidence over the whole grid and schedule.
    double floor = std::numeric_limits<double>::infinity();
    std::optional<GapSample> witness;
    double rate = std::numeric_limits<double>::infinity();
    for (const TorusPoint& x : grid) {
        const auto trace = singular_gap_trace(C, T, x, k, params.n_schedule);
        for (const auto& [n, gap] : trace) {
            out.evidence.push_back(GapSample{x.coords(), n, gap});
            const double normalized = gap / double(n);
            if (normalized < floor) {
                floor = normalized;
                out.worst_phase = x.coords();
            }
            if (!witness && gap <= params.refute_gap_eps) witness = GapSample{x.coords(), n, gap};
            if (n == n_last) rate = std::min(rate, normalized);
        }
    }
    out.gap_floor = floor;
    out.rate = rate;
    out.refutation_witness = witness;

    // delta_n: max principal angle between section candidates at 2d-adjacent
    // grid phases (wraparound stencil), skipping degenerate candidates.
    const int G = params.grid_per_dim;
    const auto flat = [&](const std::vector<int>& idx) {
        size_t f = 0;
        for (int j = 0; j < d; ++j) f = f * static_cast<size_t>(G) + static_cast<size_t>(idx[static_cast<size_t>(j)]);
        return f;
    };
    for (long n : params.n_schedule) {
        std::vector<std::optional<SubspaceFrame>> frames(grid.size());
        bool any_degenerate = false;
        for (size_t i = 0; i < grid.size(); ++i) {
            SectionCandidate s = section_candidate(C, T, grid[i], k, n);
            if (s.degenerate) { any_degenerate = true; continue; }
            frames[i] = std::move(s.frame);
        }
        double delta = 0.0;
        std::vector<int> idx(static_cast<size_t>(d), 0);
        while (true) {
            const size_t i = flat(idx);
            for (int j = 0; j < d; ++j) {
                std::vector<int> nb = idx;
                nb[static_cast<size_t>(j)] = (nb[static_cast<size_t>(j)] + 1) % G;
                const size_t i2 = flat(nb);
                if (frames[i] && frames[i2])
                    delta = std::max(delta, principal_angle(*frames[i], *frames[i2]));
            }
            int j = d - 1;
            for (; j >= 0; --j) {
                if (++idx[static_cast<size_t>(j)] < G) break;
                idx[static_cast<size_t>(j)] = 0;
            }
            if (j < 0) break;
        }
        if (any_degenerate) delta = std::max(delta, 0.5 * std::numbers::pi);
        out.oscillation_trace.emplace_back(n, delta);
    }

    // Verdict (see DominationParams for the thresholds).
    const size_t S = params.n_schedule.size();
    bool oscillation_stuck = S >= 1;
    for (size_t i = S >= 3 ? S - 3 : 0; i < S; ++i)
        oscillation_stuck = oscillation_stuck && out.oscillation_trace[i].second >= 0.5;
    const double delta_last = out.oscillation_trace.back().second;

    if (witness) {
        out.verdict = DominationOutcome::refuted;
        out.note = "singular value ratio <= 1 witnessed";
    } else if (oscillation_stuck) {
        out.verdict = DominationOutcome::refuted;
        out.note = "section oscillation bounded away from 0 across the last doublings";
    } else if (floor >= params.certify_floor && delta_last < params.angle_tol) {
        out.verdict = DominationOutcome::certified;
        out.note = "uniform gap growth and settled section candidate";
    } else {
        out.verdict = DominationOutcome::inconclusive;
        out.note = "no refutation witness, but gap floor or oscillation fails the certification bar";
    }
    return out;
}

std::vector<std::pair<Eigen::VectorXd, DominationVerdict>> complexified_sweep(
    const FourierCocycle& C, const Translation& T, int k, const std::vector<Eigen::VectorXd>& y_list,
    const DominationParams& params) {
    std::vector<std::pair<Eigen::VectorXd, DominationVerdict>> out;
    out.reserve(y_list.size());
    for (const auto& y : y_list) out.emplace_back(y, test_domination(complexify(C, y), T, k, params));
    return out;
}

}  // namespace qpc
