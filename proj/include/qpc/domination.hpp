#pragma once

// Numerical certification / refutation of k-domination.
//
// Gap traces use the exterior-power identity
//   sum_{i<=p} log sigma_i(A^{(n)}(x)) = log ||Lambda^p A^{(n)}(x)||_2
// and track each compound product with per-step rescaling, so the trace stays
// in double range for any n even when sigma_1/sigma_m is astronomically large.
// Each step costs O(binom(m,k)^3); fine for the intended m <= 8, slow beyond.
// Section candidates (finite-time most-expanded k-planes) come from a backward
// adjoint pass with per-step re-orthonormalization plus Gram refinement.

#include <qpc/fourier.hpp>
#include <qpc/linalg.hpp>
#include <qpc/torus.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qpc {

// log sigma_k(A^{(n)}(x)) - log sigma_{k+1}(A^{(n)}(x)) for each n in n_list
// (ascending), via one pass along the orbit.
std::vector<std::pair<long, double>> singular_gap_trace(const FourierCocycle& C, const Translation& T,
                                                        const TorusPoint& x, int k,
                                                        const std::vector<long>& n_list);

struct SectionCandidate {
    bool degenerate = false;        // sigma_k/sigma_{k+1} < 1 + 1e-12: top-k plane ill-defined
    double gap_log = 0.0;           // log(sigma_k/sigma_{k+1}) at this n
    std::optional<SubspaceFrame> frame;
};

// Span of the top-k right singular vectors of A^{(n)}(x).
SectionCandidate section_candidate(const FourierCocycle& C, const Translation& T, const TorusPoint& x,
                                   int k, long n, int refinements = 1);

enum class DominationOutcome { certified, refuted, inconclusive };
const char* to_string(DominationOutcome v);

struct GapSample {
    Eigen::VectorXd phase;
    long n = 0;
    double gap_log = 0.0;
};

struct DominationVerdict {
    int k = 1;
    DominationOutcome verdict = DominationOutcome::inconclusive;
    double rate = 0.0;           // per-step gap growth at the largest scheduled n, minimized over phases
    Eigen::VectorXd worst_phase; // phase achieving the minimal normalized gap
    double gap_floor = 0.0;      // min over grid and n of (1/n) * gap
    std::vector<std::pair<long, double>> oscillation_trace;  // (n, delta_n)
    std::vector<GapSample> evidence;                         // every (phase, n, gap) row
    std::optional<GapSample> refutation_witness;
    std::string note;
};

struct DominationParams {
    int grid_per_dim = 8;
    std::vector<long> n_schedule = {25, 50, 100, 200, 400};
    double angle_tol = 0.05;      // radians, for the last-n oscillation
    double certify_floor = 0.01;  // required (1/n) gap at every scheduled n
    double refute_gap_eps = 1e-9; // gap <= eps counts as a ratio <= 1 witness
};

DominationVerdict test_domination(const FourierCocycle& C, const Translation& T, int k,
                                  const DominationParams& params = {});

// Complexified sweep: test_domination applied to A_y = complexify(C, y) per y.
std::vector<std::pair<Eigen::VectorXd, DominationVerdict>> complexified_sweep(
    const FourierCocycle& C, const Translation& T, int k, const std::vector<Eigen::VectorXd>& y_list,
    const DominationParams& params = {});

}  // namespace qpc
