#pragma once

// Lyapunov spectrum of a cocycle over an ergodic translation by QR deflation
// along the orbit: multiply by A, re-orthonormalize, accumulate the log of
// the triangular diagonal. Gives all m exponents in one pass; the exponent
// sum ties to the orbit average of log|det A| up to rounding.

#include <qpc/fourier.hpp>
#include <qpc/torus.hpp>

#include <optional>
#include <vector>

namespace qpc {

struct ExponentCluster {
    int dim = 0;
    double mean = 0.0;
};

struct Filtration {
    std::vector<ExponentCluster> clusters;  // descending means
    std::optional<int> eplus_dim;           // dim of the positive part; absent when ambiguous
    bool ambiguous = false;                 // some exponent within gap_tol of 0
    double gap_tol = 0.05;
};

struct LyapunovReport {
    Eigen::VectorXd exponents;      // sorted descending, per-step natural-log rates
    long n_used = 0;
    int phases_used = 0;
    Eigen::VectorXd stderr_across_phases;  // standard error of the mean, per exponent
    Filtration filtration;          // clustering at the default gap_tol
    double det_log_average = 0.0;   // (1/n) sum_j log|det A(T^j x)|, phase-averaged
};

inline constexpr double kDefaultGapTol = 0.05;

// Greedy gap clustering of the sorted exponents; a new cluster starts when
// consecutive exponents differ by more than gap_tol. The E+/E- split is
// reported only when no exponent sits within gap_tol of zero.
Filtration oseledets_dims(const Eigen::VectorXd& sorted_exponents, double gap_tol = kDefaultGapTol);
Filtration oseledets_dims(const LyapunovReport& report, double gap_tol = kDefaultGapTol);

// Deterministic given (C, T, n, phases). Throws on non-finite accumulation
// (a singular evaluation along the orbit).
LyapunovReport lyapunov_spectrum(const FourierCocycle& C, const Translation& T, long n,
                                 const std::vector<TorusPoint>& phases,
                                 double gap_tol = kDefaultGapTol);

// Fixed-seed phase sample for reproducible runs.
std::vector<TorusPoint> default_phases(int d, int count = 8, unsigned long seed = 20240211);

}  // namespace qpc
