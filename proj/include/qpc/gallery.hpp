#pragma once

// Stock cocycles: constant diagonals, the rotation-by-x1 cocycle, the
// triangular SL2 seed with unimodular-monomial diagonal, the SU-form builder
// with its default (a, b), and the block construction over T^d. Each entry
// carries the diagnostics that are analytically known for it.

#include <qpc/degree.hpp>
#include <qpc/fourier.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qpc {

struct GalleryParams {
    std::vector<std::complex<double>> diag = {2.0, 0.5};  // const-diag entries
    double c = 2.0;        // triangular-jensen scale
    int d = 2;             // base dimension
    int k = 2;             // prop34 indices
    int m = 4;
    double lambda = 3.0;
    std::optional<ScalarFourier> a, b;  // su-form data; defaults below
};

struct GalleryEntry {
    std::string name;
    FourierCocycle cocycle;
    std::optional<Eigen::VectorXd> expected_exponents;  // sorted descending
    std::optional<double> expected_abs_det;             // when |det| is constant
};

// name in {const-diag, unitary-rotation, triangular-jensen, su-form, prop34-block}
GalleryEntry gallery_example(const std::string& name, const GalleryParams& params = {});

std::vector<std::string> gallery_names();

// The projective field x -> [A(x) v] sampled for the degree pipeline
// (m = 2, d = 2 cocycles). A continuous pair (a, b) = A(x) v with no common
// zero lifts the field through C^2 \ {0}, which forces degree 0; this helper
// exists to measure what a given construction actually achieves.
SphereField induced_projective_field(const FourierCocycle& C, const Eigen::Vector2cd& v, int N);

}  // namespace qpc
