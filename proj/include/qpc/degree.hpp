#pragma once

// Topological invariants used as obstructions: degree of maps T^2 -> S^2
// via the pullback-of-area-form integral, winding numbers of parametric
// surfaces around the origin, circle winding numbers, and Herman's
// divisibility test.

#include <Eigen/Core>

#include <complex>
#include <string>
#include <vector>

namespace qpc {

// Unit vectors sampled on the offset grid ((i+1/2)/N, (j+1/2)/N), row-major
// with the second index fastest. Samples are normalized on construction.
class SphereField {
public:
    SphereField(int N, std::vector<Eigen::Vector3d> samples);

    // Builds by sampling (x, y) -> R^3 \ {0}; samples get normalized.
    template <class F>
    static SphereField sample(int N, F&& f) {
        std::vector<Eigen::Vector3d> s;
        s.reserve(static_cast<size_t>(N) * static_cast<size_t>(N));
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) s.push_back(f((i + 0.5) / N, (j + 0.5) / N));
        return SphereField(N, std::move(s));
    }

    int grid() const { return N_; }
    const Eigen::Vector3d& at(int i, int j) const {
        return s_[static_cast<size_t>(((i % N_ + N_) % N_)) * static_cast<size_t>(N_) +
                  static_cast<size_t>((j % N_ + N_) % N_)];
    }
    SphereField negated() const;

private:
    int N_;
    std::vector<Eigen::Vector3d> s_;
};

struct DegreeResult {
    long degree = 0;
    double raw = 0.0;
    double residual = 0.0;
    bool resolved = false;  // residual < 0.1
};

// raw = (1/4pi) sum phi . (d_x phi x d_y phi) by central differences over the
// wrapped grid; degree = nearest integer. Unresolved when residual >= 0.1
// (refine N).
DegreeResult sphere_degree(const SphereField& phi);

// [a : b] -> S^2 through w = a/b and the inverse stereographic chart
// (2 Re w, 2 Im w, |w|^2 - 1)/(|w|^2 + 1), evaluated in the homogeneous form
// (2 Re(a conj b), 2 Im(a conj b), |a|^2 - |b|^2)/(|a|^2 + |b|^2) which glues
// both charts and is smooth wherever (a, b) != (0, 0).
SphereField projective_to_sphere(int N, const std::vector<std::complex<double>>& a_samples,
                                 const std::vector<std::complex<double>>& b_samples);

// Degree of f/||f|| for f: T^2 -> R^3 \ {0}; requires min |f| > 1e-10.
DegreeResult winding_number_surface(int N, const std::vector<Eigen::Vector3d>& f_samples);

// (1/2pi) sum of phase increments unwrapped to (-pi, pi]. Requires
// min |u| > 1e-10 and at least 64 samples.
long circle_winding(const std::vector<std::complex<double>>& u_samples);

// Herman's obstruction: true when deg(T) - 1 does not divide deg(A_p).
// Convention: 0 divides only 0.
bool herman_obstruction(long deg_T, long deg_Ap);

// Hopf classification of maps T^2 -> S^2 by degree. Throws when the degree
// integral is unresolved.
bool homotopic_to_constant(const SphereField& phi);

// Bundled fields: "constant" | "wrap" | "weierstrass" | "torus-rev".
SphereField builtin_field(const std::string& name, int N);

// Raw (unnormalized) samples of the revolution torus with radii (R, r),
// centered on the z-axis.
std::vector<Eigen::Vector3d> torus_of_revolution_samples(int N, double R = 2.0, double r = 0.5);

}  // namespace qpc
