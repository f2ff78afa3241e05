#include <qpc/degree.hpp>

#include <qpc/weierstrass.hpp>

#include <Eigen/Geometry>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qpc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

SphereField::SphereField(int N, std::vector<Eigen::Vector3d> samples) : N_(N), s_(std::move(samples)) {
    if (N < 2) throw std::invalid_argument("SphereField: N must be >= 2");
    if (s_.size() != static_cast<size_t>(N) * static_cast<size_t>(N))
        throw std::invalid_argument("SphereField: sample count != N^2");
    for (auto& v : s_) {
        const double n = v.norm();
        if (!(n > 0.0) || !std::isfinite(n)) throw std::invalid_argument("SphereField: zero or non-finite sample");
        v /= n;
    }
}

SphereField SphereField::negated() const {
    std::vector<Eigen::Vector3d> s = s_;
    for (auto& v : s) v = -v;
    return SphereField(N_, std::move(s));
}

DegreeResult sphere_degree(const SphereField& phi) {
    const int N = phi.grid();
    if (N < 32) throw std::invalid_argument("sphere_degree: N must be >= 32");

    // phi . (d_x phi x d_y phi) * cell area, with central differences:
    // (1/4pi) * (1/16) * sum phi . ((phi_{i+1,j}-phi_{i-1,j}) x (phi_{i,j+1}-phi_{i,j-1}))
    // since each difference carries 1/(2h) and the cell contributes h^2.
    double acc = 0.0;
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            const Eigen::Vector3d dx = phi.at(i + 1, j) - phi.at(i - 1, j);
            const Eigen::Vector3d dy = phi.at(i, j + 1) - phi.at(i, j - 1);
            acc += phi.at(i, j).dot(dx.cross(dy));
        }
    }
    DegreeResult out;
    out.raw = acc / (16.0 * kPi);
    out.degree = std::lround(out.raw);
    out.residual = std::abs(out.raw - double(out.degree));
    out.resolved = out.residual < 0.1;
    return out;
}

SphereField projective_to_sphere(int N, const std::vector<std::complex<double>>& a_samples,
                                 const std::vector<std::complex<double>>& b_samples) {
    const size_t total = static_cast<size_t>(N) * static_cast<size_t>(N);
    if (a_samples.size() != total || b_samples.size() != total)
        throw std::invalid_argument("projective_to_sphere: sample count mismatch");
    std::vector<Eigen::Vector3d> s(total);
    for (size_t t = 0; t < total; ++t) {
        const auto& a = a_samples[t];
        const auto& b = b_samples[t];
        const double den = std::norm(a) + std::norm(b);
        if (!(den > 1e-12)) throw std::invalid_argument("projective_to_sphere: common-zero sample");
        const std::complex<double> ab = a * std::conj(b);
        s[t] = Eigen::Vector3d(2.0 * ab.real(), 2.0 * ab.imag(), std::norm(a) - std::norm(b)) / den;
    }
    return SphereField(N, std::move(s));
}

DegreeResult winding_number_surface(int N, const std::vector<Eigen::Vector3d>& f_samples) {
    if (f_samples.size() != static_cast<size_t>(N) * static_cast<size_t>(N))
        throw std::invalid_argument("winding_number_surface: sample count mismatch");
    for (const auto& v : f_samples) {
        if (!(v.norm() > 1e-10)) throw std::invalid_argument("winding_number_surface: sample too close to 0");
    }
    return sphere_degree(SphereField(N, f_samples));
}

long circle_winding(const std::vector<std::complex<double>>& u_samples) {
    const size_t N = u_samples.size();
    if (N < 64) throw std::invalid_argument("circle_winding: need at least 64 samples");
    double total = 0.0;
    for (size_t j = 0; j < N; ++j) {
        const std::complex<double>& cur = u_samples[j];
        const std::complex<double>& nxt = u_samples[(j + 1) % N];
        if (!(std::abs(cur) > 1e-10)) throw std::invalid_argument("circle_winding: sample too close to 0");
        total += std::arg(nxt / cur);  // in (-pi, pi]
    }
    return std::lround(total / kTwoPi);
}

bool herman_obstruction(long deg_T, long deg_Ap) {
    const long q = deg_T - 1;
    if (q == 0) return deg_Ap != 0;
    return deg_Ap % q != 0;
}

bool homotopic_to_constant(const SphereField& phi) {
    const DegreeResult r = sphere_degree(phi);
    if (!r.resolved) throw std::runtime_error("homotopic_to_constant: degree integral unresolved; refine N");
    return r.degree == 0;
}

std::vector<Eigen::Vector3d> torus_of_revolution_samples(int N, double R, double r) {
    std::vector<Eigen::Vector3d> s;
    s.reserve(static_cast<size_t>(N) * static_cast<size_t>(N));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            const double th = kTwoPi * (i + 0.5) / N;
            const double ph = kTwoPi * (j + 0.5) / N;
            const double rad = R + r * std::cos(ph);
            s.emplace_back(rad * std::cos(th), rad * std::sin(th), r * std::sin(ph));
        }
    }
    return s;
}

SphereField builtin_field(const std::string& name, int N) {
    if (name == "constant") {
        return SphereField(N, std::vector<Eigen::Vector3d>(static_cast<size_t>(N) * static_cast<size_t>(N),
                                                           Eigen::Vector3d(0, 0, 1)));
    }
    if (name == "wrap") {
        return SphereField::sample(N, [](double x, double y) {
            const double sy = std::sin(kTwoPi * y), cy = std::cos(kTwoPi * y);
            return Eigen::Vector3d(sy * std::cos(kTwoPi * x), sy * std::sin(kTwoPi * x), cy);
        });
    }
    if (name == "weierstrass") {
        // wp through the projective chart; the conjugate orients the covering
        // positively for the chart convention above, so the degree comes out
        // +2 (the order of the elliptic function).
        std::vector<std::complex<double>> a, b;
        a.reserve(static_cast<size_t>(N) * static_cast<size_t>(N));
        b.reserve(a.capacity());
        for (int i = 0; i < N; ++i) {
            for (int j = 0; j < N; ++j) {
                const std::complex<double> z((i + 0.5) / N, (j + 0.5) / N);
                a.push_back(std::conj(weierstrass_p(z)));
                b.push_back(1.0);
            }
        }
        return projective_to_sphere(N, a, b);
    }
    if (name == "torus-rev") {
        return SphereField(N, torus_of_revolution_samples(N));
    }
    throw std::invalid_argument("builtin_field: unknown field '" + name + "'");
}

}  // namespace qpc
