#include <qpc/gallery.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qpc {

namespace {

FreqVec unit_freq(int d, int axis, int value) {
    FreqVec n(static_cast<size_t>(d), 0);
    n[static_cast<size_t>(axis)] = value;
    return n;
}

Eigen::VectorXd sorted_desc(std::vector<double> v) {
    std::sort(v.begin(), v.end(), std::greater<double>());
    Eigen::VectorXd out(static_cast<Eigen::Index>(v.size()));
    for (size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
    return out;
}

GalleryEntry const_diag(const GalleryParams& p) {
    const int m = static_cast<int>(p.diag.size());
    if (m < 1) throw std::invalid_argument("const-diag: need at least one diagonal entry");
    ComplexMatrix A = ComplexMatrix::Zero(m, m);
    std::vector<double> rates;
    double absdet = 1.0;
    for (int i = 0; i < m; ++i) {
        if (!(std::abs(p.diag[static_cast<size_t>(i)]) > 0))
            throw std::invalid_argument("const-diag: zero diagonal entry");
        A(i, i) = p.diag[static_cast<size_t>(i)];
        rates.push_back(std::log(std::abs(p.diag[static_cast<size_t>(i)])));
        absdet *= std::abs(p.diag[static_cast<size_t>(i)]);
    }
    GalleryEntry e{"const-diag", FourierCocycle::constant(p.d, A), sorted_desc(rates), absdet};
    return e;
}

GalleryEntry unitary_rotation(const GalleryParams& p) {
    // [[cos 2pi x1, -sin 2pi x1], [sin 2pi x1, cos 2pi x1]]:
    // cos = (e+ + e-)/2, sin = (e+ - e-)/(2i) with e± = e^{±2pi i x1}.
    FourierCocycle C(p.d, 2, 0.5);
    const std::complex<double> I(0.0, 1.0);
    ComplexMatrix plus(2, 2), minus(2, 2);
    plus << 0.5, 0.5 * I, -0.5 * I, 0.5;
    minus << 0.5, -0.5 * I, 0.5 * I, 0.5;
    C.set_coefficient(unit_freq(p.d, 0, 1), plus);
    C.set_coefficient(unit_freq(p.d, 0, -1), minus);
    GalleryEntry e{"unitary-rotation", std::move(C), sorted_desc({0.0, 0.0}), 1.0};
    return e;
}

GalleryEntry triangular_jensen(const GalleryParams& p) {
    if (!(p.c > 0)) throw std::invalid_argument("triangular-jensen: c must be positive");
    // [[c e^{2pi i x1}, 1], [0, e^{-2pi i x1}/c]], det == 1.
    FourierCocycle C(p.d, 2, 0.5);
    ComplexMatrix top = ComplexMatrix::Zero(2, 2), mid = ComplexMatrix::Zero(2, 2),
                  bot = ComplexMatrix::Zero(2, 2);
    top(0, 0) = p.c;
    mid(0, 1) = 1.0;
    bot(1, 1) = 1.0 / p.c;
    C.set_coefficient(unit_freq(p.d, 0, 1), top);
    C.set_coefficient(unit_freq(p.d, 0, 0), mid);
    C.set_coefficient(unit_freq(p.d, 0, -1), bot);
    GalleryEntry e{"triangular-jensen", std::move(C), sorted_desc({std::log(p.c), -std::log(p.c)}), 1.0};
    return e;
}

GalleryEntry su_form(const GalleryParams& p) {
    // Default (a, b) = (2 + e^{2pi i x1}, e^{2pi i x2}): |a|^2 + |b|^2 >= 2.
    ScalarFourier a, b;
    if (p.a) {
        a = *p.a;
    } else {
        a = ScalarFourier::constant(p.d, 2.0);
        a.coeffs[unit_freq(p.d, 0, 1)] = 1.0;
    }
    if (p.b) {
        b = *p.b;
    } else if (p.d >= 2) {
        b = ScalarFourier::monomial(p.d, unit_freq(p.d, 1, 1), 1.0);
    } else {
        b = ScalarFourier::constant(p.d, 1.0);
    }
    GalleryEntry e{"su-form", build_su_form(a, b), std::nullopt, std::nullopt};
    return e;
}

GalleryEntry prop34_block(const GalleryParams& p) {
    GalleryParams seed = p;
    seed.d = 2;
    GalleryEntry a2 = triangular_jensen(seed);
    FourierCocycle C = build_block_prop34(a2.cocycle, p.d, p.k, p.m, p.lambda);

    std::vector<double> rates;
    for (int i = 0; i < p.k - 1; ++i) rates.push_back(std::log(p.lambda));
    rates.push_back(std::log(p.c));
    rates.push_back(-std::log(p.c));
    if (p.m - p.k - 1 > 0) {
        const double mu = std::pow(p.lambda, -double(p.k - 1) / double(p.m - p.k - 1));
        for (int i = 0; i < p.m - p.k - 1; ++i) rates.push_back(std::log(mu));
    }
    GalleryEntry e{"prop34-block", std::move(C), sorted_desc(rates), 1.0};
    return e;
}

}  // namespace

GalleryEntry gallery_example(const std::string& name, const GalleryParams& params) {
    if (name == "const-diag") return const_diag(params);
    if (name == "unitary-rotation") return unitary_rotation(params);
    if (name == "triangular-jensen") return triangular_jensen(params);
    if (name == "su-form") return su_form(params);
    if (name == "prop34-block") return prop34_block(params);
    throw std::invalid_argument("gallery_example: unknown name '" + name + "'");
}

std::vector<std::string> gallery_names() {
    return {"const-diag", "unitary-rotation", "triangular-jensen", "su-form", "prop34-block"};
}

SphereField induced_projective_field(const FourierCocycle& C, const Eigen::Vector2cd& v, int N) {
    if (C.fiber_dim() != 2 || C.base_dim() != 2)
        throw std::invalid_argument("induced_projective_field: needs an m = 2 cocycle on T^2");
    std::vector<std::complex<double>> a, b;
    a.reserve(static_cast<size_t>(N) * static_cast<size_t>(N));
    b.reserve(a.capacity());
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < N; ++j) {
            const TorusPoint x(Eigen::Vector2d((i + 0.5) / N, (j + 0.5) / N));
            const Eigen::Vector2cd w = C.evaluate(x) * v;
            a.push_back(w(0));
            b.push_back(w(1));
        }
    }
    return projective_to_sphere(N, a, b);
}

}  // namespace qpc
