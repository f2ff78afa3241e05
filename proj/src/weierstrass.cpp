#include <qpc/weierstrass.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace qpc {

namespace {

using cd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

struct LatticeData {
    std::vector<cd> points;  // 0 < |omega| <= 6
    double S4, S6, S8;       // tail sums sum_{|omega|>6} omega^{-2k}
    double g2;
};

double eisenstein_E4_at_i() {
    const double q = std::exp(-2.0 * kPi);
    double s = 0.0;
    double qn = 1.0;
    for (int n = 1; n <= 12; ++n) {  // q^12 ~ 1e-33: machine exact
        qn *= q;
        s += double(n) * double(n) * double(n) * qn / (1.0 - qn);
    }
    return 1.0 + 240.0 * s;
}

LatticeData build_lattice() {
    LatticeData L;
    const double pi4 = kPi * kPi * kPi * kPi;
    const double pi8 = pi4 * pi4;
    const double E4 = eisenstein_E4_at_i();
    const double G4 = (pi4 / 45.0) * E4;          // 2 zeta(4) E4
    const double G8 = (pi8 / 4725.0) * E4 * E4;   // 2 zeta(8) E8, E8 = E4^2
    L.g2 = 60.0 * G4;

    cd P4 = 0.0, P6 = 0.0, P8 = 0.0;
    for (int a = -6; a <= 6; ++a) {
        for (int b = -6; b <= 6; ++b) {
            if (a == 0 && b == 0) continue;
            const cd w(a, b);
            if (std::norm(w) > 36.0) continue;
            L.points.push_back(w);
            const cd w2 = w * w, w4 = w2 * w2;
            P4 += 1.0 / w4;
            P6 += 1.0 / (w4 * w2);
            P8 += 1.0 / (w4 * w4);
        }
    }
    // The partial sums are real by the omega -> i*omega symmetry.
    L.S4 = G4 - P4.real();
    L.S6 = -P6.real();  // G6(i) = 0
    L.S8 = G8 - P8.real();
    return L;
}

const LatticeData& lattice() {
    static const LatticeData L = build_lattice();
    return L;
}

cd reduce_to_cell(cd z) {
    return {z.real() - std::round(z.real()), z.imag() - std::round(z.imag())};
}

}  // namespace

std::complex<double> weierstrass_p(std::complex<double> z) {
    const LatticeData& L = lattice();
    z = reduce_to_cell(z);
    if (std::abs(z) < 1e-9) throw std::domain_error("weierstrass_p: pole at a lattice point");

    cd s = 1.0 / (z * z);
    for (const cd& w : L.points) {
        const cd dz = z - w;
        s += 1.0 / (dz * dz) - 1.0 / (w * w);
    }
    const cd z2 = z * z, z4 = z2 * z2;
    s += 3.0 * z2 * L.S4 + 5.0 * z4 * L.S6 + 7.0 * z4 * z2 * L.S8;
    return s;
}

std::complex<double> weierstrass_p_prime(std::complex<double> z) {
    const LatticeData& L = lattice();
    z = reduce_to_cell(z);
    if (std::abs(z) < 1e-9) throw std::domain_error("weierstrass_p_prime: pole at a lattice point");

    cd s = -2.0 / (z * z * z);
    for (const cd& w : L.points) {
        const cd dz = z - w;
        s += -2.0 / (dz * dz * dz);
    }
    const cd z2 = z * z, z3 = z2 * z;
    s += 6.0 * z * L.S4 + 20.0 * z3 * L.S6 + 42.0 * z3 * z2 * L.S8;
    return s;
}

double lemniscatic_g2() { return lattice().g2; }

}  // namespace qpc
