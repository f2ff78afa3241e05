#pragma once

// Ergodic translations on T^d = (R/Z)^d: points, frequency vectors, orbits,
// and a finite Diophantine check. Coordinates are reduced mod 1 eagerly after
// every step so rounding stays bounded independently of orbit length.

#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace qpc {

// Reduces to [0, 1). Handles the x - floor(x) == 1.0 rounding corner.
double mod1(double x);
Eigen::VectorXd mod1(Eigen::VectorXd v);

class TorusPoint {
public:
    explicit TorusPoint(Eigen::VectorXd coords) : x_(mod1(std::move(coords))) {
        if (x_.size() < 1) throw std::invalid_argument("TorusPoint: dimension must be >= 1");
    }
    static TorusPoint zero(int d) { return TorusPoint(Eigen::VectorXd::Zero(d)); }

    int dim() const { return static_cast<int>(x_.size()); }
    const Eigen::VectorXd& coords() const { return x_; }
    double operator[](int i) const { return x_(i); }

private:
    Eigen::VectorXd x_;
};

class Translation {
public:
    explicit Translation(Eigen::VectorXd frequency) : omega_(mod1(std::move(frequency))) {
        if (omega_.size() < 1) throw std::invalid_argument("Translation: dimension must be >= 1");
    }

    int dim() const { return static_cast<int>(omega_.size()); }
    const Eigen::VectorXd& frequency() const { return omega_; }

    TorusPoint step(const TorusPoint& x) const;
    TorusPoint advance(const TorusPoint& x, long n) const;  // x + n*omega mod 1

private:
    Eigen::VectorXd omega_;
};

// [x0, Tx0, ..., T^{n-1}x0], n >= 1.
std::vector<TorusPoint> orbit(const Translation& T, const TorusPoint& x0, long n);

// min over integer vectors 0 < |n|_sup <= N of dist(<n,omega>, Z) * |n|_sup^tau.
// Zero certifies a resonance within the search bound.
double diophantine_margin(const Eigen::VectorXd& omega, double tau, int N);

// Default test frequency: omega_j = frac(sqrt(p_j)), p_j the j-th prime.
Eigen::VectorXd default_frequency(int d);

// Parses a frequency component: a decimal string or one of the symbolic
// tokens "sqrt2m1", "sqrt3m1", "sqrt5m2", ...
double parse_frequency_token(const std::string& tok);
Eigen::VectorXd parse_frequency(const std::vector<std::string>& tokens);

}  // namespace qpc
