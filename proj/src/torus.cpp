#include <qpc/torus.hpp>

#include <cmath>
#include <stdexcept>

namespace qpc {

double mod1(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r -= 1.0;
    if (r < 0.0) r += 1.0;
    return r;
}

Eigen::VectorXd mod1(Eigen::VectorXd v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = mod1(v(i));
    return v;
}

TorusPoint Translation::step(const TorusPoint& x) const {
    if (x.dim() != dim()) throw std::invalid_argument("Translation::step: dimension mismatch");
    return TorusPoint(x.coords() + omega_);
}

TorusPoint Translation::advance(const TorusPoint& x, long n) const {
    if (x.dim() != dim()) throw std::invalid_argument("Translation::advance: dimension mismatch");
    return TorusPoint(x.coords() + double(n) * omega_);
}

std::vector<TorusPoint> orbit(const Translation& T, const TorusPoint& x0, long n) {
    if (n < 1) throw std::invalid_argument("orbit: n must be >= 1");
    std::vector<TorusPoint> out;
    out.reserve(static_cast<size_t>(n));
    out.push_back(TorusPoint(x0.coords()));
    for (long j = 1; j < n; ++j) out.push_back(T.step(out.back()));
    return out;
}

double diophantine_margin(const Eigen::VectorXd& omega, double tau, int N) {
    if (N < 1) throw std::invalid_argument("diophantine_margin: N must be >= 1");
    if (!(tau > 0)) throw std::invalid_argument("diophantine_margin: tau must be > 0");
    const int d = static_cast<int>(omega.size());

    std::vector<int> n(static_cast<size_t>(d), -N);
    double best = std::numeric_limits<double>::infinity();
    while (true) {
        int sup = 0;
        double dot = 0.0;
        for (int j = 0; j < d; ++j) {
            sup = std::max(sup, std::abs(n[static_cast<size_t>(j)]));
            dot += n[static_cast<size_t>(j)] * omega(j);
        }
        if (sup > 0) {
            const double dist = std::abs(dot - std::round(dot));
            best = std::min(best, dist * std::pow(double(sup), tau));
        }
        int j = 0;
        for (; j < d; ++j) {
            if (n[static_cast<size_t>(j)] < N) { ++n[static_cast<size_t>(j)]; break; }
            n[static_cast<size_t>(j)] = -N;
        }
        if (j == d) break;
    }
    return best;
}

Eigen::VectorXd default_frequency(int d) {
    static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (d < 1 || d > static_cast<int>(std::size(primes)))
        throw std::invalid_argument("default_frequency: d out of range");
    Eigen::VectorXd w(d);
    for (int j = 0; j < d; ++j) {
        const double s = std::sqrt(double(primes[j]));
        w(j) = s - std::floor(s);
    }
    return w;
}

double parse_frequency_token(const std::string& tok) {
    if (tok == "sqrt2m1") return std::sqrt(2.0) - 1.0;
    if (tok == "sqrt3m1") return std::sqrt(3.0) - 1.0;
    if (tok == "sqrt5m2") return std::sqrt(5.0) - 2.0;
    if (tok == "sqrt7m2") return std::sqrt(7.0) - 2.0;
    size_t pos = 0;
    const double v = std::stod(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("parse_frequency_token: bad token '" + tok + "'");
    return v;
}

Eigen::VectorXd parse_frequency(const std::vector<std::string>& tokens) {
    Eigen::VectorXd w(static_cast<Eigen::Index>(tokens.size()));
    for (size_t i = 0; i < tokens.size(); ++i) w(static_cast<Eigen::Index>(i)) = parse_frequency_token(tokens[i]);
    return w;
}

}  // namespace qpc
