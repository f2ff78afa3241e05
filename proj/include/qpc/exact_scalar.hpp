#pragma once

// Exact scalar types used by the splitting solver and the rational linear
// algebra: arbitrary-precision rationals (GMP-backed), Gaussian rationals,
// and small prime fields. All of them are plain value types so they compose
// with Eigen's dense containers without expression-template surprises.

#include <Eigen/Core>
#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qpc {

class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    // Parses "p/q" or "p" (arbitrary precision, base 10).
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(v);
    }

    const mpq_class& raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }
    std::string str() const { return v_.get_str(); }  // "p/q" or "p"

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    mpq_class v_;
};

// Gaussian rational a + b*i with exact rational parts. Division goes through
// the conjugate; the squared modulus is an exact rational.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(long n) : re_(n) {}
    GaussianRational(int n) : re_(static_cast<long>(n)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    GaussianRational conj() const { return {re_, -im_}; }
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussianRational& operator-=(const GaussianRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re_ * o.re_ - im_ * o.im_;
        Rational i = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        im_ = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        Rational n2 = o.norm2();
        if (n2.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        GaussianRational num = *this * o.conj();
        re_ = num.re_ / n2;
        im_ = num.im_ / n2;
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { a += b; return a; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { a -= b; return a; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { a *= b; return a; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { a /= b; return a; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
        return os << z.re_ << (z.im_.sign() < 0 ? "" : "+") << z.im_ << "i";
    }

private:
    Rational re_{0};
    Rational im_{0};
};

// Prime field GF(P), P a small prime. Division by inverse via Fermat.
template <unsigned P>
class GF {
    static_assert(P >= 2 && P < 256, "small primes only");

public:
    GF() = default;
    GF(long n) : v_(static_cast<unsigned>(((n % long(P)) + long(P)) % long(P))) {}
    GF(int n) : GF(static_cast<long>(n)) {}

    unsigned value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    GF operator-() const { return GF(long(P - v_)); }
    GF& operator+=(GF o) { v_ = (v_ + o.v_) % P; return *this; }
    GF& operator-=(GF o) { v_ = (v_ + P - o.v_) % P; return *this; }
    GF& operator*=(GF o) { v_ = (v_ * o.v_) % P; return *this; }
    GF& operator/=(GF o) {
        if (o.v_ == 0) throw std::domain_error("GF: division by zero");
        return *this *= o.inverse();
    }
    GF inverse() const {
        if (v_ == 0) throw std::domain_error("GF: zero has no inverse");
        GF r(1), b = *this;
        for (unsigned e = P - 2; e; e >>= 1) {
            if (e & 1) r *= b;
            b *= b;
        }
        return r;
    }

    friend GF operator+(GF a, GF b) { a += b; return a; }
    friend GF operator-(GF a, GF b) { a -= b; return a; }
    friend GF operator*(GF a, GF b) { a *= b; return a; }
    friend GF operator/(GF a, GF b) { a /= b; return a; }
    friend bool operator==(GF a, GF b) { return a.v_ == b.v_; }
    friend bool operator!=(GF a, GF b) { return a.v_ != b.v_; }
    friend std::ostream& operator<<(std::ostream& os, GF a) { return os << a.v_; }

private:
    unsigned v_ = 0;
};

using GF5 = GF<5>;

template <class T>
inline bool scalar_is_zero(const T& x) { return x.is_zero(); }

// ADL hooks for Eigen's numext::real/imag/conj on Gaussian rationals.
inline Rational real(const GaussianRational& z) { return z.real(); }
inline Rational imag(const GaussianRational& z) { return z.imag(); }
inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }

}  // namespace qpc

namespace Eigen {

template <>
struct NumTraits<qpc::Rational> {
    using Real = qpc::Rational;
    using NonInteger = qpc::Rational;
    using Literal = qpc::Rational;
    using Nested = qpc::Rational;
    enum {
        IsComplex = 0, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
        ReadCost = 8, AddCost = 32, MulCost = 32
    };
    static qpc::Rational epsilon() { return qpc::Rational(0); }
    static qpc::Rational dummy_precision() { return qpc::Rational(0); }
    static int digits10() { return 0; }
};

template <>
struct NumTraits<qpc::GaussianRational> {
    using Real = qpc::Rational;
    using NonInteger = qpc::GaussianRational;
    using Literal = qpc::GaussianRational;
    using Nested = qpc::GaussianRational;
    enum {
        IsComplex = 1, IsInteger = 0, IsSigned = 1, RequireInitialization = 1,
        ReadCost = 16, AddCost = 64, MulCost = 128
    };
    static qpc::Rational epsilon() { return qpc::Rational(0); }
    static qpc::Rational dummy_precision() { return qpc::Rational(0); }
    static int digits10() { return 0; }
};

template <unsigned P>
struct NumTraits<qpc::GF<P>> {
    using Real = qpc::GF<P>;
    using NonInteger = qpc::GF<P>;
    using Literal = qpc::GF<P>;
    using Nested = qpc::GF<P>;
    enum {
        IsComplex = 0, IsInteger = 1, IsSigned = 0, RequireInitialization = 1,
        ReadCost = 1, AddCost = 2, MulCost = 2
    };
    static qpc::GF<P> epsilon() { return qpc::GF<P>(0); }
    static qpc::GF<P> dummy_precision() { return qpc::GF<P>(0); }
    static int digits10() { return 0; }
};

}  // namespace Eigen
