#pragma once

// The exact splitting question of a linear factor diagram: given f: E -> E,
// an epimorphism pi: E -> F and h: F -> F with pi f = h pi, decide exactly
// whether some sigma: F -> E satisfies pi sigma = id and f sigma = sigma h
// (equivalently, ker(pi) has an f-invariant complement). Floats would make
// "no splitting" unfalsifiable, so everything here is exact.

#include <qpc/exact_linalg.hpp>

#include <optional>
#include <string>

namespace qpc {

template <class Scalar>
struct FactorInstanceT {
    ExactMatrix<Scalar> f;   // dimE x dimE
    ExactMatrix<Scalar> pi;  // dimF x dimE, full row rank
    ExactMatrix<Scalar> h;   // dimF x dimF

    Eigen::Index dim_e() const { return f.rows(); }
    Eigen::Index dim_f() const { return h.rows(); }
};

using FactorInstance = FactorInstanceT<Rational>;

// Throws std::invalid_argument when shapes are off, pi is not surjective, or
// the diagram does not commute (pi f != h pi).
template <class Scalar>
void validate_factor(const FactorInstanceT<Scalar>& F);

// Solves { pi sigma = I, f sigma - sigma h = 0 } exactly in the entries of
// sigma; returns a splitting or nullopt when none exists.
template <class Scalar>
std::optional<ExactMatrix<Scalar>> factor_splitting_exact(const FactorInstanceT<Scalar>& F);

extern template void validate_factor<Rational>(const FactorInstanceT<Rational>&);
extern template void validate_factor<GaussianRational>(const FactorInstanceT<GaussianRational>&);
extern template void validate_factor<GF5>(const FactorInstanceT<GF5>&);
extern template std::optional<ExactMatrix<Rational>> factor_splitting_exact<Rational>(
    const FactorInstanceT<Rational>&);
extern template std::optional<ExactMatrix<GaussianRational>> factor_splitting_exact<GaussianRational>(
    const FactorInstanceT<GaussianRational>&);
extern template std::optional<ExactMatrix<GF5>> factor_splitting_exact<GF5>(const FactorInstanceT<GF5>&);

enum class ObstructionVerdict { obstructed, inconclusive, inapplicable };
const char* to_string(ObstructionVerdict v);

// The hypothesis pattern of the degree-two homological obstruction for
// quasi-periodic cocycles: base T^d, fiber Gr_k(C^m).
struct ObstructionQuery {
    int d = 2;
    int k = 1;
    int m = 2;
    bool homology_nonzero = false;  // (A_V)_*: H_2(T^d) -> H_2(Gr_k(C^m)) asserted nonzero
    std::string field = "Q";
};

struct ObstructionReport {
    ObstructionVerdict verdict = ObstructionVerdict::inconclusive;
    long h2_torus = 0;       // dim H_2(T^d) = binom(d, 2)
    long h1_grassmann = 0;   // always 0 here
    long h2_grassmann = 0;   // always 1 here
    std::string explanation;
};

// obstructed  <=> d >= 2 and homology_nonzero (then A admits no continuous
//                 invariant section into Gr_k(C^m), hence is not k-dominated);
// inapplicable when d = 1 (H_2(T^1) = 0);
// inconclusive when homology_nonzero is false (the criterion is one-way).
ObstructionReport obstruction_check(const ObstructionQuery& q);

}  // namespace qpc
