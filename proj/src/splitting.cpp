#include <qpc/splitting.hpp>

#include <qpc/betti.hpp>

#include <stdexcept>

namespace qpc {

template <class Scalar>
void validate_factor(const FactorInstanceT<Scalar>& F) {
    const Eigen::Index e = F.f.rows(), fdim = F.h.rows();
    if (F.f.cols() != e || F.h.cols() != fdim) throw std::invalid_argument("factor: f and h must be square");
    if (F.pi.rows() != fdim || F.pi.cols() != e)
        throw std::invalid_argument("factor: pi must be dimF x dimE");
    if (exact_rank<Scalar>(F.pi) != fdim) throw std::invalid_argument("factor: pi is not surjective");

    const ExactMatrix<Scalar> lhs = F.pi * F.f;
    const ExactMatrix<Scalar> rhs = F.h * F.pi;
    for (Eigen::Index i = 0; i < fdim; ++i)
        for (Eigen::Index j = 0; j < e; ++j)
            if (lhs(i, j) != rhs(i, j)) throw std::invalid_argument("factor: diagram does not commute (pi f != h pi)");
}

// Vectorize sigma (dimE x dimF) column-major: the constraints become
//   (I_F (x) pi) vec = vec(I_F)          [pi sigma = I]
//   (I_F (x) f - h^T (x) I_E) vec = 0    [f sigma = sigma h]
template <class Scalar>
std::optional<ExactMatrix<Scalar>> factor_splitting_exact(const FactorInstanceT<Scalar>& F) {
    validate_factor(F);
    const Eigen::Index e = F.dim_e(), fd = F.dim_f();
    const Eigen::Index unknowns = e * fd;
    const Eigen::Index eqs = fd * fd + e * fd;

    ExactMatrix<Scalar> A = ExactMatrix<Scalar>::Constant(eqs, unknowns, Scalar(0));
    ExactVector<Scalar> b = ExactVector<Scalar>::Constant(eqs, Scalar(0));

    // pi sigma = I_F: row (col c of sigma, row r of pi sigma)
    for (Eigen::Index c = 0; c < fd; ++c) {
        for (Eigen::Index r = 0; r < fd; ++r) {
            const Eigen::Index row = c * fd + r;
            for (Eigen::Index t = 0; t < e; ++t) A(row, c * e + t) = F.pi(r, t);
            b(row) = (r == c) ? Scalar(1) : Scalar(0);
        }
    }
    // f sigma - sigma h = 0
    const Eigen::Index base = fd * fd;
    for (Eigen::Index c = 0; c < fd; ++c) {
        for (Eigen::Index r = 0; r < e; ++r) {
            const Eigen::Index row = base + c * e + r;
            for (Eigen::Index t = 0; t < e; ++t) A(row, c * e + t) += F.f(r, t);
            for (Eigen::Index t = 0; t < fd; ++t) A(row, t * e + r) -= F.h(t, c);
        }
    }

    ExactSolution<Scalar> sol = solve_exact<Scalar>(std::move(A), std::move(b));
    if (!sol.consistent) return std::nullopt;

    ExactMatrix<Scalar> sigma(e, fd);
    for (Eigen::Index c = 0; c < fd; ++c)
        for (Eigen::Index r = 0; r < e; ++r) sigma(r, c) = sol.particular(c * e + r);
    return sigma;
}

template void validate_factor<Rational>(const FactorInstanceT<Rational>&);
template void validate_factor<GaussianRational>(const FactorInstanceT<GaussianRational>&);
template void validate_factor<GF5>(const FactorInstanceT<GF5>&);
template std::optional<ExactMatrix<Rational>> factor_splitting_exact<Rational>(const FactorInstanceT<Rational>&);
template std::optional<ExactMatrix<GaussianRational>> factor_splitting_exact<GaussianRational>(
    const FactorInstanceT<GaussianRational>&);
template std::optional<ExactMatrix<GF5>> factor_splitting_exact<GF5>(const FactorInstanceT<GF5>&);

const char* to_string(ObstructionVerdict v) {
    switch (v) {
        case ObstructionVerdict::obstructed: return "obstructed";
        case ObstructionVerdict::inapplicable: return "inapplicable";
        default: return "inconclusive";
    }
}

ObstructionReport obstruction_check(const ObstructionQuery& q) {
    if (q.d < 1) throw std::invalid_argument("obstruction_check: d must be >= 1");
    if (q.k < 1 || q.k >= q.m) throw std::invalid_argument("obstruction_check: need 1 <= k < m");

    ObstructionReport rep;
    rep.h2_torus = q.d >= 2 ? torus_betti(q.d).b[2] : 0;
    const BettiTable g = grassmann_betti(q.k, q.m);
    rep.h1_grassmann = g.b[1];  // = 0: the Kunneth hypothesis in degree one
    rep.h2_grassmann = g.b[2];  // = 1

    if (q.d == 1) {
        rep.verdict = ObstructionVerdict::inapplicable;
        rep.explanation = "H_2(T^1) = 0: the degree-two criterion is empty on the circle";
    } else if (!q.homology_nonzero) {
        rep.verdict = ObstructionVerdict::inconclusive;
        rep.explanation = "criterion is one-directional: a zero homology map obstructs nothing";
    } else {
        rep.verdict = ObstructionVerdict::obstructed;
        rep.explanation = "H_2(T^d) != 0, H_1(Gr) = 0 and (A_V)_* != 0: no continuous invariant "
                          "section, hence not k-dominated";
    }
    return rep;
}

}  // namespace qpc
