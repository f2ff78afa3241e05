#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qpc/betti.hpp>
#include <qpc/splitting.hpp>

#include "gf5_agreement.hpp"

#include <random>

using namespace qpc;

namespace {

long binom(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
}

RationalMatrix rmat(std::initializer_list<std::initializer_list<long>> rows) {
    RationalMatrix M(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
    Eigen::Index i = 0;
    for (const auto& r : rows) {
        Eigen::Index j = 0;
        for (long v : r) M(i, j++) = Rational(v);
        ++i;
    }
    return M;
}

bool is_exact_splitting(const FactorInstance& F, const RationalMatrix& sigma) {
    const RationalMatrix pid = F.pi * sigma;
    for (Eigen::Index i = 0; i < pid.rows(); ++i)
        for (Eigen::Index j = 0; j < pid.cols(); ++j)
            if (pid(i, j) != (i == j ? Rational(1) : Rational(0))) return false;
    const RationalMatrix comm = F.f * sigma - sigma * F.h;
    for (Eigen::Index i = 0; i < comm.rows(); ++i)
        for (Eigen::Index j = 0; j < comm.cols(); ++j)
            if (comm(i, j) != Rational(0)) return false;
    return true;
}

}  // namespace

TEST_CASE("torus Betti tables are binomial rows") {
    CHECK(torus_betti(1).b == std::vector<long>{1, 1});
    CHECK(torus_betti(2).b == std::vector<long>{1, 2, 1});
    CHECK(torus_betti(3).b == std::vector<long>{1, 3, 3, 1});
    CHECK(torus_betti(3).b[2] == binom(3, 2));
}

TEST_CASE("grassmann Betti: projective line and Gr_2(C^4)") {
    CHECK(grassmann_betti(1, 2).b == std::vector<long>{1, 0, 1});
    // partitions in a 2x2 box by weight: {}, {1}, {2,11}, {21}, {22}
    CHECK(grassmann_betti(2, 4).b == std::vector<long>{1, 0, 1, 0, 2, 0, 1, 0, 1});
}

TEST_CASE("grassmann Betti: b_2 = 1 and the odd rows vanish, all k < m <= 8") {
    for (int m = 2; m <= 8; ++m) {
        for (int k = 1; k < m; ++k) {
            const BettiTable t = grassmann_betti(k, m);
            CHECK(t.b.size() == static_cast<size_t>(2 * k * (m - k) + 1));
            CHECK(t.b[0] == 1);
            if (t.b.size() > 2) CHECK(t.b[2] == 1);  // the unique one-box partition
            for (size_t i = 1; i < t.b.size(); i += 2) CHECK(t.b[i] == 0);
        }
    }
}

TEST_CASE("grassmann Betti: palindromic, k <-> m-k symmetric, total = binom(m,k)") {
    for (int m = 2; m <= 8; ++m) {
        for (int k = 1; k < m; ++k) {
            const BettiTable t = grassmann_betti(k, m);
            CHECK(t.palindromic());
            CHECK(t.total() == binom(m, k));
            CHECK(t.b == grassmann_betti(m - k, m).b);
        }
    }
}

TEST_CASE("kunneth convolution") {
    const BettiTable circle = torus_betti(1);
    CHECK(kunneth(circle, circle).b == std::vector<long>{1, 2, 1});

    BettiTable point;
    point.space = "pt";
    point.b = {1};
    CHECK(kunneth(grassmann_betti(2, 4), point).b == grassmann_betti(2, 4).b);

    CHECK(kunneth(torus_betti(2), grassmann_betti(1, 2)).b == std::vector<long>{1, 2, 2, 2, 1});
}

TEST_CASE("torus Betti is the kunneth power of the circle") {
    BettiTable acc = torus_betti(1);
    for (int d = 2; d <= 6; ++d) {
        acc = kunneth(acc, torus_betti(1));
        CHECK(acc.b == torus_betti(d).b);
    }
}

TEST_CASE("splitting: block diagonal factors split, and sigma is the expected column") {
    FactorInstance F;
    F.f = rmat({{1, 0}, {0, 2}});
    F.pi = rmat({{0, 1}});
    F.h = rmat({{2}});
    const auto sigma = factor_splitting_exact(F);
    REQUIRE(sigma.has_value());
    CHECK((*sigma)(0, 0) == Rational(0));  // f sigma = sigma h forces sigma_1 = 0
    CHECK((*sigma)(1, 0) == Rational(1));
    CHECK(is_exact_splitting(F, *sigma));
}

TEST_CASE("splitting: the Jordan block admits none") {
    FactorInstance F;
    F.f = rmat({{1, 1}, {0, 1}});
    F.pi = rmat({{0, 1}});
    F.h = rmat({{1}});
    CHECK_FALSE(factor_splitting_exact(F).has_value());
}

TEST_CASE("splitting: pi = identity forces sigma = identity") {
    FactorInstance F;
    F.f = rmat({{1, 2}, {3, 4}});
    F.pi = rmat({{1, 0}, {0, 1}});
    F.h = F.f;
    const auto sigma = factor_splitting_exact(F);
    REQUIRE(sigma.has_value());
    CHECK((*sigma)(0, 0) == Rational(1));
    CHECK((*sigma)(0, 1) == Rational(0));
    CHECK((*sigma)(1, 0) == Rational(0));
    CHECK((*sigma)(1, 1) == Rational(1));
}

TEST_CASE("splitting over Gaussian rationals") {
    FactorInstanceT<GaussianRational> F;
    const GaussianRational i(Rational(0), Rational(1));
    F.f = ExactMatrix<GaussianRational>(2, 2);
    F.f << i, GaussianRational(0), GaussianRational(0), GaussianRational(1);
    F.pi = ExactMatrix<GaussianRational>(1, 2);
    F.pi << GaussianRational(0), GaussianRational(1);
    F.h = ExactMatrix<GaussianRational>(1, 1);
    F.h << GaussianRational(1);
    const auto sigma = factor_splitting_exact(F);
    REQUIRE(sigma.has_value());
    CHECK((*sigma)(0, 0) == GaussianRational(0));  // (i - 1) sigma_1 = 0
    CHECK((*sigma)(1, 0) == GaussianRational(1));
}

TEST_CASE("malformed factor instances are rejected") {
    FactorInstance F;
    F.f = rmat({{1, 0}, {0, 1}});
    F.pi = rmat({{0, 0}});  // not surjective
    F.h = rmat({{1}});
    CHECK_THROWS_AS(factor_splitting_exact(F), std::invalid_argument);

    F.pi = rmat({{0, 1}});
    F.f = rmat({{1, 1}, {1, 1}});
    F.h = rmat({{3}});  // pi f = (1,1) but h pi = (0,3): does not commute
    CHECK_THROWS_AS(factor_splitting_exact(F), std::invalid_argument);
}

TEST_CASE("GF(5) solver agrees with brute force on 100 random instances") {
    const auto r = testsup::gf5_brute_force_agreement(100, 20240506);
    CHECK(r.total == 100);
    CHECK(r.agreed == 100);
    CHECK(r.splittable > 0);  // the sample must exercise both outcomes
    CHECK(r.splittable < 100);
}

TEST_CASE("obstruction checker verdicts") {
    ObstructionQuery q;
    q.d = 2;
    q.k = 1;
    q.m = 2;
    q.homology_nonzero = true;
    CHECK(obstruction_check(q).verdict == ObstructionVerdict::obstructed);

    q.d = 1;
    CHECK(obstruction_check(q).verdict == ObstructionVerdict::inapplicable);

    q.d = 3;
    q.k = 2;
    q.m = 4;
    q.homology_nonzero = false;
    CHECK(obstruction_check(q).verdict == ObstructionVerdict::inconclusive);
}

TEST_CASE("obstruction report carries the homology dimensions it used") {
    ObstructionQuery q;
    q.d = 3;
    q.k = 2;
    q.m = 4;
    q.homology_nonzero = true;
    const ObstructionReport r = obstruction_check(q);
    CHECK(r.verdict == ObstructionVerdict::obstructed);
    CHECK(r.h2_torus == 3);       // binom(3,2)
    CHECK(r.h1_grassmann == 0);
    CHECK(r.h2_grassmann == 1);
}
