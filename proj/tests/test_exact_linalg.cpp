#include <doctest.h>

#include "support/oracles.hpp"
#include "torusact/lattice.hpp"
#include "torusact/solve.hpp"

using namespace torusact;

namespace {

// u * m must stack the HNF over zero rows.
void checkHnfPostcondition(const IntMatrix& m, const HnfResult& res) {
    REQUIRE(isUnimodular(res.u));
    IntMatrix um = mul(res.u, m);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i < res.h.rows())
                CHECK(um(i, j) == res.h(i, j));
            else
                CHECK(um(i, j) == 0);
        }
}

// Integral row-span membership through the exact solver, independent of the
// HNF reduction path.
bool inRowSpan(const IntMatrix& basis, const std::vector<Int>& w) {
    if (basis.rows() == 0) {
        for (const Int& x : w)
            if (x != 0) return false;
        return true;
    }
    RatMatrix a = toRational(basis.transpose());
    RatMatrix rhs(w.size(), 1);
    for (std::size_t i = 0; i < w.size(); ++i) rhs(i, 0) = Rat(w[i]);
    return solveIntegerLinear(a, rhs).status == IntegerSolveStatus::Integral;
}

}  // namespace

TEST_CASE("hnf on the worked example") {
    IntMatrix m{{2, 4}, {1, 1}};
    HnfResult res = hnf(m);
    CHECK(res.h == IntMatrix{{1, 1}, {0, 2}});
    checkHnfPostcondition(m, res);

    // Span equality by brute force over combinations with coefficients in [-6, 6].
    Lattice fromH = Lattice::fromGenerators(2, res.h);
    for (long c1 = -6; c1 <= 6; ++c1)
        for (long c2 = -6; c2 <= 6; ++c2) {
            std::vector<Int> w{c1 * m(0, 0) + c2 * m(1, 0), c1 * m(0, 1) + c2 * m(1, 1)};
            CHECK(fromH.contains(w));
            std::vector<Int> v{c1 * res.h(0, 0) + c2 * res.h(1, 0),
                               c1 * res.h(0, 1) + c2 * res.h(1, 1)};
            CHECK(inRowSpan(m, v));
        }
}

TEST_CASE("hnf trivial cases") {
    IntMatrix id = IntMatrix::identity(2);
    HnfResult res = hnf(id);
    CHECK(res.h == id);
    CHECK(res.u == id);

    IntMatrix zero(1, 2);
    HnfResult zres = hnf(zero);
    CHECK(zres.h.rows() == 0);
    CHECK(zres.h.cols() == 2);
    checkHnfPostcondition(zero, zres);
}

TEST_CASE("hnf span equality on random matrices") {
    std::mt19937_64 rng(20240811);
    for (int iter = 0; iter < 25; ++iter) {
        IntMatrix m = oracle::randomIntMatrix(rng, 3, 3, -5, 5);
        HnfResult res = hnf(m);
        checkHnfPostcondition(m, res);
        for (std::size_t i = 0; i < m.rows(); ++i) CHECK(inRowSpan(res.h, m.row(i)));
        for (std::size_t i = 0; i < res.h.rows(); ++i) CHECK(inRowSpan(m, res.h.row(i)));
        // Canonical form is idempotent.
        CHECK(hnfBasis(res.h) == res.h);
    }
}

TEST_CASE("snf on the worked examples") {
    SnfResult res = snf(IntMatrix{{2, 0}, {0, 3}});
    CHECK(res.d == IntMatrix{{1, 0}, {0, 6}});

    SnfResult idres = snf(IntMatrix::identity(3));
    CHECK(idres.d == IntMatrix::identity(3));
    CHECK(idres.u == IntMatrix::identity(3));
    CHECK(idres.v == IntMatrix::identity(3));

    SnfResult zres = snf(IntMatrix{{0}});
    CHECK(zres.d == IntMatrix{{0}});
}

TEST_CASE("snf postconditions and minor-gcd oracle on random matrices") {
    std::mt19937_64 rng(7041776);
    std::uniform_int_distribution<std::size_t> sizeDist(1, 4);
    for (int iter = 0; iter < 25; ++iter) {
        IntMatrix m =
            oracle::randomIntMatrix(rng, sizeDist(rng), sizeDist(rng), -9, 9);
        SnfResult res = snf(m);
        CHECK(isUnimodular(res.u));
        CHECK(isUnimodular(res.v));
        CHECK(mul(mul(res.u, m), res.v) == res.d);
        CHECK(mul(res.v, res.vInv) == IntMatrix::identity(m.cols()));

        std::vector<Int> diag;
        for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (j != i) CHECK(res.d(i, j) == 0);
            diag.push_back(res.d(i, i));
        }
        for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
            CHECK(diag[i] >= 0);
            if (diag[i] != 0) CHECK(diag[i + 1] % diag[i] == 0);
            if (diag[i] == 0) CHECK(diag[i + 1] == 0);
        }

        std::vector<Int> expected = oracle::minorGcdInvariantFactors(m);
        for (std::size_t i = 0; i < diag.size(); ++i) {
            if (i < expected.size())
                CHECK(diag[i] == expected[i]);
            else
                CHECK(diag[i] == 0);
        }
    }
}

TEST_CASE("rational kernel lattice examples") {
    CHECK(rationalKernelLattice(RatMatrix{{"1", "-1/2"}}).basis() == IntMatrix{{1, 2}});
    CHECK(rationalKernelLattice(RatMatrix{{"0", "0", "0"}}) == Lattice::full(3));
    CHECK(rationalKernelLattice(RatMatrix{{"1", "0"}, {"0", "1"}}) == Lattice::trivial(2));
}

TEST_CASE("rational kernel contains exactly the brute-force solutions") {
    std::mt19937_64 rng(99251);
    std::uniform_int_distribution<long> num(-3, 3), den(1, 4);
    for (int iter = 0; iter < 15; ++iter) {
        RatMatrix m(2, 3);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 3; ++j) m(i, j) = makeRat(num(rng), den(rng));
        Lattice kernel = rationalKernelLattice(m);

        for (std::size_t r = 0; r < kernel.rank(); ++r)
            for (std::size_t i = 0; i < 2; ++i) {
                Rat acc = 0;
                for (std::size_t j = 0; j < 3; ++j) acc += m(i, j) * Rat(kernel.basis()(r, j));
                CHECK(acc == 0);
            }

        oracle::forEachBoxVector(3, 8, [&](const std::vector<long long>& u) {
            for (std::size_t i = 0; i < 2; ++i) {
                Rat acc = 0;
                for (std::size_t j = 0; j < 3; ++j)
                    acc += m(i, j) * Rat(static_cast<long>(u[j]));
                if (acc != 0) return;
            }
            std::vector<Int> v{static_cast<long>(u[0]), static_cast<long>(u[1]),
                               static_cast<long>(u[2])};
            CHECK(kernel.contains(v));
        });
    }
}

TEST_CASE("preimage lattice examples") {
    SUBCASE("scalar 2/3 pulls back to 3Z") {
        Lattice result = preimageLattice(RatMatrix{{"2/3"}}, Lattice::full(1));
        CHECK(result.basis() == IntMatrix{{3}});
        for (long u = -30; u <= 30; ++u) {
            std::vector<Int> v{u};
            CHECK(result.contains(v) == (u % 3 == 0));
        }
    }
    SUBCASE("integral matrix leaves the sublattice unchanged") {
        Lattice sub = Lattice::fromGenerators(2, IntMatrix{{2, 1}, {0, 3}});
        CHECK(preimageLattice(RatMatrix{{"1", "2"}}, sub) == sub);
    }
    SUBCASE("row (1/2, 1/3) gives an index-6 sublattice") {
        Lattice result = preimageLattice(RatMatrix{{"1/2", "1/3"}}, Lattice::full(2));
        std::vector<Int> a{2, 0}, b{0, 3};
        CHECK(result.contains(a));
        CHECK(result.contains(b));
        Int det = determinant(result.basis());
        CHECK((det == 6 || det == -6));
        oracle::forEachBoxVector(2, 12, [&](const std::vector<long long>& u) {
            bool integral = (3 * u[0] + 2 * u[1]) % 6 == 0;
            std::vector<Int> v{static_cast<long>(u[0]), static_cast<long>(u[1])};
            CHECK(result.contains(v) == integral);
        });
    }
}

TEST_CASE("unimodularity test") {
    CHECK(isUnimodular(IntMatrix{{1, 1}, {2, 1}}));
    CHECK(oracle::cofactorDeterminant(IntMatrix{{1, 1}, {2, 1}}) == -1);
    CHECK(isUnimodular(IntMatrix::identity(4)));
    CHECK_FALSE(isUnimodular(IntMatrix{{2, 0}, {0, 1}}));
    CHECK_THROWS_AS(isUnimodular(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant matches cofactor expansion on random matrices") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 20; ++iter) {
        IntMatrix m = oracle::randomIntMatrix(rng, 4, 4, -9, 9);
        CHECK(determinant(m) == oracle::cofactorDeterminant(m));
    }
}

TEST_CASE("integer linear solve") {
    SUBCASE("identity system returns the right-hand side") {
        RatMatrix rhs{{"4"}, {"-7"}};
        IntegerSolveResult r = solveIntegerLinear(RatMatrix::identity(2), rhs);
        REQUIRE(r.status == IntegerSolveStatus::Integral);
        CHECK((*r.solution) == IntMatrix{{4}, {-7}});
    }
    SUBCASE("overdetermined consistent integral system") {
        IntegerSolveResult r = solveIntegerLinear(RatMatrix{{"1"}, {"2"}}, RatMatrix{{"3"}, {"6"}});
        REQUIRE(r.status == IntegerSolveStatus::Integral);
        CHECK((*r.solution) == IntMatrix{{3}});
    }
    SUBCASE("rational but non-integral solution is rejected") {
        IntegerSolveResult r = solveIntegerLinear(RatMatrix{{"2"}}, RatMatrix{{"1"}});
        CHECK(r.status == IntegerSolveStatus::NonIntegral);
        CHECK_FALSE(r.solution.has_value());
    }
    SUBCASE("inconsistent system") {
        IntegerSolveResult r = solveIntegerLinear(RatMatrix{{"1"}, {"2"}}, RatMatrix{{"1"}, {"3"}});
        CHECK(r.status == IntegerSolveStatus::NoRationalSolution);
    }
    SUBCASE("rank-deficient coefficient matrix throws") {
        CHECK_THROWS_AS(solveIntegerLinear(RatMatrix{{"1", "2"}, {"2", "4"}},
                                           RatMatrix{{"1"}, {"2"}}),
                        RankDeficientError);
    }
}
