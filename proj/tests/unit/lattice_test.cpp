#include <gtest/gtest.h>

#include <random>

#include <k3gon/oracle.hpp>

#include "fixtures.hpp"

using namespace k3gon;
using fixtures::v;

namespace {

LatticeError::Kind lattice_failure(IntMatrix g) {
    try {
        validate_lattice(std::move(g));
    } catch (const LatticeError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "matrix was accepted";
    return LatticeError::Kind::NotSquare;
}

}  // namespace

TEST(Lattice, AcceptsHyperbolicEvenForm) {
    Lattice lat = validate_lattice({{2, 1}, {1, -2}});
    EXPECT_EQ(lat.rank(), 2u);
    EXPECT_EQ(lat.signature().positive, 1);
    EXPECT_EQ(lat.signature().negative, 1);
}

TEST(Lattice, RejectsBadMatrices) {
    EXPECT_EQ(lattice_failure({{2, 1}, {1, 2}}), LatticeError::Kind::WrongSignature);
    EXPECT_EQ(lattice_failure({{1}}), LatticeError::Kind::NotEven);
    EXPECT_EQ(lattice_failure({{2, 1}, {0, -2}}), LatticeError::Kind::NotSymmetric);
    EXPECT_EQ(lattice_failure({{2, 1}}), LatticeError::Kind::NotSquare);
    EXPECT_EQ(lattice_failure({{0, 0}, {0, -2}}), LatticeError::Kind::WrongSignature);
    EXPECT_EQ(lattice_failure({{-2}}), LatticeError::Kind::WrongSignature);
}

TEST(Lattice, SignatureHandlesZeroPivot) {
    Signature s = signature_of({{0, 1}, {1, -2}});
    EXPECT_EQ(s.positive, 1);
    EXPECT_EQ(s.negative, 1);
    EXPECT_EQ(s.zero, 0);
    Signature u = signature_of({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}});
    EXPECT_EQ(u.positive, 1);
    EXPECT_EQ(u.negative, 2);
}

TEST(Lattice, PairingValues) {
    Lattice lat = fixtures::elms_lattice(1);
    EXPECT_EQ(lat.square(v({2, 1})), 10);
    EXPECT_EQ(lat.pair(v({1, 0}), v({0, 1})), 1);
    EXPECT_EQ(lat.pair(RatClass(v({1, 0})), RatClass(v({2, 1}))), Rational(5));
    RatClass half = Rational(1, 2) * RatClass(v({2, 1}));
    EXPECT_EQ(lat.square(v({1, 1})), 2);
    EXPECT_EQ(lat.pair(half, half), Rational(5, 2));
    EXPECT_THROW(lat.pair(v({1}), v({1, 0})), DimensionMismatch);
}

TEST(Lattice, PairingOverflowIsReported) {
    Lattice lat = validate_lattice({{2}});
    Int big = Int{1} << 40;
    EXPECT_THROW(lat.square(v({big})), ArithmeticOverflow);
}

TEST(Lattice, Genus) {
    Lattice lat = validate_lattice({{2}});
    EXPECT_EQ(genus_of(v({3}), lat), 10);
    EXPECT_EQ(genus_of(v({2, 1}), fixtures::elms_lattice(1)), 6);
    EXPECT_EQ(genus_of(v({1, 0}), validate_lattice({{0, 1}, {1, -2}})), 1);
    EXPECT_THROW(genus_of(v({0, 1}), fixtures::elms_lattice(1)), NegativeSquare);
}

TEST(Lattice, BrillNoetherNumber) {
    EXPECT_EQ(brill_noether_rho(10, 5), -2);
    EXPECT_EQ(brill_noether_rho(6, 4), 0);
    for (Int d = 1; d < 20; ++d) EXPECT_EQ(brill_noether_rho(2 * d - 2, d), 0);
}

TEST(Lattice, GammaCandidateHandExample) {
    Lattice lat = fixtures::elms_lattice(1);
    GammaCandidate gc = gamma_candidate(v({1, 0}), v({2, 1}), 3, lat);
    EXPECT_EQ(gc.dot_L, Rational(0));
    EXPECT_EQ(gc.dot_N, Rational(1));
    // -2N + (2*5/10) L = (0, 1)
    EXPECT_EQ(gc.gamma, RatClass(v({0, 1})));
    EXPECT_EQ(gc.square, Rational(-2));
    EXPECT_THROW(gamma_candidate(v({1, 0}), v({0, 1}), 3, lat), Error);
}

TEST(Lattice, ContentAndPrimitivity) {
    EXPECT_EQ(content(v({4, -6})), 2);
    EXPECT_FALSE(is_primitive(v({4, -6})));
    EXPECT_TRUE(is_primitive(v({3, -2})));
    EXPECT_FALSE(is_primitive(v({0, 0})));
}

// Invariants under a simultaneous unimodular change of basis.
TEST(LatticeProperty, PairingTransformsCovariantly) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Int> c(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + trial % 2;
        IntMatrix g = random_hyperbolic_gram(rng, n, 8);
        IntMatrix u = random_unimodular(rng, n);
        // g' = u^T g u, and x' = u^-1 x has x'.y' = x.y: check via x = u x'
        IntMatrix gp(n, std::vector<Int>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b) gp[i][j] += u[a][i] * g[a][b] * u[b][j];
        Lattice lat = validate_lattice(g), latp = validate_lattice(gp);
        DivClass xp{std::vector<Int>(n)}, yp{std::vector<Int>(n)};
        for (auto& e : xp.coords) e = c(rng);
        for (auto& e : yp.coords) e = c(rng);
        auto apply = [&](const DivClass& z) {
            DivClass out{std::vector<Int>(n, 0)};
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out.coords[i] += u[i][j] * z.coords[j];
            return out;
        };
        EXPECT_EQ(latp.pair(xp, yp), lat.pair(apply(xp), apply(yp)));
        // bilinearity and symmetry
        EXPECT_EQ(lat.pair(xp + yp, yp), lat.pair(xp, yp) + lat.square(yp));
        EXPECT_EQ(lat.pair(xp, yp), lat.pair(yp, xp));
        EXPECT_EQ(lat.pair(3 * xp, yp), 3 * lat.pair(xp, yp));
        if (lat.square(xp) > 0) EXPECT_EQ(genus_of(xp, lat), genus_of(xp, lat));
    }
}

TEST(LatticeProperty, HodgeIndexInequality) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<Int> c(-5, 5);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + trial % 2;
        Lattice lat = validate_lattice(random_hyperbolic_gram(rng, n, 8));
        DivClass x{std::vector<Int>(n)}, y{std::vector<Int>(n)};
        for (auto& e : x.coords) e = c(rng);
        for (auto& e : y.coords) e = c(rng);
        if (lat.square(x) <= 0) continue;
        Int xy = lat.pair(x, y);
        EXPECT_GE(xy * xy, lat.square(x) * lat.square(y));
    }
}

TEST(LatticeProperty, GammaCandidateIsOrthogonalToL) {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<Int> c(-4, 4);
    int checked = 0;
    while (checked < 300) {
        std::size_t n = 2 + checked % 2;
        Lattice lat = validate_lattice(random_hyperbolic_gram(rng, n, 8));
        DivClass N{std::vector<Int>(n)}, L{std::vector<Int>(n)};
        for (auto& e : N.coords) e = c(rng);
        for (auto& e : L.coords) e = c(rng);
        if (lat.square(L) <= 0) continue;
        Int d = lat.pair(N, L) - lat.square(N);
        GammaCandidate gc = gamma_candidate(N, L, d, lat);
        EXPECT_EQ(gc.dot_L, Rational(0));
        EXPECT_EQ(lat.pair(gc.gamma, L), Rational(0));
        ++checked;
    }
}
