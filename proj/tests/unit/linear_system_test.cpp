#include <gtest/gtest.h>

#include <random>

#include <k3gon/oracle.hpp>

#include "fixtures.hpp"

using namespace k3gon;
using fixtures::v;

namespace {

DatumError::Kind datum_failure(IntMatrix g, DivClass A, DivClass L, std::optional<DivClass>* witness = nullptr) {
    try {
        validate_datum(validate_lattice(std::move(g)), std::move(A), std::move(L));
    } catch (const DatumError& e) {
        if (witness) *witness = e.witness();
        return e.kind();
    }
    ADD_FAILURE() << "datum was accepted";
    return DatumError::Kind::AmpleNotPositive;
}

PolarizedDatum hyperbolic_plane(DivClass L = v({5, 2})) {
    // E = (1,0) is isotropic with E.(2,1) = 1
    return validate_datum(validate_lattice({{0, 1}, {1, -2}}), v({3, 1}), std::move(L));
}

}  // namespace

TEST(Datum, ValidElmsDatum) {
    PolarizedDatum d = fixtures::elms(1);
    EXPECT_EQ(d.lattice().square(d.polarization()), 10);
}

TEST(Datum, Failures) {
    std::optional<DivClass> w;
    EXPECT_EQ(datum_failure({{0, 1}, {1, -2}}, v({3, 1}), v({2, 1}), &w), DatumError::Kind::PolarizationNotBpf);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, v({1, 0}));
    EXPECT_EQ(datum_failure({{2, 1}, {1, -2}}, v({0, 1}), v({2, 1})), DatumError::Kind::AmpleNotPositive);
    // roots (0, +-1) are orthogonal to A
    EXPECT_EQ(datum_failure({{2, 0}, {0, -2}}, v({1, 0}), v({2, 0})), DatumError::Kind::RootOrthogonalToAmple);
    EXPECT_EQ(datum_failure({{2, 1}, {1, -2}}, v({1, 0}), v({0, 1})), DatumError::Kind::PolarizationNotBig);
    // big, but negative on A
    EXPECT_EQ(datum_failure({{2, 1}, {1, -2}}, v({1, 0}), v({-1, 0})), DatumError::Kind::PolarizationNotNef);
    // (1,1).(0,1) = -1
    w.reset();
    EXPECT_EQ(datum_failure({{2, 1}, {1, -2}}, v({1, 0}), v({1, 1}), &w), DatumError::Kind::PolarizationNotNef);
    ASSERT_TRUE(w);
    EXPECT_EQ(*w, v({0, 1}));
}

TEST(LinearSystem, H0Values) {
    PolarizedDatum d = fixtures::elms(1);
    EXPECT_EQ(h0(v({2, 1}), d), 7);
    EXPECT_EQ(h0(v({0, 1}), d), 1);
    EXPECT_EQ(h0(v({0, -1}), d), 0);
    EXPECT_EQ(h0(v({0, 0}), d), 1);
    EXPECT_EQ(h0(v({1, 0}), d), 3);
    // D + Gamma has Gamma as fixed component: h0 = h0(D)
    EXPECT_EQ(h0(v({1, 1}), d), 3);
    PolarizedDatum u = hyperbolic_plane();
    EXPECT_EQ(h0(v({2, 0}), u), 3);
    EXPECT_EQ(h0(v({1, 0}), u), 2);
}

TEST(LinearSystem, H1Values) {
    PolarizedDatum d = fixtures::elms(1);
    EXPECT_EQ(h1(v({0, 0}), d), 0);
    EXPECT_EQ(h1(v({2, 1}), d), 0);
    EXPECT_EQ(h1(v({0, 1}), d), 0);
    // 2E on the hyperbolic plane: h0 = 3, square 0, so h1 = 3 - 2 = 1
    EXPECT_EQ(h1(v({2, 0}), hyperbolic_plane()), 1);
}

TEST(LinearSystem, H1RootTest) {
    PolarizedDatum d = fixtures::elms(1);
    EXPECT_TRUE(h1_vanishing_root_test(v({1, 1}), d).holds);
    Witnessed bad = h1_vanishing_root_test(v({1, 2}), d);
    EXPECT_FALSE(bad.holds);
    ASSERT_TRUE(bad.witness);
    EXPECT_EQ(*bad.witness, v({0, 1}));
    EXPECT_TRUE(h1_vanishing_root_test(v({3}), fixtures::double_plane()).holds);
}

TEST(LinearSystem, NefBpfAmple) {
    PolarizedDatum d = fixtures::elms(1);
    EXPECT_TRUE(is_nef(v({2, 1}), d).holds);
    Witnessed amp = is_ample(v({2, 1}), d);
    EXPECT_FALSE(amp.holds);
    ASSERT_TRUE(amp.witness);
    EXPECT_EQ(*amp.witness, v({0, 1}));
    EXPECT_TRUE(is_ample(v({1, 0}), d).holds);
    EXPECT_FALSE(is_nef(v({0, 1}), d).holds);
    EXPECT_TRUE(is_base_point_free(v({1, 0}), d).holds);

    PolarizedDatum u = hyperbolic_plane();
    Witnessed bpf = is_base_point_free(v({2, 1}), u);
    EXPECT_TRUE(is_nef(v({2, 1}), u).holds);
    EXPECT_FALSE(bpf.holds);
    ASSERT_TRUE(bpf.witness);
    EXPECT_EQ(*bpf.witness, v({1, 0}));
}

TEST(LinearSystem, WeylReductionRemovesFixedRoot) {
    PolarizedDatum d = fixtures::elms(1);
    WeylReduction w = weyl_reduce(v({1, 1}), d);
    EXPECT_TRUE(w.effective);
    EXPECT_EQ(w.reduced, v({1, 0}));
    EXPECT_EQ(w.removed, std::vector<DivClass>{v({0, 1})});
}

TEST(LinearSystem, WallBound) {
    PolarizedDatum d = fixtures::elms(1);
    auto b = hodge_wall_bound(d.lattice(), d.ample(), v({2, 1}));
    ASSERT_TRUE(b);
    // L is nef: the window is empty
    EXPECT_EQ(*b, 0);
    auto wide = hodge_wall_bound(d.lattice(), d.ample(), v({1, 1}));
    ASSERT_TRUE(wide);
    EXPECT_EQ(*wide, 2);
    EXPECT_FALSE(hodge_wall_bound(d.lattice(), d.ample(), v({0, 1})));
}

// Random data: standing Riemann-Roch inequality, the exact nef value, predicate
// implications and the shape of bpf witnesses.
TEST(LinearSystemProperty, RiemannRochAndPredicates) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<Int> c(-3, 3);
    int data = 0;
    while (data < 40) {
        auto d = random_datum(rng);
        ASSERT_TRUE(d);
        ++data;
        const Lattice& lat = d->lattice();
        std::size_t n = lat.rank();
        for (int t = 0; t < 25; ++t) {
            DivClass x{std::vector<Int>(n)};
            for (auto& e : x.coords) e = c(rng);
            Int x2 = lat.square(x);
            Int h = h0(x, *d);
            if (d->degree(x) > 0 && x2 >= -2) EXPECT_GE(h, x2 / 2 + 2) << to_string(x);
            Witnessed nef = is_nef(x, *d);
            if (nef.holds && x2 > 0) EXPECT_EQ(h, x2 / 2 + 2);
            if (is_ample(x, *d).holds) EXPECT_TRUE(nef.holds);
            if (nef.holds && !x.is_zero()) EXPECT_GE(x2, 0);
            if (!nef.holds && nef.witness) {
                EXPECT_EQ(lat.square(*nef.witness), -2);
                EXPECT_LT(lat.pair(*nef.witness, x), 0);
            }
            if (nef.holds) {
                Witnessed bpf = is_base_point_free(x, *d);
                if (!bpf.holds) {
                    ASSERT_TRUE(bpf.witness);
                    EXPECT_EQ(lat.square(*bpf.witness), 0);
                    EXPECT_EQ(lat.pair(*bpf.witness, x), 1);
                }
            }
            EXPECT_GE(h1(x, *d), 0);
        }
    }
}
