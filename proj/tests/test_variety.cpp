#include <gtest/gtest.h>

#include <stdexcept>

#include "cobord/linalg.hpp"
#include "cobord/variety.hpp"

using namespace cobord;

namespace {

Variety hypersurface(int degree, int ambient_dim) {
    return Variety::make("X" + std::to_string(degree) + "_P" + std::to_string(ambient_dim),
                         Ambient({ambient_dim}), {{degree}});
}

Variety milnor(int m, int n) {
    return Variety::make("H" + std::to_string(m) + "_" + std::to_string(n), Ambient({m, n}),
                         {{1, 1}});
}

TEST(Partitions, CanonicalEnumeration) {
    auto p4 = partitions_of(4);
    std::vector<Partition> expect = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(p4, expect);
    EXPECT_EQ(partitions_of(0), std::vector<Partition>{{}});
    EXPECT_EQ(partitions_of(8).size(), 22u);
    EXPECT_EQ(partition_chern_label({2, 1, 1}), "c2*c1^2");
    EXPECT_EQ(partition_chern_label({}), "1");
    EXPECT_EQ(partition_str({3, 1}), "(3,1)");
}

TEST(Linalg, ExactSolve) {
    Matrix a = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    auto x = solve_linear(a, {Rational(3), Rational(4)});
    EXPECT_EQ(x[0], 1);
    EXPECT_EQ(x[1], 1);

    Matrix frac = {{make_rational(1, 2), Rational(0)}, {Rational(0), make_rational(1, 3)}};
    auto y = solve_linear(frac, {Rational(1), Rational(1)});
    EXPECT_EQ(y[0], 2);
    EXPECT_EQ(y[1], 3);

    Matrix sing = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    EXPECT_THROW(solve_linear(sing, {Rational(1), Rational(1)}), std::domain_error);
    EXPECT_FALSE(invertible(sing));
    EXPECT_TRUE(invertible(a));
}

TEST(Chow, DegreeMap) {
    Ambient p1p1({1, 1});
    auto r = chow_ring(p1p1);
    auto h1 = hyperplane(r, 0), h2 = hyperplane(r, 1);
    EXPECT_EQ(chow_degree(p1p1, h1 * h2), 1);
    EXPECT_EQ(chow_degree(p1p1, (h1 + h2) * (h1 + h2)), 2);

    Ambient p2({2});
    EXPECT_EQ(chow_degree(p2, GradedPolynomial::one(chow_ring(p2))), 0);
    EXPECT_EQ(chow_degree(Ambient{}, GradedPolynomial::one(chow_ring(Ambient{}))), 1);
}

TEST(Chow, UnitInverse) {
    auto r = chow_ring(Ambient({3}));
    auto h = hyperplane(r, 0);
    auto inv = inverse_of_unit(GradedPolynomial::one(r) + h * Rational(3));
    EXPECT_EQ(inv.coefficient({0}), 1);
    EXPECT_EQ(inv.coefficient({1}), -3);
    EXPECT_EQ(inv.coefficient({2}), 9);
    EXPECT_EQ(inv.coefficient({3}), -27);
    EXPECT_EQ(inv * (GradedPolynomial::one(r) + h * Rational(3)), GradedPolynomial::one(r));

    EXPECT_THROW(inverse_of_unit(h), std::domain_error);
    auto k = Ring::make("K", {GradedVariable{"beta", -1, true, 0}});
    EXPECT_THROW(
        inverse_of_unit(GradedPolynomial::one(k) + GradedPolynomial::variable(k, "beta")),
        std::domain_error);
}

TEST(Newton, FrozenPolynomials) {
    auto c = [](const RingPtr& r, int k) {
        return GradedPolynomial::variable(r, "c" + std::to_string(k));
    };
    auto r1 = chern_class_ring(1);
    EXPECT_EQ(newton_sd(1), c(r1, 1));

    auto r2 = chern_class_ring(2);
    EXPECT_EQ(newton_sd(2), c(r2, 1).pow(2) - c(r2, 2) * Rational(2));

    auto r3 = chern_class_ring(3);
    EXPECT_EQ(newton_sd(3),
              c(r3, 1).pow(3) - c(r3, 1) * c(r3, 2) * Rational(3) + c(r3, 3) * Rational(3));

    auto r4 = chern_class_ring(4);
    EXPECT_EQ(newton_sd(4), c(r4, 1).pow(4) - c(r4, 1).pow(2) * c(r4, 2) * Rational(4) +
                                c(r4, 2).pow(2) * Rational(2) + c(r4, 1) * c(r4, 3) * Rational(4) -
                                c(r4, 4) * Rational(4));

    for (int d = 1; d <= 8; ++d)
        EXPECT_TRUE(newton_sd(d).is_homogeneous(d)) << "d=" << d;
}

TEST(Newton, SymbolicRootsOracle) {
    // Evaluate s_d at the elementary symmetric polynomials of four formal
    // roots and compare against the power sum directly.
    auto x = Ring::make("Roots", {{"x1", 1}, {"x2", 1}, {"x3", 1}, {"x4", 1}});
    std::vector<GradedPolynomial> roots;
    for (int i = 1; i <= 4; ++i)
        roots.push_back(GradedPolynomial::variable(x, "x" + std::to_string(i)));

    std::vector<GradedPolynomial> elem(5, GradedPolynomial::zero(x));
    elem[0] = GradedPolynomial::one(x);
    for (int k = 1; k <= 4; ++k) {
        // e_k = sum over k-subsets; build recursively: e_k of first t roots.
        std::vector<GradedPolynomial> e(static_cast<size_t>(k) + 1, GradedPolynomial::zero(x));
        e[0] = GradedPolynomial::one(x);
        for (const auto& root : roots)
            for (int j = k; j >= 1; --j)
                e[j] += e[j - 1] * root;
        elem[k] = e[k];
    }

    for (int d = 1; d <= 4; ++d) {
        std::vector<GradedPolynomial> images(elem.begin() + 1, elem.begin() + 1 + d);
        RingMap phi(chern_class_ring(d), x, std::move(images));
        auto power_sum = GradedPolynomial::zero(x);
        for (const auto& root : roots)
            power_sum += root.pow(static_cast<unsigned>(d));
        EXPECT_EQ(phi(newton_sd(d)), power_sum) << "d=" << d;
    }
}

TEST(Variety, ProjectiveSpace) {
    auto p2 = Variety::projective_space(2);
    auto cd = tangent_chern(p2.components().front());
    // (1+h)^3 = 1 + 3h + 3h^2.
    EXPECT_EQ(cd.total.coefficient({0}), 1);
    EXPECT_EQ(cd.total.coefficient({1}), 3);
    EXPECT_EQ(cd.total.coefficient({2}), 3);
    EXPECT_EQ(chern_number(p2, {1, 1}), 9);
    EXPECT_EQ(chern_number(p2, {2}), 3);
    EXPECT_EQ(s_number(p2), 3);

    for (int d = 1; d <= 8; ++d)
        EXPECT_EQ(s_number(Variety::projective_space(d)), d + 1) << "P" << d;

    EXPECT_EQ(chern_number(Variety::point(), {}), 1);
}

TEST(Variety, CubicSurface) {
    auto x3 = hypersurface(3, 3);
    EXPECT_EQ(x3.dimension(), 2);
    EXPECT_EQ(chern_number(x3, {1, 1}), 3);
    EXPECT_EQ(chern_number(x3, {2}), 9);  // topological Euler characteristic
    EXPECT_EQ(s_number(x3), -15);
}

TEST(Variety, QuadricSurface) {
    auto q = hypersurface(2, 3);
    EXPECT_EQ(chern_number(q, {1, 1}), 8);
    EXPECT_EQ(chern_number(q, {2}), 4);
    EXPECT_EQ(s_number(q), 0);  // the quadric is P1xP1 in disguise

    auto p1p1 = Variety::product(Variety::projective_space(1), Variety::projective_space(1));
    EXPECT_EQ(chern_number(p1p1, {1, 1}), 8);
    EXPECT_EQ(chern_number(p1p1, {2}), 4);
}

TEST(Variety, HypersurfaceSNumbers) {
    // s_d of a degree-a hypersurface in P^{d+1} is a((d+2) - a^d).
    for (int a = 1; a <= 5; ++a)
        for (int d = 1; d <= 5; ++d)
            EXPECT_EQ(s_number(hypersurface(a, d + 1)), Integer(a) * ((d + 2) - pow_rational(Rational(a), d)))
                << "degree " << a << " in P" << d + 1;
    EXPECT_EQ(s_number(hypersurface(2, 4)), -6);
}

TEST(Variety, MilnorHypersurfaces) {
    EXPECT_EQ(s_number(milnor(2, 3)), -10);
    for (int m = 2; m <= 4; ++m)
        for (int n = m; n <= 4; ++n)
            EXPECT_EQ(s_number(milnor(m, n)), -binomial(m + n, static_cast<unsigned>(m)))
                << "H_" << m << "," << n;
    EXPECT_EQ(s_number(milnor(1, 1)), 2);  // a conic: rational curve, s_1 = 2
    EXPECT_EQ(s_number(milnor(1, 3)), 0);
}

TEST(Variety, CurveInP1xP1) {
    auto h11 = milnor(1, 1);
    auto cd = tangent_chern(h11.components().front());
    EXPECT_EQ(cd.total.homogeneous_component(1),
              hyperplane(cd.total.ring(), 0) + hyperplane(cd.total.ring(), 1));
    EXPECT_EQ(chern_number(h11, {1}), 2);  // 2 - 2g with g = 0
}

TEST(Variety, ProductChernIsMultiplicative) {
    auto check = [](const Variety& a, const Variety& b) {
        auto prod = Variety::product(a, b);
        const auto& leaf = prod.components().front();
        auto cd = tangent_chern(leaf);
        auto ca = tangent_chern(a.components().front());
        auto cb = tangent_chern(b.components().front());
        auto r = cd.total.ring();
        size_t off = ca.ambient.factors();
        EXPECT_EQ(cd.total,
                  pullback_to_product(ca.total, r, 0) * pullback_to_product(cb.total, r, off));
        EXPECT_EQ(cd.fundamental, pullback_to_product(ca.fundamental, r, 0) *
                                      pullback_to_product(cb.fundamental, r, off));
    };
    auto p1 = Variety::projective_space(1);
    auto p2 = Variety::projective_space(2);
    check(p1, p2);
    check(Variety::product(p1, p1), p1);
    check(hypersurface(3, 3), p1);
    check(milnor(1, 2), hypersurface(2, 3));
}

TEST(Variety, ProductChernNumbersFrozen) {
    auto p1 = Variety::projective_space(1);
    auto p1cubed = Variety::product(Variety::product(p1, p1), p1);
    EXPECT_EQ(chern_number(p1cubed, {1, 1, 1}), 48);
    EXPECT_EQ(chern_number(p1cubed, {2, 1}), 24);
    EXPECT_EQ(chern_number(p1cubed, {3}), 8);  // Euler characteristic 2^3

    auto p1p2 = Variety::product(p1, Variety::projective_space(2));
    EXPECT_EQ(chern_number(p1p2, {1, 1, 1}), 54);
    EXPECT_EQ(chern_number(p1p2, {2, 1}), 24);
    EXPECT_EQ(chern_number(p1p2, {3}), 6);

    EXPECT_EQ(s_number(p1cubed), 0);
    EXPECT_EQ(s_number(p1p2), 0);
}

TEST(Variety, DisjointUnionIsAdditive) {
    auto p2 = Variety::projective_space(2);
    auto two_p2 = Variety::disjoint_union(p2, p2);
    EXPECT_EQ(chern_number(two_p2, {2}), 6);
    EXPECT_EQ(s_number(two_p2), 6);

    auto mixed = Variety::disjoint_union(p2, Variety::projective_space(1));
    EXPECT_THROW(mixed.dimension(), std::invalid_argument);
    EXPECT_THROW(s_number(mixed), std::invalid_argument);
}

TEST(Variety, HypersurfaceDegreePairing) {
    for (int a = 1; a <= 5; ++a) {
        auto v = hypersurface(a, 4);
        auto cd = tangent_chern(v.components().front());
        auto h = hyperplane(cd.total.ring(), 0);
        EXPECT_EQ(chow_degree(cd.ambient, cd.fundamental * h.pow(3)), a);
    }
}

TEST(Variety, Validation) {
    EXPECT_THROW(Variety::make("bad", Ambient({2}), {{1, 1}}), std::invalid_argument);
    EXPECT_THROW(Variety::make("bad", Ambient({2}), {{0}}), std::invalid_argument);
    EXPECT_THROW(Variety::make("bad", Ambient({1}), {{1}, {1}}), std::invalid_argument);
    EXPECT_THROW(Ambient({-1}), std::invalid_argument);

    auto p2 = Variety::projective_space(2);
    EXPECT_THROW(chern_number(p2, {1}), std::invalid_argument);
    EXPECT_THROW(chern_number(p2, {1, 0, 1}), std::invalid_argument);
    EXPECT_THROW(newton_sd(0), std::invalid_argument);
}

}  // namespace
