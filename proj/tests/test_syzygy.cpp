#include <gtest/gtest.h>

#include "curvefree/catalog.hpp"
#include "curvefree/localsing.hpp"
#include "curvefree/matrix.hpp"
#include "curvefree/parse.hpp"
#include "curvefree/syzygy.hpp"
#include "support.hpp"

using namespace curvefree;
using curvefree::testing::random_eisenstein;
using curvefree::testing::random_invertible;
using curvefree::testing::realified_rank;

namespace {

HomogeneousPoly P(const char* text) { return parse_polynomial(text); }

const HomogeneousPoly& f11() {
    static const HomogeneousPoly f = catalog::build("F(1,1)").product;
    return f;
}

/// dim AR(f)_k from the realified rank of the Jacobian map.
std::size_t oracle_syzygy_dim(const HomogeneousPoly& f, int k) {
    const auto m = jacobian_map_matrix(jacobian_generators(f), k);
    return (2 * m.cols() - realified_rank(m)) / 2;
}

}  // namespace

TEST(ExactMatrix, RankAndNullspace) {
    ExactMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 1) = Eisenstein::omega();
    m.at(1, 0) = Eisenstein::omega();
    m.at(1, 1) = Eisenstein::omega() * Eisenstein::omega();
    m.at(1, 2) = 1;
    EXPECT_EQ(m.rank(), 2u);
    const auto ns = m.nullspace();
    ASSERT_EQ(ns.size(), 1u);
    for (const auto& e : m.apply(ns[0])) EXPECT_TRUE(e.is_zero());
}

TEST(ExactMatrix, RankNullityOnRandomMatrices) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 2 + trial % 5;
        const std::size_t cols = 2 + (trial * 3) % 6;
        ExactMatrix m(rows, cols);
        // rank-deficient by construction for odd trials
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_eisenstein(rng, 4, 2);
        }
        if (trial % 2 == 1 && rows > 1) {
            const auto s = random_eisenstein(rng);
            for (std::size_t c = 0; c < cols; ++c) m.at(rows - 1, c) = m.at(0, c) * s;
        }
        const auto rank = m.rank();
        ASSERT_EQ(2 * rank, realified_rank(m));
        const auto ns = m.nullspace();
        ASSERT_EQ(rank + ns.size(), cols);
        for (const auto& v : ns) {
            for (const auto& e : m.apply(v)) ASSERT_TRUE(e.is_zero());
        }
    }
}

TEST(Syzygy, JacobianGenerators) {
    const auto g = jacobian_generators(P("x^3 + y^3 - x*y*z"));
    EXPECT_EQ(g[0], P("3*x^2 - y*z"));
    EXPECT_EQ(g[1], P("3*y^2 - x*z"));
    EXPECT_EQ(g[2], P("-x*y"));
    const auto s = jacobian_generators(P("x^2"));
    EXPECT_EQ(s[0], P("2*x"));
    EXPECT_TRUE(s[1].is_zero());
    EXPECT_TRUE(s[2].is_zero());
    const auto t = jacobian_generators(P("x*y*z"));
    EXPECT_EQ(t[1], P("x*z"));
}

TEST(Syzygy, MatrixShape) {
    const auto m = jacobian_map_matrix(jacobian_generators(P("x^2 + y^2 + z^2")), 1);
    EXPECT_EQ(m.rows(), 6u);
    EXPECT_EQ(m.cols(), 9u);
}

TEST(Syzygy, SmoothConic) {
    const auto q = P("x^2 + y^2 + z^2");
    EXPECT_EQ(syzygy_dim(q, 0), 0u);
    EXPECT_EQ(syzygy_dim(q, 1), 3u);
    EXPECT_EQ(oracle_syzygy_dim(q, 1), 3u);
    EXPECT_EQ(mdr(q), 1);
}

TEST(Syzygy, DimensionsAgreeWithRealifiedOracle) {
    for (const char* text : {"x^3 + y^3 - x*y*z", "x*y*z", "x^3 + y^3 + z^3", "x^2*y + w*y^2*z + z^3"}) {
        const auto f = P(text);
        for (int k = 0; k <= 3; ++k) ASSERT_EQ(syzygy_dim(f, k), oracle_syzygy_dim(f, k)) << text << " k=" << k;
    }
    for (int k = 0; k <= 2; ++k) EXPECT_EQ(syzygy_dim(f11(), k), oracle_syzygy_dim(f11(), k)) << "k=" << k;
    EXPECT_EQ(syzygy_dim(f11(), 1), 0u);
}

TEST(Syzygy, WitnessIsASyzygy) {
    const auto g = jacobian_generators(f11());
    const auto wit = witness_syzygy(f11(), 2);
    ASSERT_TRUE(wit.has_value());
    const auto combo = (*wit)[0] * g[0] + (*wit)[1] * g[1] + (*wit)[2] * g[2];
    EXPECT_TRUE(combo.is_zero());
    EXPECT_FALSE(witness_syzygy(f11(), 1).has_value());
}

TEST(Syzygy, KoszulLowerBound) {
    for (const auto& name : {"F(1,1)", "Example_3_3", "Example_3_2"}) {
        const auto f = catalog::build(name).product;
        EXPECT_GE(syzygy_dim(f, f.degree() - 1), 3u) << name;
    }
}

TEST(Syzygy, MdrRejectsLowDegree) { EXPECT_THROW(mdr(P("x")), std::invalid_argument); }

TEST(Tjurina, HilbertFunction) {
    EXPECT_EQ(jacobian_algebra_hilbert(P("x^2 + y^2 + z^2"), 4), 0u);
    EXPECT_EQ(jacobian_algebra_hilbert(P("x^2 + y^2 + z^2"), 0), 1u);
    EXPECT_EQ(jacobian_algebra_hilbert(P("x^3 + y^3 - x*y*z"), 3), 1u);
    EXPECT_EQ(jacobian_algebra_hilbert(f11(), 12), 19u);
}

TEST(Tjurina, Totals) {
    EXPECT_EQ(total_tjurina(P("x^3 + y^3 - x*y*z")), 1u);
    EXPECT_EQ(total_tjurina(P("x^2 + y^2 + z^2")), 0u);
    EXPECT_EQ(total_tjurina(P("x^3 + y^3 + z^3")), 0u);
    EXPECT_EQ(total_tjurina(P("x*y*z")), 3u);
    EXPECT_EQ(total_tjurina(P("x*y")), 1u);
    EXPECT_EQ(total_tjurina_probe(P("x^3 + y^3 + z^3")).degrees, (std::array<int, 3>{4, 5, 6}));
    EXPECT_EQ(total_tjurina_probe(P("x^2 + y^2 + z^2")).degrees, (std::array<int, 3>{1, 2, 3}));
    const auto probe = total_tjurina_probe(f11());
    EXPECT_EQ(probe.tau, 19u);
    EXPECT_EQ(probe.degrees, (std::array<int, 3>{12, 13, 14}));
}

TEST(Tjurina, NonReducedInputDoesNotStabilize) {
    EXPECT_THROW(total_tjurina(P("x^2*y")), StabilizationError);
}

TEST(Freeness, StatusFromNumbers) {
    EXPECT_EQ(free_tau(6, 2), 19);
    EXPECT_EQ(freeness_status(6, 2, 19), FreenessStatus::free);
    EXPECT_EQ(freeness_status(6, 2, 18), FreenessStatus::nearly_free);
    EXPECT_EQ(freeness_status(6, 2, 17), FreenessStatus::neither);
    // r above (d-1)/2 cannot be free
    EXPECT_EQ(freeness_status(6, 3, 19), FreenessStatus::neither);
    EXPECT_EQ(freeness_status(8, 4, 36), FreenessStatus::nearly_free);
    EXPECT_EQ(freeness_status(8, 3, 36), FreenessStatus::nearly_free);
}

TEST(Freeness, CertifyF11) {
    const auto cert = certify(f11());
    EXPECT_EQ(cert.degree, 6);
    EXPECT_EQ(cert.r, 2);
    EXPECT_EQ(cert.tau, 19u);
    EXPECT_EQ(cert.status, FreenessStatus::free);
    ASSERT_TRUE(cert.exponents.has_value());
    EXPECT_EQ(*cert.exponents, std::make_pair(2, 3));
    const long d1 = cert.degree - 1;
    EXPECT_EQ(cert.r * cert.r - cert.r * d1 + d1 * d1, 19);
    EXPECT_EQ(cert.exponents->first * cert.exponents->second, d1 * d1 - 19);
}

TEST(Freeness, CertifyC112) {
    const auto cert = certify(catalog::build("C(1,1,2)").product);
    EXPECT_EQ(cert.r, 3);
    EXPECT_EQ(cert.tau, 27u);
    EXPECT_EQ(cert.status, FreenessStatus::free);
    EXPECT_EQ(*cert.exponents, std::make_pair(3, 3));
}

TEST(Freeness, NearlyFreeArrangement) {
    const auto cert = certify(catalog::build("NearlyFree_1").product);
    EXPECT_EQ(cert.degree, 8);
    EXPECT_EQ(cert.tau, 36u);
    EXPECT_EQ(cert.status, FreenessStatus::nearly_free);
    EXPECT_FALSE(cert.exponents.has_value());
    EXPECT_EQ(free_tau(8, cert.r) - 1, 36);
}

TEST(Freeness, InvariantUnderCoordinateChange) {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 4; ++i) {
        const auto g = linear_substitute(f11(), random_invertible(rng, 2));
        EXPECT_EQ(total_tjurina(g), 19u);
        EXPECT_EQ(mdr(g), 2);
    }
}
