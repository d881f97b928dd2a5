#include <gtest/gtest.h>

#include "curvefree/catalog.hpp"
#include "curvefree/parse.hpp"
#include "curvefree/syzygy.hpp"
#include "support.hpp"

using namespace curvefree;
using namespace curvefree::catalog;

namespace {

HomogeneousPoly P(const char* text) { return parse_polynomial(text); }
Point pt(const char* text) { return parse_point(text); }

}  // namespace

TEST(Curated, Constants) {
    const auto& cd = curated_data();
    EXPECT_EQ(cd.cubic.poly, P("x^3 + y^3 - x*y*z"));
    EXPECT_EQ(cd.sextactic[0], pt("1:1:2"));
    EXPECT_EQ(cd.sextactic[1], pt("w:w^2:2"));
    EXPECT_EQ(cd.sextactic[2], pt("w^2:w:2"));
    EXPECT_EQ(cd.flexes[0], pt("1:-1:0"));
    EXPECT_EQ(cd.flexes[1], pt("1:-w:0"));
    EXPECT_EQ(cd.flexes[2], pt("1:w+1:0"));
    EXPECT_EQ(cd.lines[0].poly, P("3*x + 3*y + z"));
    EXPECT_EQ(cd.lines[1].poly, P("3*x + 3*w^2*y + w*z"));
    EXPECT_EQ(cd.lines[2].poly, P("3*x + 3*w*y - (w + 1)*z"));
    EXPECT_EQ(cd.conics[0].poly, P("21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2"));
    EXPECT_EQ(cd.aux_line.poly, P("x - y"));
    EXPECT_EQ(cd.node, pt("0:0:1"));
}

TEST(Curated, NodeIsTheOnlySingularPoint) {
    const auto& cd = curated_data();
    for (const auto& g : jacobian_generators(cd.cubic.poly)) EXPECT_TRUE(evaluate(g, cd.node).is_zero());
    EXPECT_EQ(total_tjurina(cd.cubic.poly), 1u);
}

TEST(Curated, ConicsAreWTwists) {
    // sigma: (x, y, z) -> (w x, w^2 y, z) preserves E and permutes the data
    const auto w = Eisenstein::omega();
    const Matrix3<Eisenstein> sigma{{{w, 0, 0}, {0, w * w, 0}, {0, 0, 1}}};
    const auto& cd = curated_data();
    EXPECT_EQ(linear_substitute(cd.cubic.poly, sigma), cd.cubic.poly);
    const auto twisted = linear_substitute(cd.conics[1].poly, sigma).promote<QuadExt>();
    EXPECT_TRUE(proportional(twisted, cd.conics[0].poly.promote<QuadExt>()) ||
                proportional(twisted, cd.conics[2].poly.promote<QuadExt>()));
}

TEST(Verify, AllChecksPass) {
    const auto report = verify_catalog();
    EXPECT_TRUE(report.all_passed());
    EXPECT_GE(report.checks.size(), 20u);
    for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.claim << " at " << c.witness << " " << c.detail;
}

TEST(Build, Sizes) {
    const std::vector<std::tuple<std::string, int, std::size_t>> cases{
        {"F(1,1)", 6, 5}, {"C(1,1,2)", 7, 9}, {"Example_3_2", 6, 3}, {"Example_3_3", 6, 7},
        {"NearlyFree_1", 8, 14}, {"NearlyFree_2", 8, 12}};
    for (const auto& [name, degree, points] : cases) {
        const auto arr = build(name);
        EXPECT_EQ(arr.degree(), degree) << name;
        EXPECT_EQ(arr.singular_points.size(), points) << name;
        int sum = 0;
        for (const auto& c : arr.components) sum += c.poly.degree();
        EXPECT_EQ(sum, degree);
    }
}

TEST(Build, SingularPointsAreSingular) {
    for (const auto& name : {"F(2,3)", "C(3,1,3)", "Example_3_2", "NearlyFree_2"}) {
        const auto arr = build(name);
        const auto g = jacobian_generators(arr.product);
        for (const auto& p : arr.singular_points) {
            for (const auto& gi : g) ASSERT_TRUE(evaluate(gi.promote<QuadExt>(), p).is_zero()) << name << " " << p.str();
        }
    }
}

TEST(Build, NameForms) {
    EXPECT_EQ(build("F12").name, build("F(1,2)").name);
    EXPECT_EQ(build("C(1,3,2)").product, build("C(1,2,3)").product);
    EXPECT_THROW(build("C(1,2,2)"), CatalogError);
    EXPECT_THROW(build("F(4,1)"), CatalogError);
    EXPECT_THROW(build("F(0,1)"), CatalogError);
    EXPECT_THROW(build("G(1,1)"), CatalogError);
}

TEST(Build, AllNames) {
    const auto names = all_arrangement_names();
    EXPECT_EQ(names.size(), 22u);
    EXPECT_EQ(names.front(), "F(1,1)");
    EXPECT_EQ(names.back(), "NearlyFree_2");
}

TEST(Build, CurveFileRoundTrip) {
    const auto arr = build("C(2,1,3)");
    const auto file = parse_curve_file(arr.curve_file());
    ASSERT_EQ(file.components.size(), arr.components.size());
    for (std::size_t i = 0; i < file.components.size(); ++i) EXPECT_EQ(file.components[i].label, arr.components[i].label);
    EXPECT_EQ(file.product(), arr.product);
}

TEST(Build, LineConicPointsNeedExtension) {
    // F(1,1): L1 meets C1 in a conjugate pair off Q(w)
    const auto& cd = curated_data();
    const auto pts = intersection_points(cd.lines[0], cd.conics[0]);
    ASSERT_EQ(pts.size(), 2u);
    for (const auto& p : pts) {
        EXPECT_TRUE(evaluate(cd.lines[0].poly.promote<QuadExt>(), p).is_zero());
        EXPECT_TRUE(evaluate(cd.conics[0].poly.promote<QuadExt>(), p).is_zero());
    }
}

TEST(Osculating, ReproducesConics) {
    const auto& cd = curated_data();
    for (std::size_t i = 0; i < 3; ++i) {
        const auto q = osculating_conic(cd.cubic.poly, cd.sextactic[i].promote<QuadExt>());
        EXPECT_TRUE(proportional(q, cd.conics[i].poly.promote<QuadExt>())) << q.str();
        EXPECT_TRUE(is_sextactic(cd.cubic.poly, cd.sextactic[i].promote<QuadExt>()));
    }
}

TEST(Osculating, GenericPointHasContactFive) {
    const auto& E = curated_data().cubic.poly;
    for (long r : {2L, 3L, -2L}) {
        const Rational rho(r);
        const ExtPoint p(QuadExt(1), QuadExt(rho), QuadExt((Rational(1) + rho.pow(3)) / rho));
        const auto q = osculating_conic(E, p);
        const auto b = expand_branches(E.promote<QuadExt>(), p).front();
        EXPECT_EQ(branch_mult(q, b), Multiplicity::finite(5)) << p.str();
        EXPECT_FALSE(is_sextactic(E, p));
    }
}

TEST(Osculating, RejectsFlexesAndSingularPoints) {
    const auto& cd = curated_data();
    EXPECT_THROW(osculating_conic(cd.cubic.poly, cd.flexes[0].promote<QuadExt>()), DegenerateOsculation);
    EXPECT_THROW(osculating_conic(cd.cubic.poly, cd.node.promote<QuadExt>()), std::invalid_argument);
}

TEST(Proportional, Basic) {
    const auto a = P("x^2 + w*y*z").promote<QuadExt>();
    EXPECT_TRUE(proportional(a, a.scaled(QuadExt(Eisenstein(3) + Eisenstein::omega()))));
    EXPECT_FALSE(proportional(a, P("x^2 + y*z").promote<QuadExt>()));
}
