#include <gtest/gtest.h>

#include "curvefree/parse.hpp"

using namespace curvefree;

TEST(Parse, Polynomial) {
    const auto f = parse_polynomial("21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2");
    EXPECT_EQ(f.degree(), 2);
    EXPECT_EQ(f.str(), "21*x^2 - 22*x*y - 6*x*z + 21*y^2 - 6*y*z + z^2");
    EXPECT_EQ(parse_polynomial(f.str()), f);
}

TEST(Parse, OmegaCoefficients) {
    const auto f = parse_polynomial("3*x + 3*w^2*y + w*z");
    EXPECT_EQ(f.coeff(Monomial{{0, 1, 0}}), Eisenstein(Rational(-3), Rational(-3)));
    EXPECT_EQ(parse_polynomial(f.str()), f);
}

TEST(Parse, RationalCoefficientsAndDivisionByConstant) {
    EXPECT_EQ(parse_polynomial("(x + y)/2"), parse_polynomial("1/2*x + 1/2*y"));
    EXPECT_THROW(parse_polynomial("x/y"), ParseError);
}

TEST(Parse, RejectsNonHomogeneous) {
    try {
        parse_polynomial("x^2 + y + 1");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offending(), (std::vector<std::string>{"y", "1"}));
    }
}

TEST(Parse, SyntaxErrors) {
    EXPECT_THROW(parse_polynomial("x +"), ParseError);
    EXPECT_THROW(parse_polynomial("(x + y"), ParseError);
    EXPECT_THROW(parse_polynomial("x $ y"), ParseError);
    EXPECT_THROW(parse_polynomial("x^y"), ParseError);
    EXPECT_THROW(parse_polynomial(""), ParseError);
}

TEST(Parse, Point) {
    const auto p = parse_point("w:w^2:2");
    EXPECT_EQ(p[0], Eisenstein::omega());
    EXPECT_EQ(p[2], Eisenstein(2));
    EXPECT_THROW(parse_point("1:2"), ParseError);
    EXPECT_THROW(parse_point("0:0:0"), ParseError);
}

TEST(Parse, CurveFileLabels) {
    const auto file = parse_curve_file(
        "# arrangement demo\n"
        "# E\n"
        "x^3 + y^3 - x*y*z\n"
        "\n"
        "L1: 3*x + 3*y + z\n"
        "x - y\n");
    ASSERT_EQ(file.components.size(), 3u);
    EXPECT_EQ(file.components[0].label, "E");
    EXPECT_EQ(file.components[1].label, "L1");
    EXPECT_EQ(file.components[2].label, "c3");
    EXPECT_EQ(file.product().degree(), 5);
}

TEST(Parse, CurveFileRoundTrip) {
    const auto file = parse_curve_file("A: x^2 + y^2 + z^2\nB: x\n");
    const auto again = parse_curve_file(file.str());
    ASSERT_EQ(again.components.size(), 2u);
    EXPECT_EQ(again.components[0].label, "A");
    EXPECT_EQ(again.product(), file.product());
}

TEST(Parse, CurveFileErrorNamesLine) {
    try {
        parse_curve_file("x^2 + y^2\nx + y^2\n");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
    }
}

TEST(Parse, MissingFile) { EXPECT_THROW(read_curve_file("/nonexistent/curve.txt"), std::ios_base::failure); }
