#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvefree/localsing.hpp"
#include "curvefree/poly.hpp"

namespace curvefree::catalog {

using Point = ProjectivePoint<Eisenstein>;

enum class Kind { cubic, conic, line };

std::string to_string(Kind k);

struct CuratedComponent {
    std::string label;
    HomogeneousPoly poly;
    Kind kind = Kind::line;
};

/// The nodal cubic E : x^3 + y^3 - xyz, its three sextactic points with their
/// hyperosculating conics, its three flexes with their inflectional lines,
/// the auxiliary line x - y through the node and P1, and the node.
struct CuratedData {
    CuratedComponent cubic;
    std::array<CuratedComponent, 3> conics;
    std::array<CuratedComponent, 3> lines;
    CuratedComponent aux_line;
    std::array<Point, 3> sextactic;
    std::array<Point, 3> flexes;
    Point node;
};

const CuratedData& curated_data();

/// Raised by build() for unknown names or bad indices.
class CatalogError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Arrangement {
    std::string name;
    std::vector<CuratedComponent> components;
    HomogeneousPoly product;
    /// Complete singular locus of the product; points off Q(w) come in
    /// conjugate pairs over Q(w)(sqrt D).
    std::vector<ExtPoint> singular_points;

    int degree() const { return product.degree(); }
    std::vector<LabelledCurve> labelled() const;
    /// Curve-file text with component labels as comments.
    std::string curve_file() const;
};

/// Accepted names: "F(i,j)", "C(i,j,k)" with j != k, "Example_3_2",
/// "Example_3_3", "NearlyFree_1", "NearlyFree_2". Indices run 1..3.
Arrangement build(const std::string& name);

/// Names of every arrangement build() knows, in reproduction order:
/// F(i,j), C(i,j,k) with j < k, then the examples and the nearly-free pair.
std::vector<std::string> all_arrangement_names();

/// Points of g ∩ h for a line g or h, or for two conics with known common
/// Q(w)-points. Deduplicated; multiplicities are not recorded.
std::vector<ExtPoint> intersection_points(const CuratedComponent& g, const CuratedComponent& h);

class DegenerateOsculation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The conic meeting the branch of f at p with contact >= 5, scaled so its
/// last nonzero coefficient (in the fixed monomial order) is 1. Rejects
/// singular points and flexes; throws DegenerateOsculation when the linear
/// system does not have a one-dimensional solution space.
ExtPoly osculating_conic(const HomogeneousPoly& f, const ExtPoint& p);

/// Contact of the osculating conic with f at p is at least 6.
bool is_sextactic(const HomogeneousPoly& f, const ExtPoint& p);

/// Coefficientwise proportionality of two polynomials of equal degree.
bool proportional(const ExtPoly& a, const ExtPoly& b);

struct Check {
    std::string claim;
    std::string witness;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<Check> checks;
    bool all_passed() const;
};

/// Cross-derives the curated data: contact orders at P_i and Q_j, tangent
/// lines at the flexes, the E ∩ H(E) budget, smoothness of the conics, and
/// the osculating conics at P_i.
VerificationReport verify_catalog();

}  // namespace curvefree::catalog
