#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvefree/poly.hpp"
#include "curvefree/quadext.hpp"
#include "curvefree/series.hpp"

namespace curvefree {

using ExtPoly = BasicPoly<QuadExt>;
using ExtPoint = ProjectivePoint<QuadExt>;

/// The local germ lies outside what the branch machinery handles
/// (multiplicity >= 3, tangent cone with a repeated or non-split factor).
class OutOfScopeGerm : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Series composition stayed zero up to the truncation cap while the
/// parent curve does not divide the tested one.
class SuspectedContainment : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kInitialTruncation = 16;
inline constexpr std::size_t kMaxTruncation = 64;

/// Chart data: the point sits at the origin of the affine chart where
/// coordinate `chart` is set to 1; local coordinates (u, v) are the remaining
/// two coordinates, in increasing index order, minus the point's values.
struct LocalChart {
    ExtPoint center;
    int chart = 2;
    std::array<int, 2> local_vars{0, 1};

    static LocalChart at(const ExtPoint& p);
    LocalPoly<QuadExt> localize(const ExtPoly& f) const;
};

/// Smooth local branch t -> (u(t), v(t)) of `parent` at `chart.center`,
/// exact modulo t^(truncation + 1).
struct BranchExpansion {
    LocalChart chart;
    ExtPoly parent;
    std::size_t truncation = 0;
    Series<QuadExt> u;
    Series<QuadExt> v;
    /// Tangent direction (du : dv) in local coordinates.
    std::array<QuadExt, 2> tangent{QuadExt(1), QuadExt(0)};

    /// parent(u(t), v(t)), to precision truncation + 1.
    Series<QuadExt> residual() const;
    /// Same branch recomputed at a new truncation order.
    BranchExpansion reexpanded(std::size_t truncation) const;
};

/// Branches of f through p. Requires f(p) = 0 and multiplicity <= 2 with
/// distinct tangents over the coefficient field of p. Throws OutOfScopeGerm.
std::vector<BranchExpansion> expand_branches(const ExtPoly& f, const ExtPoint& p,
                                             std::size_t truncation = kInitialTruncation);

/// Multiplicity of f at p (order of the lowest nonvanishing local term).
int point_multiplicity(const ExtPoly& f, const ExtPoint& p);

/// Intersection multiplicity of a curve with a branch; `infinite` when the
/// curve contains the branch's parent.
struct Multiplicity {
    bool infinite = false;
    int value = 0;

    static Multiplicity finite(int v) { return {false, v}; }
    static Multiplicity infinity() { return {true, 0}; }
    friend bool operator==(const Multiplicity&, const Multiplicity&) = default;
    std::string str() const { return infinite ? "INFINITE" : std::to_string(value); }
};

/// Order in t of g along the branch. Re-expands the branch (doubling up to
/// kMaxTruncation) while the known coefficients all vanish. Throws
/// SuspectedContainment if they still vanish and the parent does not divide g.
Multiplicity branch_mult(const ExtPoly& g, const BranchExpansion& b);

/// (C, T_pC)_p - 2 at a smooth point p. Throws std::invalid_argument at
/// singular points and for lines.
int inflection_order(const ExtPoly& f, const ExtPoint& p);

enum class SingularityTag { A1, A3, A5, A7, A11, D4, D14, UNKNOWN };

std::string to_string(SingularityTag tag);

struct SingularityType {
    SingularityTag tag = SingularityTag::UNKNOWN;
    /// 2 delta - r + 1 for r smooth branches.
    int milnor = 0;
    /// Equal to milnor for every recognized tag; empty for UNKNOWN.
    std::optional<int> tjurina;
};

struct LabelledBranch {
    std::string component;
    BranchExpansion branch;
};

struct SingularityProfile {
    ExtPoint point;
    std::vector<LabelledBranch> branches;
    /// Symmetric, zero on the diagonal.
    std::vector<std::vector<int>> pairwise;

    std::size_t branch_count() const { return branches.size(); }
    /// Sorted off-diagonal entries (upper triangle).
    std::vector<int> sorted_mults() const;
};

/// Classification from branch count and pairwise contacts:
/// two branches with contact m in {1,2,3,4,6} give A_{2m-1}; three branches
/// with contacts {1,1,1} give D4 and {1,1,6} give D14; anything else is UNKNOWN.
SingularityType classify(const SingularityProfile& profile);

struct LabelledCurve {
    std::string label;
    ExtPoly poly;
};

/// Profile of the union of `components` at p.
SingularityProfile build_profile(const std::vector<LabelledCurve>& components, const ExtPoint& p);

struct PointAnalysis {
    ExtPoint point;
    SingularityProfile profile;
    SingularityType type;
};

struct ArrangementAnalysis {
    std::vector<PointAnalysis> points;
    /// Sum of tau_p over recognized points.
    long tau_sum = 0;
    std::vector<std::size_t> unknown_points;
};

ArrangementAnalysis analyze_arrangement(const std::vector<LabelledCurve>& components,
                                        const std::vector<ExtPoint>& points);

/// Intersection count of one component pair over a point list.
struct BezoutBudget {
    std::string first;
    std::string second;
    int expected = 0;
    int counted = 0;
    bool exhausted() const { return expected == counted; }
};

/// For each pair (g, h): sum over listed points of branch_mult(h, b) over the
/// branches b of g there, against deg g * deg h.
std::vector<BezoutBudget> bezout_budgets(const std::vector<LabelledCurve>& components,
                                         const std::vector<ExtPoint>& points);

}  // namespace curvefree
