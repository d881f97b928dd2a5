#include "curvefree/localsing.hpp"

#include <algorithm>

namespace curvefree {

namespace {

using ExtSeries = Series<QuadExt>;
using ExtLocal = LocalPoly<QuadExt>;

QuadExt binomial(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return QuadExt(r);
}

// (a + s)^n as coefficients of s^0..s^n.
std::vector<QuadExt> shifted_power(const QuadExt& a, int n) {
    std::vector<QuadExt> out(static_cast<std::size_t>(n) + 1);
    std::vector<QuadExt> apow{QuadExt(1)};
    for (int i = 1; i <= n; ++i) apow.push_back(apow.back() * a);
    for (int k = 0; k <= n; ++k) out[k] = binomial(n, k) * apow[n - k];
    return out;
}

ExtLocal swapped(const ExtLocal& g) {
    ExtLocal out;
    for (const auto& [e, c] : g) out.emplace(std::make_pair(e.second, e.first), c);
    return out;
}

int local_multiplicity(const ExtLocal& g) {
    int m = -1;
    for (const auto& [e, c] : g) {
        if (c.is_zero()) continue;
        const int deg = e.first + e.second;
        if (m < 0 || deg < m) m = deg;
    }
    return m;
}

// Branch of g with u = t, v = t w(t), w(0) = slope; g has multiplicity m at
// the origin and slope is a simple root of the tangent cone q(1, w).
// Newton iteration on G(t, w) = g(t, t w) / t^m, doubling the precision.
ExtSeries solve_blowup(const ExtLocal& g, int m, const QuadExt& slope, std::size_t target) {
    const ExtLocal gv = local_partial(g, 1);
    ExtSeries w = ExtSeries::constant(slope, 1);
    std::size_t prec = 1;
    const auto um = static_cast<std::size_t>(m);
    while (prec < target) {
        prec = std::min(2 * prec, target);
        const ExtSeries u = ExtSeries::parameter(prec + um);
        const ExtSeries v = w.truncated(prec + um - 1).shifted_up(1);
        const ExtSeries big_g = compose(g, u, v).shifted_down(um);
        const ExtSeries big_gw = compose(gv, u, v).shifted_down(um - 1).truncated(prec);
        w = w.truncated(prec) - big_g.truncated(prec) * big_gw.inverse();
    }
    return w;
}

struct Direction {
    QuadExt du;
    QuadExt dv;
};

std::vector<Direction> tangent_directions(const ExtLocal& g, int m) {
    auto coeff = [&](int a, int b) {
        auto it = g.find({a, b});
        return it == g.end() ? QuadExt(0) : it->second;
    };
    if (m == 1) {
        const QuadExt alpha = coeff(1, 0);
        const QuadExt beta = coeff(0, 1);
        return {{beta, -alpha}};
    }
    const QuadExt a = coeff(2, 0);
    const QuadExt b = coeff(1, 1);
    const QuadExt c = coeff(0, 2);
    const QuadExt disc = b * b - QuadExt(4) * a * c;
    if (disc.is_zero()) throw OutOfScopeGerm("tangent cone has a repeated factor");
    if (c.is_zero()) {
        // q = u (a u + b v)
        return {{QuadExt(0), QuadExt(1)}, {b, -a}};
    }
    if (!disc.in_base_field()) throw OutOfScopeGerm("tangent cone discriminant outside Q(w)");
    Eisenstein root;
    if (!disc.a().sqrt_exact(root)) {
        throw OutOfScopeGerm("tangent cone irreducible over Q(w): discriminant " + disc.str());
    }
    const QuadExt two_c = QuadExt(2) * c;
    return {{QuadExt(1), (-b + QuadExt(root)) / two_c}, {QuadExt(1), (-b - QuadExt(root)) / two_c}};
}

BranchExpansion expand_direction(const ExtPoly& f, const LocalChart& chart, const ExtLocal& g, int m,
                                 const Direction& dir, std::size_t truncation) {
    BranchExpansion b;
    b.chart = chart;
    b.parent = f;
    b.truncation = truncation;
    b.tangent = {dir.du, dir.dv};
    const std::size_t prec = truncation + 1;
    if (!dir.du.is_zero()) {
        const ExtSeries w = solve_blowup(g, m, dir.dv / dir.du, prec);
        b.u = ExtSeries::parameter(prec);
        b.v = w.truncated(prec - 1).shifted_up(1);
    } else {
        const ExtSeries w = solve_blowup(swapped(g), m, dir.du / dir.dv, prec);
        b.v = ExtSeries::parameter(prec);
        b.u = w.truncated(prec - 1).shifted_up(1);
    }
    if (b.residual().order().has_value()) {
        throw std::logic_error("branch expansion residual does not vanish");
    }
    return b;
}

bool proportional(const std::array<QuadExt, 2>& a, const std::array<QuadExt, 2>& b) {
    return (a[0] * b[1] - a[1] * b[0]).is_zero();
}

}  // namespace

LocalChart LocalChart::at(const ExtPoint& p) {
    LocalChart chart{p.canonical(), 2, {0, 1}};
    for (int i = 2; i >= 0; --i) {
        if (!p[i].is_zero()) {
            chart.chart = i;
            break;
        }
    }
    int k = 0;
    for (int i = 0; i < 3; ++i) {
        if (i != chart.chart) chart.local_vars[k++] = i;
    }
    return chart;
}

LocalPoly<QuadExt> LocalChart::localize(const ExtPoly& f) const {
    ExtLocal out;
    const QuadExt& pu = center[local_vars[0]];
    const QuadExt& pv = center[local_vars[1]];
    for (const auto& [mono, c] : f.terms()) {
        const auto eu = shifted_power(pu, mono.e[local_vars[0]]);
        const auto ev = shifted_power(pv, mono.e[local_vars[1]]);
        for (std::size_t i = 0; i < eu.size(); ++i) {
            if (eu[i].is_zero()) continue;
            for (std::size_t j = 0; j < ev.size(); ++j) {
                if (ev[j].is_zero()) continue;
                out[{static_cast<int>(i), static_cast<int>(j)}] += c * eu[i] * ev[j];
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    }
    return out;
}

Series<QuadExt> BranchExpansion::residual() const {
    return compose(chart.localize(parent), u, v);
}

BranchExpansion BranchExpansion::reexpanded(std::size_t new_truncation) const {
    for (auto& b : expand_branches(parent, chart.center, new_truncation)) {
        if (proportional(b.tangent, tangent)) return b;
    }
    throw std::logic_error("branch lost on re-expansion");
}

int point_multiplicity(const ExtPoly& f, const ExtPoint& p) {
    return local_multiplicity(LocalChart::at(p).localize(f));
}

std::vector<BranchExpansion> expand_branches(const ExtPoly& f, const ExtPoint& p, std::size_t truncation) {
    const LocalChart chart = LocalChart::at(p);
    const ExtLocal g = chart.localize(f);
    const int m = local_multiplicity(g);
    if (m < 0) throw std::invalid_argument("zero polynomial has no branches");
    if (m == 0) throw std::invalid_argument("point " + p.str() + " is not on the curve");
    if (m >= 3) throw OutOfScopeGerm("multiplicity " + std::to_string(m) + " at " + p.str());
    std::vector<BranchExpansion> out;
    for (const auto& dir : tangent_directions(g, m)) {
        out.push_back(expand_direction(f, chart, g, m, dir, truncation));
    }
    return out;
}

Multiplicity branch_mult(const ExtPoly& g, const BranchExpansion& b) {
    const auto composed = compose(b.chart.localize(g), b.u, b.v);
    if (const auto ord = composed.order()) return Multiplicity::finite(static_cast<int>(*ord));
    if (b.truncation < kMaxTruncation) {
        return branch_mult(g, b.reexpanded(std::min(2 * b.truncation, kMaxTruncation)));
    }
    if (g.divide_exact(b.parent).has_value()) return Multiplicity::infinity();
    throw SuspectedContainment("order exceeds truncation cap " + std::to_string(kMaxTruncation) + " at " +
                               b.chart.center.str());
}

int inflection_order(const ExtPoly& f, const ExtPoint& p) {
    if (f.degree() < 2) throw std::invalid_argument("inflection order undefined for lines");
    std::array<QuadExt, 3> grad;
    for (int i = 0; i < 3; ++i) grad[i] = f.partial(kVars[i]).evaluate(p.coords());
    if (grad[0].is_zero() && grad[1].is_zero() && grad[2].is_zero()) {
        throw std::invalid_argument("point " + p.str() + " is singular");
    }
    const auto tangent = ExtPoly::linear(grad[0], grad[1], grad[2]);
    const auto branches = expand_branches(f, p);
    const auto mult = branch_mult(tangent, branches.front());
    if (mult.infinite) throw std::invalid_argument("curve contains its tangent line");
    return mult.value - 2;
}

std::string to_string(SingularityTag tag) {
    switch (tag) {
        case SingularityTag::A1: return "A1";
        case SingularityTag::A3: return "A3";
        case SingularityTag::A5: return "A5";
        case SingularityTag::A7: return "A7";
        case SingularityTag::A11: return "A11";
        case SingularityTag::D4: return "D4";
        case SingularityTag::D14: return "D14";
        case SingularityTag::UNKNOWN: return "UNKNOWN";
    }
    return "UNKNOWN";
}

std::vector<int> SingularityProfile::sorted_mults() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < pairwise.size(); ++i) {
        for (std::size_t j = i + 1; j < pairwise.size(); ++j) out.push_back(pairwise[i][j]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SingularityType classify(const SingularityProfile& profile) {
    const auto r = static_cast<int>(profile.branch_count());
    const auto mults = profile.sorted_mults();
    SingularityType type;
    if (r >= 2) {
        int delta = 0;
        for (int m : mults) delta += m;
        type.milnor = 2 * delta - r + 1;
    }
    if (r == 2) {
        switch (mults[0]) {
            case 1: type.tag = SingularityTag::A1; break;
            case 2: type.tag = SingularityTag::A3; break;
            case 3: type.tag = SingularityTag::A5; break;
            case 4: type.tag = SingularityTag::A7; break;
            case 6: type.tag = SingularityTag::A11; break;
            default: break;
        }
    } else if (r == 3) {
        if (mults == std::vector<int>{1, 1, 1}) type.tag = SingularityTag::D4;
        if (mults == std::vector<int>{1, 1, 6}) type.tag = SingularityTag::D14;
    }
    if (type.tag != SingularityTag::UNKNOWN) type.tjurina = type.milnor;
    return type;
}

SingularityProfile build_profile(const std::vector<LabelledCurve>& components, const ExtPoint& p) {
    SingularityProfile profile{p.canonical(), {}, {}};
    std::vector<std::size_t> owner;
    std::vector<std::size_t> branches_of(components.size(), 0);
    for (std::size_t c = 0; c < components.size(); ++c) {
        if (!components[c].poly.evaluate(p.coords()).is_zero()) continue;
        for (auto& b : expand_branches(components[c].poly, p)) {
            profile.branches.push_back({components[c].label, std::move(b)});
            owner.push_back(c);
            ++branches_of[c];
        }
    }
    const std::size_t n = profile.branches.size();
    profile.pairwise.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            int value = 0;
            if (owner[i] == owner[j]) {
                // two branches of one component: distinct tangents, transverse
                value = 1;
            } else {
                Multiplicity m;
                if (branches_of[owner[j]] == 1) {
                    m = branch_mult(components[owner[j]].poly, profile.branches[i].branch);
                } else if (branches_of[owner[i]] == 1) {
                    m = branch_mult(components[owner[i]].poly, profile.branches[j].branch);
                } else {
                    throw OutOfScopeGerm("two singular components meet at " + p.str());
                }
                if (m.infinite) {
                    throw std::invalid_argument("components " + components[owner[i]].label + " and " +
                                                components[owner[j]].label + " share a component");
                }
                value = m.value;
            }
            profile.pairwise[i][j] = value;
            profile.pairwise[j][i] = value;
        }
    }
    return profile;
}

ArrangementAnalysis analyze_arrangement(const std::vector<LabelledCurve>& components,
                                        const std::vector<ExtPoint>& points) {
    ArrangementAnalysis out;
    for (const auto& p : points) {
        auto profile = build_profile(components, p);
        auto type = classify(profile);
        if (type.tjurina) {
            out.tau_sum += *type.tjurina;
        } else {
            out.unknown_points.push_back(out.points.size());
        }
        out.points.push_back({p.canonical(), std::move(profile), type});
    }
    return out;
}

std::vector<BezoutBudget> bezout_budgets(const std::vector<LabelledCurve>& components,
                                         const std::vector<ExtPoint>& points) {
    std::vector<BezoutBudget> out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        for (std::size_t j = i + 1; j < components.size(); ++j) {
            const auto& g = components[i];
            const auto& h = components[j];
            BezoutBudget budget{g.label, h.label, g.poly.degree() * h.poly.degree(), 0};
            for (const auto& p : points) {
                if (!g.poly.evaluate(p.coords()).is_zero() || !h.poly.evaluate(p.coords()).is_zero()) continue;
                for (const auto& b : expand_branches(g.poly, p)) {
                    const auto m = branch_mult(h.poly, b);
                    if (m.infinite) throw std::invalid_argument(g.label + " and " + h.label + " share a component");
                    budget.counted += m.value;
                }
            }
            out.push_back(budget);
        }
    }
    return out;
}

}  // namespace curvefree
