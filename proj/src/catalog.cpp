#include "curvefree/catalog.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "curvefree/parse.hpp"

namespace curvefree::catalog {

namespace {

const Eisenstein kOmega = Eisenstein::omega();
const Eisenstein kOmega2 = kOmega * kOmega;

CuratedComponent component(const std::string& label, const std::string& text, Kind kind) {
    return {label, parse_polynomial(text), kind};
}

CuratedData make_curated() {
    const Eisenstein w = kOmega;
    const Eisenstein w2 = kOmega2;
    CuratedData d{
        component("E", "x^3 + y^3 - x*y*z", Kind::cubic),
        {component("C1", "21*(x^2 + y^2) - 22*x*y - 6*(x + y)*z + z^2", Kind::conic),
         component("C2", "21*(w*x^2 + w^2*y^2) - 22*x*y - 6*(w^2*x + w*y)*z + z^2", Kind::conic),
         component("C3", "21*(w^2*x^2 + w*y^2) - 22*x*y - 6*(w*x + w^2*y)*z + z^2", Kind::conic)},
        {component("L1", "3*x + 3*y + z", Kind::line), component("L2", "3*x + 3*w^2*y + w*z", Kind::line),
         component("L3", "3*x + 3*w*y - (w + 1)*z", Kind::line)},
        component("Laux", "x - y", Kind::line),
        {Point(1, 1, 2), Point(w, w2, 2), Point(w2, w, 2)},
        {Point(1, -1, 0), Point(1, -w, 0), Point(1, w + Eisenstein(1), 0)},
        Point(0, 0, 1),
    };
    return d;
}

// Two Q(w)-points of C1 ∩ C2, found offline and checked on use. The other
// two points of the intersection are conjugate over Q(w)(sqrt 13).
const std::array<Point, 2>& conic_seed_12() {
    static const std::array<Point, 2> seeds{
        Point(Eisenstein(7) * (Eisenstein(1) + kOmega), Eisenstein(5) * kOmega, 7),
        Point(Eisenstein(5) * kOmega2, Eisenstein(-7) * kOmega, 7),
    };
    return seeds;
}

// (x, y, z) -> (w x, w^2 y, z) preserves E and permutes the conics.
Point rotate(const Point& p) { return Point(kOmega * p[0], kOmega2 * p[1], p[2]); }

std::array<Eisenstein, 3> cross(const std::array<Eisenstein, 3>& a, const std::array<Eisenstein, 3>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::array<Eisenstein, 3> line_coeffs(const HomogeneousPoly& line) {
    return {line.coeff(Monomial{{1, 0, 0}}), line.coeff(Monomial{{0, 1, 0}}), line.coeff(Monomial{{0, 0, 1}})};
}

// Two independent points spanning the line.
std::array<std::array<Eisenstein, 3>, 2> line_basis(const HomogeneousPoly& line) {
    const auto n = line_coeffs(line);
    std::vector<std::array<Eisenstein, 3>> candidates;
    for (const auto& e : std::array<std::array<Eisenstein, 3>, 3>{
             {{Eisenstein(1), 0, 0}, {Eisenstein(0), 1, 0}, {Eisenstein(0), 0, 1}}}) {
        const auto c = cross(n, e);
        if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())) candidates.push_back(c);
    }
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const auto c = cross(candidates[0], candidates[i]);
        if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero())) return {candidates[0], candidates[i]};
    }
    throw std::logic_error("degenerate line");
}

// Binary form sum coeffs[i] s^(n-i) t^i.
using Binary = std::vector<Eisenstein>;

Binary restrict_to_line(const HomogeneousPoly& f, const std::array<std::array<Eisenstein, 3>, 2>& basis) {
    // x_k = A_k s + B_k t, with s, t stored as x, y of a bivariate form.
    std::array<HomogeneousPoly, 3> lin;
    for (int k = 0; k < 3; ++k) lin[k] = HomogeneousPoly::linear(basis[0][k], basis[1][k], Eisenstein(0));
    HomogeneousPoly restricted(f.degree());
    for (const auto& [m, c] : f.terms()) {
        restricted += (lin[0].pow(m.e[0]) * lin[1].pow(m.e[1]) * lin[2].pow(m.e[2])).scaled(c);
    }
    Binary out(static_cast<std::size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) out[i] = restricted.coeff(Monomial{{f.degree() - i, i, 0}});
    return out;
}

Eisenstein eval_binary(const Binary& b, const Eisenstein& s, const Eisenstein& t) {
    const int n = static_cast<int>(b.size()) - 1;
    Eisenstein total;
    for (int i = 0; i <= n; ++i) total += b[i] * s.pow(n - i) * t.pow(i);
    return total;
}

// Quotient of b by (t0 s - s0 t), which must divide it.
Binary divide_root(const Binary& b, const Eisenstein& s0, const Eisenstein& t0) {
    const std::size_t n = b.size() - 1;
    Binary q(n);
    if (!t0.is_zero()) {
        // coefficients in s-descending order: long division by t0 s - s0 t
        Binary rem = b;
        for (std::size_t i = 0; i < n; ++i) {
            q[i] = rem[i] / t0;
            rem[i + 1] += q[i] * s0;
        }
    } else {
        // factor is -s0 t: b[0] vanishes, shift the rest down
        for (std::size_t i = 0; i < n; ++i) q[i] = b[i + 1] / (-s0);
    }
    return q;
}

// Parameters (s0 : t0) of x = s0 A + t0 B.
std::pair<Eisenstein, Eisenstein> line_parameters(const std::array<Eisenstein, 3>& x,
                                                  const std::array<std::array<Eisenstein, 3>, 2>& basis) {
    const auto ab = cross(basis[0], basis[1]);
    const auto xb = cross(x, basis[1]);
    const auto ax = cross(basis[0], x);
    for (int k = 0; k < 3; ++k) {
        if (!ab[k].is_zero()) return {xb[k] / ab[k], ax[k] / ab[k]};
    }
    throw std::logic_error("degenerate line basis");
}

ExtPoint combine(const std::array<std::array<Eisenstein, 3>, 2>& basis, const QuadExt& s, const QuadExt& t) {
    return ExtPoint(s * QuadExt(basis[0][0]) + t * QuadExt(basis[1][0]), s * QuadExt(basis[0][1]) + t * QuadExt(basis[1][1]),
                    s * QuadExt(basis[0][2]) + t * QuadExt(basis[1][2]));
}

const std::shared_ptr<const Eisenstein>* radicand_of(const ExtPoint& p) {
    for (int i = 0; i < 3; ++i) {
        if (!p[i].in_base_field()) return &p[i].radicand();
    }
    return nullptr;
}

bool same_point(const ExtPoint& a, const ExtPoint& b) {
    const auto* ra = radicand_of(a);
    const auto* rb = radicand_of(b);
    if (ra != nullptr && rb != nullptr && **ra != **rb) return false;
    return a == b;
}

void add_unique(std::vector<ExtPoint>& points, const ExtPoint& p) {
    for (const auto& q : points) {
        if (same_point(p, q)) return;
    }
    points.push_back(p.canonical());
}

std::vector<Point> known_points() {
    const auto& d = curated_data();
    std::vector<Point> out{d.node};
    out.insert(out.end(), d.sextactic.begin(), d.sextactic.end());
    out.insert(out.end(), d.flexes.begin(), d.flexes.end());
    return out;
}

std::vector<ExtPoint> line_meets_curve(const HomogeneousPoly& line, const HomogeneousPoly& curve) {
    const auto basis = line_basis(line);
    Binary form = restrict_to_line(curve, basis);
    std::vector<ExtPoint> out;
    if (std::all_of(form.begin(), form.end(), [](const Eisenstein& e) { return e.is_zero(); })) {
        throw CatalogError("line is a component of the curve");
    }
    for (const auto& k : known_points()) {
        if (!evaluate(line, k).is_zero() || !evaluate(curve, k).is_zero()) continue;
        const auto [s0, t0] = line_parameters(k.coords(), basis);
        add_unique(out, k.promote<QuadExt>());
        while (form.size() > 1 && eval_binary(form, s0, t0).is_zero()) form = divide_root(form, s0, t0);
    }
    const std::size_t n = form.size() - 1;
    if (n == 0) return out;
    if (n == 1) {
        add_unique(out, combine(basis, QuadExt(form[1]), QuadExt(-form[0])));
        return out;
    }
    if (n == 2) {
        const Eisenstein& a = form[0];
        const Eisenstein& b = form[1];
        const Eisenstein& c = form[2];
        if (a.is_zero()) {
            // t (b s + c t)
            add_unique(out, combine(basis, QuadExt(1), QuadExt(0)));
            add_unique(out, combine(basis, QuadExt(c), QuadExt(-b)));
            return out;
        }
        const QuadExt root = QuadExt::root(b * b - Eisenstein(4) * a * c);
        const QuadExt two_a(Eisenstein(2) * a);
        add_unique(out, combine(basis, (QuadExt(-b) + root) / two_a, QuadExt(1)));
        add_unique(out, combine(basis, (QuadExt(-b) - root) / two_a, QuadExt(1)));
        return out;
    }
    throw CatalogError("no closed form for a residual intersection of degree " + std::to_string(n));
}

int conic_index(const CuratedComponent& c) {
    const auto& d = curated_data();
    for (int i = 0; i < 3; ++i) {
        if (d.conics[i].label == c.label) return i;
    }
    return -1;
}

std::vector<ExtPoint> conic_meets_conic(const CuratedComponent& g, const CuratedComponent& h) {
    const int i = conic_index(g);
    const int j = conic_index(h);
    if (i < 0 || j < 0) throw CatalogError("no closed form for " + g.label + " ∩ " + h.label);
    std::vector<Point> seeds;
    for (Point s : conic_seed_12()) {
        for (int k = 0; k < 3; ++k) {
            if (evaluate(g.poly, s).is_zero() && evaluate(h.poly, s).is_zero() &&
                std::none_of(seeds.begin(), seeds.end(), [&](const Point& q) { return q == s; })) {
                seeds.push_back(s);
            }
            s = rotate(s);
        }
    }
    if (seeds.size() != 2) throw CatalogError("missing seed points for " + g.label + " ∩ " + h.label);
    // The pencil member through the line joining the seeds splits off a second line.
    const auto join = cross(seeds[0].coords(), seeds[1].coords());
    const auto joining = HomogeneousPoly::linear(join[0], join[1], join[2]);
    const auto basis = line_basis(joining);
    std::array<Eisenstein, 3> probe{};
    for (int k = 1;; ++k) {
        for (int c = 0; c < 3; ++c) probe[c] = basis[0][c] + Eisenstein(k) * basis[1][c];
        if (!h.poly.evaluate(probe).is_zero()) break;
    }
    const Eisenstein lambda = g.poly.evaluate(probe) / h.poly.evaluate(probe);
    const auto member = g.poly - h.poly.scaled(lambda);
    const auto other = member.divide_exact(joining);
    if (!other) throw std::logic_error("pencil member does not contain the joining line");
    std::vector<ExtPoint> out;
    for (const auto& s : seeds) add_unique(out, s.promote<QuadExt>());
    for (const auto& p : line_meets_curve(*other, g.poly)) add_unique(out, p);
    return out;
}

std::vector<ExtPoint> singular_locus(const std::vector<CuratedComponent>& components) {
    std::vector<ExtPoint> out;
    for (const auto& c : components) {
        if (c.kind == Kind::cubic) add_unique(out, curated_data().node.promote<QuadExt>());
    }
    for (std::size_t i = 0; i < components.size(); ++i) {
        for (std::size_t j = i + 1; j < components.size(); ++j) {
            for (const auto& p : intersection_points(components[i], components[j])) add_unique(out, p);
        }
    }
    return out;
}

Arrangement assemble(const std::string& name, std::vector<CuratedComponent> components) {
    Arrangement a{name, std::move(components), HomogeneousPoly::constant(Eisenstein(1)), {}};
    for (const auto& c : a.components) a.product = a.product * c.poly;
    a.singular_points = singular_locus(a.components);
    return a;
}

int parse_index(const std::string& s) {
    const int v = std::stoi(s);
    if (v < 1 || v > 3) throw CatalogError("index " + s + " out of range 1..3");
    return v - 1;
}

Check check(std::string claim, std::string witness, bool passed, std::string detail = {}) {
    return {std::move(claim), std::move(witness), passed, std::move(detail)};
}

template <ExactField K>
std::vector<std::vector<K>> small_nullspace(std::vector<std::vector<K>> m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const K inv = K(1) / m[row][c];
        for (auto& e : m[row]) e = e * inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c].is_zero()) continue;
            const K f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] = m[r][k] - f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    std::vector<std::vector<K>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<K> v(cols, K(0));
        v[free] = K(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::string to_string(Kind k) {
    switch (k) {
        case Kind::cubic: return "cubic";
        case Kind::conic: return "conic";
        case Kind::line: return "line";
    }
    return "line";
}

const CuratedData& curated_data() {
    static const CuratedData data = make_curated();
    return data;
}

std::vector<LabelledCurve> Arrangement::labelled() const {
    std::vector<LabelledCurve> out;
    for (const auto& c : components) out.push_back({c.label, c.poly.promote<QuadExt>()});
    return out;
}

std::string Arrangement::curve_file() const {
    std::ostringstream os;
    os << "# arrangement " << name << ", degree " << degree() << "\n";
    for (const auto& c : components) os << "# " << c.label << "\n" << c.poly.str() << "\n";
    return os.str();
}

std::vector<ExtPoint> intersection_points(const CuratedComponent& g, const CuratedComponent& h) {
    if (g.kind == Kind::line && h.kind == Kind::line) {
        const auto p = cross(line_coeffs(g.poly), line_coeffs(h.poly));
        return {Point(p).promote<QuadExt>().canonical()};
    }
    if (g.kind == Kind::line) return line_meets_curve(g.poly, h.poly);
    if (h.kind == Kind::line) return line_meets_curve(h.poly, g.poly);
    if (g.kind == Kind::conic && h.kind == Kind::conic) return conic_meets_conic(g, h);
    // Cubic with a conic: only the curated contact points are used; the
    // Bézout budget check confirms nothing is missing.
    std::vector<ExtPoint> out;
    for (const auto& k : known_points()) {
        if (evaluate(g.poly, k).is_zero() && evaluate(h.poly, k).is_zero()) add_unique(out, k.promote<QuadExt>());
    }
    return out;
}

Arrangement build(const std::string& name) {
    const auto& d = curated_data();
    std::smatch m;
    static const std::regex f_re(R"(F\(?\s*(\d)\s*,?\s*(\d)\s*\)?)");
    static const std::regex c_re(R"(C\(?\s*(\d)\s*,?\s*(\d)\s*,?\s*(\d)\s*\)?)");
    if (std::regex_match(name, m, f_re)) {
        const int i = parse_index(m[1]);
        const int j = parse_index(m[2]);
        return assemble("F(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")",
                        {d.cubic, d.conics[i], d.lines[j]});
    }
    if (std::regex_match(name, m, c_re)) {
        const int i = parse_index(m[1]);
        const int j = parse_index(m[2]);
        const int k = parse_index(m[3]);
        if (j == k) throw CatalogError("C(i,j,k) needs two distinct lines, got j = k = " + std::to_string(j + 1));
        return assemble("C(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")",
                        {d.cubic, d.conics[i], d.lines[j], d.lines[k]});
    }
    if (name == "Example_3_2") return assemble(name, {d.cubic, d.conics[0], d.aux_line});
    if (name == "Example_3_3") return assemble(name, {d.cubic, d.lines[0], d.lines[1], d.lines[2]});
    if (name == "NearlyFree_1") return assemble(name, {d.cubic, d.conics[0], d.lines[0], d.lines[1], d.lines[2]});
    if (name == "NearlyFree_2") return assemble(name, {d.cubic, d.conics[0], d.conics[1], d.lines[1]});
    throw CatalogError("unknown arrangement '" + name + "'");
}

std::vector<std::string> all_arrangement_names() {
    std::vector<std::string> out;
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) out.push_back("F(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            for (int k = j + 1; k <= 3; ++k) {
                out.push_back("C(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
            }
        }
    }
    out.insert(out.end(), {"Example_3_2", "Example_3_3", "NearlyFree_1", "NearlyFree_2"});
    return out;
}

ExtPoly osculating_conic(const HomogeneousPoly& f, const ExtPoint& p) {
    if (f.degree() < 3) throw std::invalid_argument("osculating conic needs degree >= 3");
    const ExtPoly fe = f.promote<QuadExt>();
    if (inflection_order(fe, p) > 0) throw DegenerateOsculation("point " + p.str() + " is a flex");
    const auto branch = expand_branches(fe, p).front();
    const auto basis = monomial_basis(2);
    std::vector<Series<QuadExt>> along;
    for (const auto& mono : basis) {
        TermMap<QuadExt> t;
        t.emplace(mono, QuadExt(1));
        along.push_back(compose(branch.chart.localize(ExtPoly::from_terms(2, t)), branch.u, branch.v));
    }
    std::vector<std::vector<QuadExt>> system(5, std::vector<QuadExt>(basis.size()));
    for (std::size_t k = 0; k < 5; ++k) {
        for (std::size_t c = 0; c < basis.size(); ++c) system[k][c] = along[c][k];
    }
    const auto kernel = small_nullspace(system, basis.size());
    if (kernel.size() != 1) {
        throw DegenerateOsculation("osculating system at " + p.str() + " has solution space of dimension " +
                                   std::to_string(kernel.size()));
    }
    QuadExt scale(1);
    for (std::size_t c = basis.size(); c-- > 0;) {
        if (!kernel[0][c].is_zero()) {
            scale = kernel[0][c];
            break;
        }
    }
    TermMap<QuadExt> terms;
    for (std::size_t c = 0; c < basis.size(); ++c) terms.emplace(basis[c], kernel[0][c] / scale);
    return ExtPoly::from_terms(2, terms);
}

bool is_sextactic(const HomogeneousPoly& f, const ExtPoint& p) {
    const auto conic = osculating_conic(f, p);
    const auto branch = expand_branches(f.promote<QuadExt>(), p).front();
    const auto m = branch_mult(conic, branch);
    return m.infinite || m.value >= 6;
}

bool proportional(const ExtPoly& a, const ExtPoly& b) {
    if (a.degree() != b.degree()) return false;
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    const auto& [ma, ca] = *a.terms().begin();
    const QuadExt cb = b.coeff(ma);
    if (cb.is_zero()) return false;
    return a.scaled(cb) == b.scaled(ca);
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerificationReport verify_catalog() {
    const auto& d = curated_data();
    VerificationReport report;
    const ExtPoly e = d.cubic.poly.promote<QuadExt>();

    for (int i = 0; i < 3; ++i) {
        const auto& conic = d.conics[i];
        const auto p = d.sextactic[i].promote<QuadExt>();
        const std::string tag = "P" + std::to_string(i + 1);
        const bool on_e = evaluate(e, p).is_zero();
        const bool on_c = conic.poly.promote<QuadExt>().evaluate(p.coords()).is_zero();
        report.checks.push_back(check(tag + " lies on E and " + conic.label, p.str(), on_e && on_c));
        if (on_e && on_c) {
            const auto mult = branch_mult(conic.poly.promote<QuadExt>(), expand_branches(e, p).front());
            report.checks.push_back(check("contact of " + conic.label + " with E at " + tag + " is 6", p.str(),
                                          mult == Multiplicity::finite(6), "computed " + mult.str()));
            const auto osc = osculating_conic(d.cubic.poly, p);
            report.checks.push_back(check("osculating conic of E at " + tag + " is " + conic.label, p.str(),
                                          proportional(osc, conic.poly.promote<QuadExt>()), "computed " + osc.str()));
        }
    }

    for (int j = 0; j < 3; ++j) {
        const auto& line = d.lines[j];
        const auto q = d.flexes[j].promote<QuadExt>();
        const std::string tag = "Q" + std::to_string(j + 1);
        const ExtPoly l = line.poly.promote<QuadExt>();
        const bool on_e = evaluate(e, q).is_zero();
        const bool on_l = evaluate(l, q).is_zero();
        report.checks.push_back(check(tag + " lies on E and " + line.label, q.str(), on_e && on_l));
        if (!(on_e && on_l)) continue;
        std::array<QuadExt, 3> grad;
        for (int k = 0; k < 3; ++k) grad[k] = e.partial(kVars[k]).evaluate(q.coords());
        const auto tangent = ExtPoly::linear(grad[0], grad[1], grad[2]);
        report.checks.push_back(check(line.label + " is the tangent line of E at " + tag, q.str(),
                                      proportional(tangent, l), "tangent " + tangent.str()));
        const auto mult = branch_mult(l, expand_branches(e, q).front());
        report.checks.push_back(check("contact of " + line.label + " with E at " + tag + " is 3", q.str(),
                                      mult == Multiplicity::finite(3), "computed " + mult.str()));
        const int iota = inflection_order(e, q);
        report.checks.push_back(
            check("inflection order of E at " + tag + " is 1", q.str(), iota == 1, "computed " + std::to_string(iota)));
    }

    const ExtPoly hess = hessian_det(d.cubic.poly).promote<QuadExt>();
    std::vector<ExtPoint> hess_points;
    for (const auto& q : d.flexes) hess_points.push_back(q.promote<QuadExt>());
    hess_points.push_back(d.node.promote<QuadExt>());
    bool all_vanish = true;
    std::string which;
    for (const auto& p : hess_points) {
        if (!evaluate(hess, p).is_zero()) {
            all_vanish = false;
            which += p.str() + " ";
        }
    }
    report.checks.push_back(check("H(E) vanishes at Q1, Q2, Q3 and the node", "", all_vanish, which));
    int budget = 0;
    for (const auto& p : hess_points) {
        for (const auto& b : expand_branches(e, p)) {
            const auto m = branch_mult(hess, b);
            budget += m.infinite ? 1000 : m.value;
        }
    }
    report.checks.push_back(check("E ∩ H(E) intersection budget at Q1, Q2, Q3, node equals 9", "", budget == 9,
                                  "counted " + std::to_string(budget)));

    for (const auto& conic : d.conics) {
        // symmetric matrix of the quadratic form
        Matrix3<Eisenstein> sym;
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) {
                Monomial mono;
                mono.e[a] += 1;
                mono.e[b] += 1;
                const Eisenstein c = conic.poly.coeff(mono);
                sym[a][b] = a == b ? c : c / Eisenstein(2);
            }
        }
        const Eisenstein det = det3(sym);
        report.checks.push_back(check(conic.label + " is a smooth conic", "", !det.is_zero(), "det " + det.str()));
    }
    return report;
}

}  // namespace curvefree::catalog
