#include "curvefree/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "curvefree/catalog.hpp"
#include "curvefree/combinatorics.hpp"
#include "curvefree/localsing.hpp"
#include "curvefree/parse.hpp"
#include "curvefree/syzygy.hpp"

namespace curvefree::cli {

namespace {

using json = nlohmann::ordered_json;
namespace comb = combinatorics;

/// Failure with a machine-readable key.
class CommandError : public std::runtime_error {
public:
    CommandError(std::string key, const std::string& what, json detail = json::object())
        : std::runtime_error(what), key_(std::move(key)), detail_(std::move(detail)) {}
    const std::string& key() const { return key_; }
    const json& detail() const { return detail_; }

private:
    std::string key_;
    json detail_;
};

struct Outcome {
    json inputs = json::object();
    json results = json::object();
    int exit = kOk;
};

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CommandError("file_not_found", "cannot open " + path, {{"path", path}});
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CommandError("file_not_writable", "cannot write " + path, {{"path", path}});
    out << text;
}

struct LoadedCurve {
    CurveFile file;
    HomogeneousPoly product;
};

LoadedCurve load_curve(const std::string& path, json& inputs) {
    const std::string text = read_text(path);
    inputs["curve"] = path;
    inputs["fnv1a64"] = fnv1a64(text);
    LoadedCurve out{parse_curve_file(text), {}};
    if (out.file.components.empty()) throw CommandError("empty_curve", path + " contains no polynomial");
    out.product = out.file.product();
    if (out.product.degree() < 2) throw CommandError("invalid_argument", "curve degree must be at least 2");
    return out;
}

json components_json(const CurveFile& file) {
    json arr = json::array();
    for (const auto& c : file.components) arr.push_back({{"label", c.label}, {"degree", c.poly.degree()}});
    return arr;
}

std::string poly_or_zero(const HomogeneousPoly& p) { return p.is_zero() ? "0" : p.str(); }

json certificate_json(const FreenessCertificate& cert) {
    json j;
    j["degree"] = cert.degree;
    j["mdr"] = cert.r;
    j["tau"] = cert.tau;
    j["status"] = to_string(cert.status);
    j["nearly_free_convention"] = kNearlyFreeConvention;
    if (cert.exponents) {
        j["exponents"] = json::array({cert.exponents->first, cert.exponents->second});
    } else {
        j["exponents"] = nullptr;
    }
    j["probe_degrees"] = cert.probe_degrees;
    if (cert.witness) {
        const auto& w = *cert.witness;
        j["witness"] = {{"a", poly_or_zero(w[0])}, {"b", poly_or_zero(w[1])}, {"c", poly_or_zero(w[2])}};
    }
    return j;
}

constexpr std::array<SingularityTag, 8> kTagOrder{SingularityTag::A1,  SingularityTag::A3, SingularityTag::A5,
                                                  SingularityTag::A7,  SingularityTag::A11, SingularityTag::D4,
                                                  SingularityTag::D14, SingularityTag::UNKNOWN};

std::map<SingularityTag, int> tag_counts(const ArrangementAnalysis& a) {
    std::map<SingularityTag, int> out;
    for (const auto& p : a.points) ++out[p.type.tag];
    return out;
}

json tag_counts_json(const std::map<SingularityTag, int>& counts) {
    json j = json::object();
    for (auto tag : kTagOrder) {
        if (auto it = counts.find(tag); it != counts.end()) j[to_string(tag)] = it->second;
    }
    return j;
}

json profile_json(const SingularityProfile& profile, const SingularityType& type) {
    json j;
    j["point"] = profile.point.str();
    json branches = json::array();
    for (const auto& b : profile.branches) {
        branches.push_back({{"component", b.component},
                            {"tangent", {b.branch.tangent[0].str(), b.branch.tangent[1].str()}}});
    }
    j["branches"] = branches;
    j["pairwise"] = profile.pairwise;
    j["type"] = to_string(type.tag);
    j["milnor"] = type.milnor;
    if (type.tjurina) {
        j["tjurina"] = *type.tjurina;
    } else {
        j["tjurina"] = nullptr;
    }
    return j;
}

// ---- curve commands

Outcome cmd_certify(const std::string& path) {
    Outcome o;
    const auto curve = load_curve(path, o.inputs);
    o.results["components"] = components_json(curve.file);
    const json cert = certificate_json(certify(curve.product));
    for (const auto& [k, v] : cert.items()) o.results[k] = v;
    return o;
}

Outcome cmd_mdr(const std::string& path) {
    Outcome o;
    const auto curve = load_curve(path, o.inputs);
    o.results["degree"] = curve.product.degree();
    o.results["mdr"] = mdr(curve.product);
    return o;
}

Outcome cmd_tjurina(const std::string& path) {
    Outcome o;
    const auto curve = load_curve(path, o.inputs);
    const auto probe = total_tjurina_probe(curve.product);
    o.results["degree"] = curve.product.degree();
    o.results["tau"] = probe.tau;
    o.results["probe_degrees"] = probe.degrees;
    o.results["probe_values"] = probe.values;
    return o;
}

Outcome cmd_classify(const std::string& path, const std::string& point_text) {
    Outcome o;
    const auto curve = load_curve(path, o.inputs);
    o.inputs["point"] = point_text;
    const auto p = parse_point(point_text).promote<QuadExt>().canonical();
    std::vector<LabelledCurve> comps;
    bool on_curve = false;
    for (const auto& c : curve.file.components) {
        auto poly = c.poly.promote<QuadExt>();
        if (evaluate(poly, p).is_zero()) on_curve = true;
        comps.push_back({c.label, std::move(poly)});
    }
    if (!on_curve) throw CommandError("point_not_on_curve", p.str() + " is not on the curve");
    const auto profile = build_profile(comps, p);
    const auto type = classify(profile);
    o.results = profile_json(profile, type);
    return o;
}

// ---- catalog

json check_json(const catalog::Check& c) {
    json j{{"claim", c.claim}, {"witness", c.witness}, {"passed", c.passed}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

json catalog_verify_json(bool& all_passed) {
    const auto report = catalog::verify_catalog();
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back(check_json(c));
    all_passed = report.all_passed();
    return checks;
}

Outcome cmd_catalog_verify() {
    Outcome o;
    bool ok = false;
    o.results["checks"] = catalog_verify_json(ok);
    o.results["all_passed"] = ok;
    o.exit = ok ? kOk : kCheckFailed;
    return o;
}

Outcome cmd_catalog_build(const std::string& name, const std::string& out_path) {
    Outcome o;
    o.inputs["name"] = name;
    const auto arr = catalog::build(name);
    o.results["name"] = arr.name;
    o.results["degree"] = arr.degree();
    json comps = json::array();
    for (const auto& c : arr.components) {
        comps.push_back({{"label", c.label}, {"kind", catalog::to_string(c.kind)}, {"poly", c.poly.str()}});
    }
    o.results["components"] = comps;
    o.results["singular_points"] = arr.singular_points.size();
    const std::string text = arr.curve_file();
    if (out_path.empty()) {
        o.results["curve_file"] = text;
    } else {
        write_text(out_path, text);
        o.results["out"] = out_path;
        o.results["fnv1a64"] = fnv1a64(text);
    }
    return o;
}

Outcome cmd_catalog_list() {
    Outcome o;
    o.results["arrangements"] = catalog::all_arrangement_names();
    return o;
}

// ---- combinatorics

Rational parse_alpha(const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw CommandError("invalid_argument", "alpha must be p or p/q: " + std::string(e.what()));
    }
}

json admissible_json(const comb::Admissible& a) {
    const auto& w = a.w;
    return {{"n2", w.n2},   {"t3", w.t3},   {"n3", w.n3},           {"t5", w.t5},  {"t7", w.t7},
            {"t11", w.t11}, {"d14", w.d14}, {"slack", a.slack.str()}, {"pass", a.pass}};
}

Outcome cmd_enumerate(long d, long k, long l, long cap, const std::string& csv_path) {
    Outcome o;
    o.inputs = {{"d", d}, {"k", k}, {"l", l}, {"cap", cap}};
    std::ostringstream csv;
    csv << "d,k,l,n2,t3,n3,t5,t7,t11,d14,slack_num,slack_den,pass\n";
    json solutions = json::array();
    std::size_t count = 0;
    std::size_t passing = 0;
    comb::for_each_admissible(d, k, l, cap, [&](const comb::Admissible& a) {
        ++count;
        if (a.pass) ++passing;
        if (comb::naive_count_residual(a.w) != 0) throw std::logic_error("enumerated solution with nonzero residual");
        if (!csv_path.empty()) {
            const auto& w = a.w;
            csv << w.d << ',' << w.k << ',' << w.l << ',' << w.n2 << ',' << w.t3 << ',' << w.n3 << ',' << w.t5
                << ',' << w.t7 << ',' << w.t11 << ',' << w.d14 << ',' << a.slack.numerator().get_str() << ','
                << a.slack.denominator().get_str() << ',' << (a.pass ? "true" : "false") << '\n';
        } else {
            solutions.push_back(admissible_json(a));
        }
    });
    o.results["pairwise_total"] = comb::pairwise_intersection_total(d, k, l);
    o.results["m"] = d + 2 * k + 3 * l;
    o.results["count"] = count;
    o.results["passing"] = passing;
    if (csv_path.empty()) {
        o.results["solutions"] = solutions;
    } else {
        write_text(csv_path, csv.str());
        o.results["csv"] = csv_path;
    }
    return o;
}

json linear_form_json(const comb::LinearForm& f) {
    json j = json::object();
    for (auto v : comb::kVariables) j[comb::to_string(v)] = f[static_cast<std::size_t>(v)].str();
    return j;
}

json derivation_json(const comb::Derivation& der) {
    json j;
    j["alpha"] = der.alpha.str();
    j["raw"] = linear_form_json(der.raw);
    j["scale"] = der.scale.str();
    j["final"] = linear_form_json(der.final_form);
    j["reference_final"] = linear_form_json(comb::reference_inequality());
    j["final_matches_reference"] = der.final_matches_reference;
    json inter = json::array();
    for (const auto& c : der.intermediate) {
        inter.push_back({{"type", to_string(c.tag)},
                         {"variable", comb::to_string(comb::variable_of(c.tag))},
                         {"computed", c.computed.str()},
                         {"reference", c.reference.str()},
                         {"matches", c.matches()}});
    }
    j["intermediate"] = inter;
    json disc = json::array();
    for (const auto& c : der.discrepancies()) disc.push_back(comb::to_string(comb::variable_of(c.tag)));
    j["discrepancies"] = disc;
    return j;
}

Outcome cmd_derive(const std::string& alpha_text) {
    Outcome o;
    o.inputs["alpha"] = alpha_text;
    o.results = derivation_json(comb::derive_inequality(parse_alpha(alpha_text)));
    return o;
}

Outcome cmd_evaluate(const comb::WeakCombinatorics& w, const std::string& alpha_text) {
    Outcome o;
    w.validate();
    o.inputs = {{"weak_combinatorics", w.str()}, {"alpha", alpha_text}};
    const auto alpha = parse_alpha(alpha_text);
    o.results["m"] = w.degree();
    o.results["naive_count_residual"] = comb::naive_count_residual(w);
    const auto sides = comb::bmy_sides(w, alpha);
    o.results["bmy"] = {{"alpha", alpha.str()},
                        {"lhs", sides.lhs.str()},
                        {"rhs", sides.rhs.str()},
                        {"holds", sides.holds()},
                        {"degree_hypothesis", sides.degree_hypothesis}};
    const auto slack = comb::hirzebruch_slack(w);
    o.results["slack"] = slack.str();
    o.results["inequality_holds"] = slack.sign() >= 0;
    return o;
}

// ---- reproduce

struct Expectation {
    std::string name;
    int degree;
    std::optional<int> r;
    long tau;
    FreenessStatus status;
    std::optional<std::pair<int, int>> exponents;
    std::optional<std::map<SingularityTag, int>> types;
};

std::vector<Expectation> expectations() {
    std::vector<Expectation> out;
    for (const auto& name : catalog::all_arrangement_names()) {
        if (name.front() == 'F') {
            out.push_back({name, 6, 2, 19, FreenessStatus::free, std::pair{2, 3}, std::nullopt});
        } else if (name.front() == 'C') {
            out.push_back({name, 7, 3, 27, FreenessStatus::free, std::pair{3, 3}, std::nullopt});
        }
    }
    using T = SingularityTag;
    out.push_back({"Example_3_2", 6, 2, 19, FreenessStatus::free, std::pair{2, 3},
                   std::map<T, int>{{T::A1, 1}, {T::D4, 1}, {T::D14, 1}}});
    out.push_back({"Example_3_3", 6, 2, 19, FreenessStatus::free, std::pair{2, 3},
                   std::map<T, int>{{T::A1, 4}, {T::A5, 3}}});
    out.push_back({"NearlyFree_1", 8, std::nullopt, 36, FreenessStatus::nearly_free, std::nullopt, std::nullopt});
    out.push_back({"NearlyFree_2", 8, std::nullopt, 36, FreenessStatus::nearly_free, std::nullopt, std::nullopt});
    return out;
}

json expectation_json(const Expectation& e) {
    json j;
    j["degree"] = e.degree;
    if (e.r) j["mdr"] = *e.r;
    j["tau"] = e.tau;
    j["status"] = to_string(e.status);
    if (e.exponents) j["exponents"] = json::array({e.exponents->first, e.exponents->second});
    if (e.types) j["types"] = tag_counts_json(*e.types);
    return j;
}

json reproduce_arrangement(const Expectation& e) {
    const auto arr = catalog::build(e.name);
    const auto cert = certify(arr.product);
    const auto labelled = arr.labelled();
    const auto local = analyze_arrangement(labelled, arr.singular_points);
    const auto budgets = bezout_budgets(labelled, arr.singular_points);
    const bool budgets_ok =
        std::all_of(budgets.begin(), budgets.end(), [](const BezoutBudget& b) { return b.exhausted(); });
    const auto counts = tag_counts(local);

    json observed = certificate_json(cert);
    observed.erase("nearly_free_convention");
    observed.erase("witness");
    observed["types"] = tag_counts_json(counts);
    observed["local_tau_sum"] = local.tau_sum;
    observed["bezout_budgets_exhausted"] = budgets_ok;

    bool passed = cert.degree == e.degree && static_cast<long>(cert.tau) == e.tau && cert.status == e.status &&
                  (!e.r || cert.r == *e.r) && (!e.exponents || cert.exponents == e.exponents) &&
                  (!e.types || counts == *e.types);
    // the local inventory must account for the global Tjurina number
    passed = passed && local.unknown_points.empty() && local.tau_sum == static_cast<long>(cert.tau) && budgets_ok;
    return {{"name", e.name}, {"expected", expectation_json(e)}, {"observed", observed}, {"passed", passed}};
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads; results keep index order.
std::vector<json> parallel_map(std::size_t n, unsigned jobs, const std::function<json(std::size_t)>& fn) {
    std::vector<json> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> threads;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

Outcome cmd_reproduce(unsigned jobs) {
    Outcome o;
    std::size_t total = 0;
    std::size_t passed = 0;
    auto tally = [&](bool ok) {
        ++total;
        if (ok) ++passed;
    };

    bool catalog_ok = false;
    o.results["catalog"] = {{"checks", catalog_verify_json(catalog_ok)}, {"passed", catalog_ok}};
    tally(catalog_ok);

    const auto exp = expectations();
    const auto arrangements = parallel_map(exp.size(), jobs, [&](std::size_t i) { return reproduce_arrangement(exp[i]); });
    json arr_json = json::array();
    for (const auto& a : arrangements) {
        tally(a["passed"].get<bool>());
        arr_json.push_back(a);
    }
    o.results["arrangements"] = arr_json;

    const auto der = comb::derive_inequality();
    const auto disc = der.discrepancies();
    const bool der_ok = der.final_matches_reference && disc.size() == 1 && disc[0].tag == SingularityTag::A7 &&
                        disc[0].computed == Rational(189, 16) && disc[0].reference == Rational(189, 4);
    json der_json = derivation_json(der);
    der_json["passed"] = der_ok;
    o.results["derivation"] = der_json;
    tally(der_ok);

    const auto sols = comb::enumerate_admissible(1, 1, 1);
    bool general_position = false;
    bool residuals_zero = true;
    for (const auto& s : sols) {
        residuals_zero = residuals_zero && comb::naive_count_residual(s.w) == 0;
        const auto& w = s.w;
        if (w.n2 == 11 && w.t3 == 0 && w.n3 == 0 && w.t5 == 0 && w.t7 == 0 && w.t11 == 0 && w.d14 == 0) {
            general_position = s.slack == Rational(45) && s.pass;
        }
    }
    const bool enum_ok = general_position && residuals_zero;
    o.results["enumeration"] = {{"d", 1},
                                {"k", 1},
                                {"l", 1},
                                {"count", sols.size()},
                                {"general_position_slack_45", general_position},
                                {"all_residuals_zero", residuals_zero},
                                {"passed", enum_ok}};
    tally(enum_ok);

    o.results["summary"] = {{"checks", total}, {"passed", passed}, {"all_passed", passed == total}};
    o.exit = passed == total ? kOk : kCheckFailed;
    return o;
}

std::string join(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) {
        if (!s.empty()) s += ' ';
        s += a;
    }
    return s;
}

json error_json(const std::string& key, const std::string& message, json detail = json::object()) {
    json j{{"key", key}, {"message", message}};
    for (auto& [k, v] : detail.items()) j[k] = v;
    return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact freeness certification and combinatorics checks for plane curve arrangements", "curvefree"};
    app.require_subcommand(1);

    std::string curve;
    std::string point;
    auto* certify_cmd = app.add_subcommand("certify", "mdr, Tjurina number and freeness status of a curve");
    certify_cmd->add_option("--curve", curve, "curve file")->required();
    auto* mdr_cmd = app.add_subcommand("mdr", "minimal degree of a Jacobian syzygy");
    mdr_cmd->add_option("--curve", curve, "curve file")->required();
    auto* tjurina_cmd = app.add_subcommand("tjurina", "global Tjurina number");
    tjurina_cmd->add_option("--curve", curve, "curve file")->required();
    auto* classify_cmd = app.add_subcommand("classify", "branch profile and type of a singular point");
    classify_cmd->add_option("--curve", curve, "curve file")->required();
    classify_cmd->add_option("--point", point, "projective point x:y:z")->required();

    auto* catalog_cmd = app.add_subcommand("catalog", "curated nodal cubic data and arrangements");
    catalog_cmd->require_subcommand(1);
    auto* verify_cmd = catalog_cmd->add_subcommand("verify", "cross-check the curated data");
    auto* list_cmd = catalog_cmd->add_subcommand("list", "names accepted by build");
    std::string name;
    std::string out_path;
    auto* build_cmd = catalog_cmd->add_subcommand("build", "write an arrangement as a curve file");
    build_cmd->add_option("name", name, "arrangement name, e.g. F(1,2) or C(1,2,3)")->required();
    build_cmd->add_option("--out", out_path, "output curve file");

    auto* comb_cmd = app.add_subcommand("combinatorics", "weak combinatorics of line, conic and cubic arrangements");
    comb_cmd->require_subcommand(1);
    comb::WeakCombinatorics w;
    long cap = comb::kDefaultCap;
    std::string csv_path;
    std::string alpha = "1/2";
    auto* enum_cmd = comb_cmd->add_subcommand("enumerate", "solutions of the naive count for fixed d, k, l");
    enum_cmd->add_option("--d", w.d, "number of lines")->required();
    enum_cmd->add_option("--k", w.k, "number of conics")->required();
    enum_cmd->add_option("--l", w.l, "number of elliptic curves")->required();
    enum_cmd->add_option("--cap", cap, "largest pairwise intersection total to enumerate")->capture_default_str();
    enum_cmd->add_option("--csv", csv_path, "write solutions as CSV");
    auto* derive_cmd = comb_cmd->add_subcommand("derive", "replay the inequality derivation");
    derive_cmd->add_option("--alpha", alpha, "orbifold weight")->capture_default_str();
    auto* eval_cmd = comb_cmd->add_subcommand("evaluate", "naive count residual, orbifold sides and slack");
    for (auto [flag, slot] : std::initializer_list<std::pair<const char*, long*>>{{"--d", &w.d},
                                                                                 {"--k", &w.k},
                                                                                 {"--l", &w.l},
                                                                                 {"--n2", &w.n2},
                                                                                 {"--t3", &w.t3},
                                                                                 {"--n3", &w.n3},
                                                                                 {"--t5", &w.t5},
                                                                                 {"--t7", &w.t7},
                                                                                 {"--t11", &w.t11},
                                                                                 {"--d14", &w.d14}}) {
        eval_cmd->add_option(flag, *slot)->capture_default_str();
    }
    eval_cmd->add_option("--alpha", alpha, "orbifold weight")->capture_default_str();

    unsigned jobs = 1;
    auto* reproduce_cmd = app.add_subcommand("reproduce", "run every catalog, certification and derivation check");
    reproduce_cmd->add_option("--jobs", jobs, "worker threads for certifications")->capture_default_str();

    json report;
    report["command"] = join(args);
    int code = kOk;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        Outcome o;
        if (*certify_cmd) {
            o = cmd_certify(curve);
        } else if (*mdr_cmd) {
            o = cmd_mdr(curve);
        } else if (*tjurina_cmd) {
            o = cmd_tjurina(curve);
        } else if (*classify_cmd) {
            o = cmd_classify(curve, point);
        } else if (*verify_cmd) {
            o = cmd_catalog_verify();
        } else if (*build_cmd) {
            o = cmd_catalog_build(name, out_path);
        } else if (*list_cmd) {
            o = cmd_catalog_list();
        } else if (*enum_cmd) {
            o = cmd_enumerate(w.d, w.k, w.l, cap, csv_path);
        } else if (*derive_cmd) {
            o = cmd_derive(alpha);
        } else if (*eval_cmd) {
            o = cmd_evaluate(w, alpha);
        } else if (*reproduce_cmd) {
            o = cmd_reproduce(jobs);
        }
        report["inputs"] = o.inputs;
        report["results"] = o.results;
        code = o.exit;
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        err << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        report["error"] = error_json("usage_error", e.what());
        code = kInputError;
    } catch (const CommandError& e) {
        report["error"] = error_json(e.key(), e.what(), e.detail());
        code = kInputError;
    } catch (const ParseError& e) {
        report["error"] = error_json("parse_error", e.what(), {{"offending", e.offending()}});
        code = kInputError;
    } catch (const catalog::CatalogError& e) {
        report["error"] = error_json("unknown_arrangement", e.what());
        code = kInputError;
    } catch (const comb::SizeError& e) {
        report["error"] = error_json("size_exceeded", e.what(), {{"pairwise_total", e.lhs()}});
        code = kInputError;
    } catch (const comb::AlphaDomainError& e) {
        report["error"] = error_json("alpha_domain", e.what());
        code = kInputError;
    } catch (const StabilizationError& e) {
        report["error"] = error_json("tjurina_not_stabilized", e.what());
        code = kInputError;
    } catch (const OutOfScopeGerm& e) {
        report["error"] = error_json("out_of_scope_germ", e.what());
        code = kInputError;
    } catch (const SuspectedContainment& e) {
        report["error"] = error_json("suspected_containment", e.what());
        code = kInputError;
    } catch (const std::invalid_argument& e) {
        report["error"] = error_json("invalid_argument", e.what());
        code = kInputError;
    } catch (const std::domain_error& e) {
        report["error"] = error_json("invalid_argument", e.what());
        code = kInputError;
    } catch (const std::exception& e) {
        report["error"] = error_json("internal_error", e.what());
        code = kInputError;
    }
    report["exit_status"] = code;
    out << report.dump(2) << "\n";
    if (report.contains("error")) err << "error: " << report["error"]["key"].get<std::string>() << ": "
                                      << report["error"]["message"].get<std::string>() << "\n";
    return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace curvefree::cli
