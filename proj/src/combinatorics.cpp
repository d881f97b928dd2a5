#include "curvefree/combinatorics.hpp"

#include <sstream>

namespace curvefree::combinatorics {

namespace {

std::size_t type_index(SingularityTag tag) {
    for (std::size_t i = 0; i < kTypes.size(); ++i) {
        if (kTypes[i] == tag) return i;
    }
    throw std::invalid_argument("singularity type " + to_string(tag) + " is not tracked");
}

std::size_t var_index(Variable v) { return static_cast<std::size_t>(v); }

Rational q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

}  // namespace

long WeakCombinatorics::count(SingularityTag tag) const {
    switch (tag) {
        case SingularityTag::A1: return n2;
        case SingularityTag::A3: return t3;
        case SingularityTag::D4: return n3;
        case SingularityTag::A5: return t5;
        case SingularityTag::A7: return t7;
        case SingularityTag::A11: return t11;
        case SingularityTag::D14: return d14;
        case SingularityTag::UNKNOWN: break;
    }
    throw std::invalid_argument("UNKNOWN is not a tracked type");
}

long& WeakCombinatorics::count(SingularityTag tag) {
    switch (tag) {
        case SingularityTag::A1: return n2;
        case SingularityTag::A3: return t3;
        case SingularityTag::D4: return n3;
        case SingularityTag::A5: return t5;
        case SingularityTag::A7: return t7;
        case SingularityTag::A11: return t11;
        case SingularityTag::D14: return d14;
        case SingularityTag::UNKNOWN: break;
    }
    throw std::invalid_argument("UNKNOWN is not a tracked type");
}

void WeakCombinatorics::validate() const {
    for (long v : {d, k, l, n2, t3, n3, t5, t7, t11, d14}) {
        if (v < 0) throw std::invalid_argument("negative entry in weak combinatorics " + str());
    }
}

std::string WeakCombinatorics::str() const {
    std::ostringstream os;
    os << "(d=" << d << ", k=" << k << ", l=" << l << "; n2=" << n2 << ", t3=" << t3 << ", n3=" << n3
       << ", t5=" << t5 << ", t7=" << t7 << ", t11=" << t11 << ", d14=" << d14 << ")";
    return os.str();
}

long bezout_weight(SingularityTag tag) {
    switch (tag) {
        case SingularityTag::A1: return 2;
        case SingularityTag::A3: return 4;
        case SingularityTag::D4: return 6;
        case SingularityTag::A5: return 6;
        case SingularityTag::A7: return 8;
        case SingularityTag::A11: return 12;
        case SingularityTag::D14: return 16;
        case SingularityTag::UNKNOWN: break;
    }
    throw std::invalid_argument("no weight for UNKNOWN");
}

long pairwise_intersection_total(long d, long k, long l) {
    const long total = d * (d - 1) + 4 * k * (k - 1) + 9 * l * (l - 1) + 4 * d * k + 6 * d * l + 12 * k * l;
    const long m = d + 2 * k + 3 * l;
    if (total != m * m - d - 4 * k - 9 * l) throw std::logic_error("naive count identity failed");
    return total;
}

long naive_count_residual(const WeakCombinatorics& w) {
    long singular = 0;
    for (auto tag : kTypes) singular += bezout_weight(tag) * w.count(tag);
    return pairwise_intersection_total(w.d, w.k, w.l) - singular;
}

bool AlphaDomain::contains(const Rational& alpha) const {
    const bool above = lo_inclusive ? lo <= alpha : lo < alpha;
    return above && alpha <= hi;
}

std::string AlphaDomain::str() const {
    return std::string(lo_inclusive ? "[" : "(") + lo.str() + ", " + hi.str() + "]";
}

Rational OrbifoldEntry::euler(const Rational& alpha) const {
    const Rational base = a - b * alpha;
    return base * base / c;
}

std::string OrbifoldEntry::formula() const {
    return "(" + a.str() + "-" + b.str() + "a)^2/" + c.str();
}

const std::array<OrbifoldEntry, 7>& orbifold_table() {
    static const std::array<OrbifoldEntry, 7> table{{
        {SingularityTag::A1, 1, q(1), q(1), q(1), {q(0), true, q(1)}},
        {SingularityTag::A3, 3, q(3), q(4), q(8), {q(1, 3), false, q(3, 4)}},
        {SingularityTag::D4, 4, q(2), q(3), q(4), {q(0), false, q(2, 3)}},
        {SingularityTag::A5, 5, q(4), q(6), q(12), {q(1, 3), false, q(2, 3)}},
        {SingularityTag::A7, 7, q(5), q(8), q(16), {q(3, 8), false, q(5, 8)}},
        {SingularityTag::A11, 11, q(7), q(12), q(24), {q(5, 12), false, q(7, 12)}},
        {SingularityTag::D14, 14, q(7), q(13), q(24), {q(5, 11), false, q(7, 13)}},
    }};
    return table;
}

const OrbifoldEntry& orbifold_entry(SingularityTag tag) { return orbifold_table()[type_index(tag)]; }

Rational orbifold_euler(SingularityTag tag, const Rational& alpha) {
    const auto& entry = orbifold_entry(tag);
    if (!entry.domain.contains(alpha)) {
        throw AlphaDomainError("alpha = " + alpha.str() + " outside " + entry.domain.str() + " for " + to_string(tag));
    }
    return entry.euler(alpha);
}

Rational bmy_point_weight(SingularityTag tag, const Rational& alpha) {
    const auto& entry = orbifold_entry(tag);
    return Rational(3) * (alpha * Rational(entry.milnor - 1) + Rational(1) - orbifold_euler(tag, alpha));
}

BmySides bmy_sides(const WeakCombinatorics& w, const Rational& alpha) {
    BmySides sides;
    for (auto tag : kTypes) {
        const long n = w.count(tag);
        if (n == 0) continue;
        sides.lhs += Rational(n) * bmy_point_weight(tag, alpha);
    }
    sides.m = w.degree();
    const Rational m(sides.m);
    sides.rhs = (Rational(3) * alpha - alpha * alpha) * m * m - Rational(3) * alpha * m;
    sides.degree_hypothesis = sides.m >= 6;
    return sides;
}

Rational hirzebruch_slack(const WeakCombinatorics& w) {
    const Rational positive = Rational(27 * w.l + 8 * w.k + w.n2) + q(3, 4) * Rational(w.n3);
    const Rational negative = Rational(w.d) + q(5, 2) * Rational(w.t3) + Rational(5 * w.t5) +
                              q(29, 4) * Rational(w.t7) + q(23, 2) * Rational(w.t11) + q(79, 8) * Rational(w.d14);
    return positive - negative;
}

std::string to_string(Variable v) {
    static const std::array<const char*, 10> names{"d", "k", "l", "n2", "t3", "n3", "t5", "t7", "t11", "d14"};
    return names[var_index(v)];
}

Variable variable_of(SingularityTag tag) {
    switch (tag) {
        case SingularityTag::A1: return Variable::n2;
        case SingularityTag::A3: return Variable::t3;
        case SingularityTag::D4: return Variable::n3;
        case SingularityTag::A5: return Variable::t5;
        case SingularityTag::A7: return Variable::t7;
        case SingularityTag::A11: return Variable::t11;
        case SingularityTag::D14: return Variable::d14;
        case SingularityTag::UNKNOWN: break;
    }
    throw std::invalid_argument("UNKNOWN has no variable");
}

const LinearForm& reference_inequality() {
    static const LinearForm form{-q(1),     q(8),      q(27),      q(1),        -q(5, 2),
                                 q(3, 4),   -q(5),     -q(29, 4),  -q(23, 2),   -q(79, 8)};
    return form;
}

const std::array<Rational, 7>& reference_intermediate() {
    // order of kTypes: A1, A3, D4, A5, A7, A11, D14
    static const std::array<Rational, 7> coeffs{q(9, 4), q(45, 8), q(117, 16), q(35, 4),
                                                q(189, 4), q(143, 8), q(719, 32)};
    return coeffs;
}

std::vector<IntermediateCoefficient> Derivation::discrepancies() const {
    std::vector<IntermediateCoefficient> out;
    for (const auto& c : intermediate) {
        if (!c.matches()) out.push_back(c);
    }
    return out;
}

Derivation derive_inequality(const Rational& alpha) {
    Derivation out;
    out.alpha = alpha;
    const Rational quad = Rational(3) * alpha - alpha * alpha;
    const Rational lin = Rational(3) * alpha;

    // rhs = quad * m^2 - lin * m, with m^2 = d + 4k + 9l + sum weight_T * T
    LinearForm& f = out.raw;
    f[var_index(Variable::d)] = quad - lin;
    f[var_index(Variable::k)] = quad * Rational(4) - lin * Rational(2);
    f[var_index(Variable::l)] = quad * Rational(9) - lin * Rational(3);
    for (std::size_t i = 0; i < kTypes.size(); ++i) {
        const auto tag = kTypes[i];
        const Rational lhs_coeff = bmy_point_weight(tag, alpha);
        f[var_index(variable_of(tag))] = quad * Rational(bezout_weight(tag)) - lhs_coeff;
        out.intermediate.push_back({tag, lhs_coeff, reference_intermediate()[i]});
    }
    const Rational& cd = f[var_index(Variable::d)];
    out.scale = cd.is_zero() ? Rational(1) : (Rational(1) / cd).abs();
    for (std::size_t i = 0; i < f.size(); ++i) out.final_form[i] = f[i] * out.scale;
    out.final_matches_reference = out.final_form == reference_inequality();
    return out;
}

void for_each_admissible(long d, long k, long l, long cap, const std::function<void(const Admissible&)>& visit) {
    if (d < 1 || k < 1 || l < 1) throw std::invalid_argument("d, k, l must all be at least 1");
    const long total = pairwise_intersection_total(d, k, l);
    if (total > cap) {
        throw SizeError("pairwise intersection total " + std::to_string(total) + " exceeds cap " + std::to_string(cap),
                        total);
    }
    WeakCombinatorics w{d, k, l};
    std::array<long, 7> weights{};
    for (std::size_t i = 0; i < kTypes.size(); ++i) weights[i] = bezout_weight(kTypes[i]);

    std::function<void(std::size_t, long)> recurse = [&](std::size_t idx, long remaining) {
        long& slot = w.count(kTypes[idx]);
        if (idx + 1 == kTypes.size()) {
            if (remaining % weights[idx] != 0) return;
            slot = remaining / weights[idx];
            const Rational slack = hirzebruch_slack(w);
            visit(Admissible{w, slack, slack.sign() >= 0});
            slot = 0;
            return;
        }
        for (long n = 0; n * weights[idx] <= remaining; ++n) {
            slot = n;
            recurse(idx + 1, remaining - n * weights[idx]);
        }
        slot = 0;
    };
    recurse(0, total);
}

std::vector<Admissible> enumerate_admissible(long d, long k, long l, long cap) {
    std::vector<Admissible> out;
    for_each_admissible(d, k, l, cap, [&](const Admissible& a) { out.push_back(a); });
    return out;
}

}  // namespace curvefree::combinatorics
