#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvefree/localsing.hpp"
#include "curvefree/rational.hpp"

namespace curvefree::combinatorics {

/// Singularity types tracked by the weak combinatorics, in field order.
inline constexpr std::array<SingularityTag, 7> kTypes{SingularityTag::A1,  SingularityTag::A3, SingularityTag::D4,
                                                      SingularityTag::A5,  SingularityTag::A7, SingularityTag::A11,
                                                      SingularityTag::D14};

/// d lines, k smooth conics, l elliptic curves, and the number of points of
/// each type: n2 (A1), t3 (A3), n3 (D4), t5 (A5), t7 (A7), t11 (A11), d14 (D14).
struct WeakCombinatorics {
    long d = 0;
    long k = 0;
    long l = 0;
    long n2 = 0;
    long t3 = 0;
    long n3 = 0;
    long t5 = 0;
    long t7 = 0;
    long t11 = 0;
    long d14 = 0;

    /// m = d + 2k + 3l
    long degree() const { return d + 2 * k + 3 * l; }
    long count(SingularityTag tag) const;
    long& count(SingularityTag tag);
    /// Throws std::invalid_argument on a negative entry.
    void validate() const;
    std::string str() const;
    friend bool operator==(const WeakCombinatorics&, const WeakCombinatorics&) = default;
};

/// Contribution of one point of the given type to the pairwise intersection
/// count: 2, 4, 6, 6, 8, 12, 16.
long bezout_weight(SingularityTag tag);

/// d(d-1) + 4k(k-1) + 9l(l-1) + 4dk + 6dl + 12kl
long pairwise_intersection_total(long d, long k, long l);

/// Left side of the naive count minus its singular side; zero iff it holds.
long naive_count_residual(const WeakCombinatorics& w);

/// Admissible interval for alpha; A1 is closed at both ends, the rest are
/// open on the left.
struct AlphaDomain {
    Rational lo;
    bool lo_inclusive = false;
    Rational hi;

    bool contains(const Rational& alpha) const;
    std::string str() const;
};

/// e_orb(alpha) = (a - b alpha)^2 / c on its domain.
struct OrbifoldEntry {
    SingularityTag tag;
    int milnor;
    Rational a;
    Rational b;
    Rational c;
    AlphaDomain domain;

    Rational euler(const Rational& alpha) const;
    std::string formula() const;
};

const std::array<OrbifoldEntry, 7>& orbifold_table();
const OrbifoldEntry& orbifold_entry(SingularityTag tag);

class AlphaDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws AlphaDomainError outside the type's domain.
Rational orbifold_euler(SingularityTag tag, const Rational& alpha);

/// 3 (alpha (mu - 1) + 1 - e_orb(alpha)): one point's share of the left side.
Rational bmy_point_weight(SingularityTag tag, const Rational& alpha);

struct BmySides {
    Rational lhs;
    Rational rhs;
    long m = 0;
    /// The orbifold inequality is only invoked for m >= 6.
    bool degree_hypothesis = false;
    bool holds() const { return lhs <= rhs; }
};

/// lhs = sum over types of count * bmy_point_weight, rhs = (3a - a^2) m^2 - 3a m.
/// Types with zero count are not domain-checked.
BmySides bmy_sides(const WeakCombinatorics& w, const Rational& alpha);

/// [27l + 8k + n2 + 3/4 n3] - [d + 5/2 t3 + 5 t5 + 29/4 t7 + 23/2 t11 + 79/8 d14]
Rational hirzebruch_slack(const WeakCombinatorics& w);

enum class Variable { d, k, l, n2, t3, n3, t5, t7, t11, d14 };
inline constexpr std::array<Variable, 10> kVariables{Variable::d,  Variable::k,  Variable::l,  Variable::n2,
                                                     Variable::t3, Variable::n3, Variable::t5, Variable::t7,
                                                     Variable::t11, Variable::d14};
std::string to_string(Variable v);
Variable variable_of(SingularityTag tag);

using LinearForm = std::array<Rational, 10>;

struct IntermediateCoefficient {
    SingularityTag tag;
    Rational computed;
    Rational reference;
    bool matches() const { return computed == reference; }
};

struct Derivation {
    Rational alpha;
    /// rhs - lhs of the orbifold inequality after eliminating m^2 with the
    /// naive count, as a linear form in the ten variables.
    LinearForm raw;
    /// raw scaled so the d coefficient is -1.
    Rational scale;
    LinearForm final_form;
    std::vector<IntermediateCoefficient> intermediate;
    /// Whether final_form equals the reference inequality coefficients.
    bool final_matches_reference = false;

    std::vector<IntermediateCoefficient> discrepancies() const;
};

/// Reference coefficients of the final inequality, signed as in final_form:
/// positive for l, k, n2, n3 and negative for the rest.
const LinearForm& reference_inequality();

/// Reference per-type left-side coefficients at alpha = 1/2, as listed in the
/// derivation being replayed (A7 is listed there as 189/4).
const std::array<Rational, 7>& reference_intermediate();

/// Symbolic replay of the inequality at the given alpha (1/2 by default).
Derivation derive_inequality(const Rational& alpha = Rational(1, 2));

class SizeError : public std::invalid_argument {
public:
    SizeError(const std::string& what, long lhs) : std::invalid_argument(what), lhs_(lhs) {}
    long lhs() const { return lhs_; }

private:
    long lhs_;
};

inline constexpr long kDefaultCap = 200;

struct Admissible {
    WeakCombinatorics w;
    Rational slack;
    bool pass = false;
};

/// Calls `visit` on every nonnegative solution of the naive count for fixed
/// (d, k, l), in lexicographic order of (n2, t3, n3, t5, t7, t11, d14).
/// Throws SizeError when the pairwise total exceeds `cap`.
void for_each_admissible(long d, long k, long l, long cap, const std::function<void(const Admissible&)>& visit);

std::vector<Admissible> enumerate_admissible(long d, long k, long l, long cap = kDefaultCap);

}  // namespace curvefree::combinatorics
