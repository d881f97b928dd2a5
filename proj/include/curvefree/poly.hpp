#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "curvefree/eisenstein.hpp"
#include "curvefree/quadext.hpp"

namespace curvefree {

template <typename K>
concept ExactField = requires(K a, K b) {
    K(0);
    K(1);
    { a + b } -> std::convertible_to<K>;
    { a - b } -> std::convertible_to<K>;
    { a * b } -> std::convertible_to<K>;
    { a / b } -> std::convertible_to<K>;
    { -a } -> std::convertible_to<K>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

enum class Var { x = 0, y = 1, z = 2 };

inline constexpr std::array<Var, 3> kVars{Var::x, Var::y, Var::z};

inline char var_name(Var v) { return "xyz"[static_cast<int>(v)]; }

/// x^e[0] y^e[1] z^e[2]
struct Monomial {
    std::array<int, 3> e{0, 0, 0};

    int degree() const { return e[0] + e[1] + e[2]; }
    int operator[](Var v) const { return e[static_cast<int>(v)]; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
    }

    std::string str() const;
};

/// The one monomial order used everywhere: graded, then lexicographic with
/// x > y > z, larger monomials first. Degree 2 runs x^2, xy, xz, y^2, yz, z^2.
struct GrlexFirst {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.e > b.e;
    }
};

/// All monomials of `degree` in GrlexFirst order; C(degree+2, 2) of them.
std::vector<Monomial> monomial_basis(int degree);

/// Position of `m` within monomial_basis(m.degree()).
std::size_t monomial_index(const Monomial& m);

template <ExactField K>
using TermMap = std::map<Monomial, K, GrlexFirst>;

/// Homogeneous polynomial in x, y, z over K. Zero coefficients are never
/// stored; the zero polynomial keeps its nominal degree.
template <ExactField K>
class BasicPoly {
public:
    using Coeff = K;

    BasicPoly() = default;
    explicit BasicPoly(int degree) : degree_(degree) {
        if (degree < 0) throw std::invalid_argument("negative polynomial degree");
    }

    /// Throws std::invalid_argument if any monomial has the wrong degree.
    static BasicPoly from_terms(int degree, const TermMap<K>& terms) {
        BasicPoly p(degree);
        for (const auto& [m, c] : terms) {
            if (m.degree() != degree) {
                throw std::invalid_argument("monomial " + m.str() + " has degree " + std::to_string(m.degree()) +
                                            ", expected " + std::to_string(degree));
            }
            if (!c.is_zero()) p.terms_.emplace(m, c);
        }
        return p;
    }

    static BasicPoly variable(Var v) {
        BasicPoly p(1);
        Monomial m;
        m.e[static_cast<int>(v)] = 1;
        p.terms_.emplace(m, K(1));
        return p;
    }

    static BasicPoly constant(const K& c) {
        BasicPoly p(0);
        if (!c.is_zero()) p.terms_.emplace(Monomial{}, c);
        return p;
    }

    /// Linear form a x + b y + c z.
    static BasicPoly linear(const K& a, const K& b, const K& c) {
        TermMap<K> t;
        t[Monomial{{1, 0, 0}}] = a;
        t[Monomial{{0, 1, 0}}] = b;
        t[Monomial{{0, 0, 1}}] = c;
        return from_terms(1, t);
    }

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap<K>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    K coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? K(0) : it->second;
    }

    BasicPoly operator-() const {
        BasicPoly r(degree_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    BasicPoly& operator+=(const BasicPoly& o) { return accumulate(o, false); }
    BasicPoly& operator-=(const BasicPoly& o) { return accumulate(o, true); }

    friend BasicPoly operator+(BasicPoly a, const BasicPoly& b) { return a += b; }
    friend BasicPoly operator-(BasicPoly a, const BasicPoly& b) { return a -= b; }

    friend BasicPoly operator*(const BasicPoly& a, const BasicPoly& b) {
        BasicPoly r(a.degree_ + b.degree_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                auto [it, inserted] = r.terms_.try_emplace(ma * mb, ca * cb);
                if (!inserted) it->second += ca * cb;
            }
        }
        r.prune();
        return r;
    }

    BasicPoly scaled(const K& s) const {
        BasicPoly r(degree_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    BasicPoly pow(unsigned e) const {
        BasicPoly r = constant(K(1));
        for (unsigned i = 0; i < e; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const BasicPoly& a, const BasicPoly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// Formal partial derivative; degree drops by one (stays 0 for constants).
    BasicPoly partial(Var v) const {
        const int idx = static_cast<int>(v);
        BasicPoly r(degree_ > 0 ? degree_ - 1 : 0);
        for (const auto& [m, c] : terms_) {
            if (m.e[idx] == 0) continue;
            Monomial dm = m;
            dm.e[idx] -= 1;
            r.terms_.emplace(dm, c * K(m.e[idx]));
        }
        return r;
    }

    template <ExactField V>
    V evaluate(const std::array<V, 3>& point) const {
        V total(0);
        for (const auto& [m, c] : terms_) {
            V term = lift<V>(c);
            for (int i = 0; i < 3; ++i) {
                for (int k = 0; k < m.e[i]; ++k) term = term * point[i];
            }
            total = total + term;
        }
        return total;
    }

    /// Same polynomial with coefficients mapped into a larger field.
    template <ExactField V>
    BasicPoly<V> promote() const {
        TermMap<V> t;
        for (const auto& [m, c] : terms_) t.emplace(m, lift<V>(c));
        return BasicPoly<V>::from_terms(degree_, t);
    }

    /// Exact quotient by `divisor` if it divides this polynomial.
    std::optional<BasicPoly> divide_exact(const BasicPoly& divisor) const;

    /// Text in the curve-file grammar, terms in GrlexFirst order.
    std::string str() const;

private:
    template <ExactField V>
    static V lift(const K& c) {
        if constexpr (std::is_same_v<V, K>) {
            return c;
        } else {
            return V(c);
        }
    }

    BasicPoly& accumulate(const BasicPoly& o, bool negate) {
        if (o.is_zero()) return *this;
        if (is_zero()) {
            degree_ = o.degree_;
        } else if (degree_ != o.degree_) {
            throw std::invalid_argument("degree mismatch in polynomial addition: " + std::to_string(degree_) +
                                        " vs " + std::to_string(o.degree_));
        }
        for (const auto& [m, c] : o.terms_) {
            auto [it, inserted] = terms_.try_emplace(m, negate ? -c : c);
            if (!inserted) {
                if (negate) {
                    it->second -= c;
                } else {
                    it->second += c;
                }
            }
        }
        prune();
        return *this;
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero()) {
                it = terms_.erase(it);
            } else {
                ++it;
            }
        }
    }

    int degree_ = 0;
    TermMap<K> terms_;
};

using HomogeneousPoly = BasicPoly<Eisenstein>;

template <ExactField K>
std::optional<BasicPoly<K>> BasicPoly<K>::divide_exact(const BasicPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (divisor.degree_ > degree_ && !is_zero()) return std::nullopt;
    const int qdeg = is_zero() ? 0 : degree_ - divisor.degree_;
    BasicPoly quotient(qdeg < 0 ? 0 : qdeg);
    BasicPoly rem = *this;
    const auto& [lead_m, lead_c] = *divisor.terms_.begin();
    // GrlexFirst restricted to one degree is lex, so leading terms multiply.
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.begin();
        Monomial qm;
        for (int i = 0; i < 3; ++i) {
            qm.e[i] = rm.e[i] - lead_m.e[i];
            if (qm.e[i] < 0) return std::nullopt;
        }
        TermMap<K> single;
        single.emplace(qm, rc / lead_c);
        const BasicPoly step = from_terms(qdeg, single);
        quotient += step;
        rem -= step * divisor;
    }
    return quotient;
}

template <ExactField K>
std::string BasicPoly<K>::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string cs = c.str();
        const bool simple = cs.find_first_of("+*()", 1) == std::string::npos && cs.find('w') == std::string::npos;
        const bool negative = simple && cs[0] == '-';
        if (negative) cs.erase(0, 1);
        if (!first) {
            os << (negative ? " - " : " + ");
        } else if (negative) {
            os << "-";
        }
        first = false;
        const std::string ms = m.str();
        if (!simple) cs = "(" + cs + ")";
        if (ms.empty()) {
            os << cs;
        } else if (cs == "1") {
            os << ms;
        } else {
            os << cs << "*" << ms;
        }
    }
    return os.str();
}

/// Determinant of the matrix of second partials; degree 3(d - 2).
/// Throws std::invalid_argument for degree below 2.
template <ExactField K>
BasicPoly<K> hessian_det(const BasicPoly<K>& f) {
    if (f.degree() < 2) throw std::invalid_argument("Hessian needs degree >= 2");
    std::array<std::array<BasicPoly<K>, 3>, 3> h;
    for (int i = 0; i < 3; ++i) {
        const auto fi = f.partial(kVars[i]);
        for (int j = 0; j < 3; ++j) h[i][j] = fi.partial(kVars[j]);
    }
    return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
           h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

template <ExactField K>
using Matrix3 = std::array<std::array<K, 3>, 3>;

template <ExactField K>
K det3(const Matrix3<K>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// f(M v) for v = (x, y, z): x is replaced by M[0][0] x + M[0][1] y + M[0][2] z,
/// and so on. Throws std::invalid_argument if M is singular.
template <ExactField K>
BasicPoly<K> linear_substitute(const BasicPoly<K>& f, const Matrix3<K>& m) {
    if (det3(m).is_zero()) throw std::invalid_argument("singular coordinate change");
    std::array<std::vector<BasicPoly<K>>, 3> powers;
    for (int i = 0; i < 3; ++i) {
        const auto lin = BasicPoly<K>::linear(m[i][0], m[i][1], m[i][2]);
        powers[i].push_back(BasicPoly<K>::constant(K(1)));
        for (int k = 1; k <= f.degree(); ++k) powers[i].push_back(powers[i].back() * lin);
    }
    BasicPoly<K> result(f.degree());
    for (const auto& [mono, c] : f.terms()) {
        result += (powers[0][mono.e[0]] * powers[1][mono.e[1]] * powers[2][mono.e[2]]).scaled(c);
    }
    return result;
}

/// Point of P^2 over K. Equality is up to a nonzero scalar; the canonical
/// representative has its rightmost nonzero coordinate equal to 1.
template <ExactField K>
class ProjectivePoint {
public:
    ProjectivePoint() : coords_{K(0), K(0), K(1)} {}
    ProjectivePoint(K x, K y, K z) : coords_{std::move(x), std::move(y), std::move(z)} {
        if (coords_[0].is_zero() && coords_[1].is_zero() && coords_[2].is_zero()) {
            throw std::invalid_argument("projective point with all coordinates zero");
        }
    }
    explicit ProjectivePoint(std::array<K, 3> c) : ProjectivePoint(c[0], c[1], c[2]) {}

    const std::array<K, 3>& coords() const { return coords_; }
    const K& operator[](int i) const { return coords_[i]; }

    ProjectivePoint canonical() const {
        for (int i = 2; i >= 0; --i) {
            if (!coords_[i].is_zero()) {
                const K s = coords_[i];
                return ProjectivePoint(coords_[0] / s, coords_[1] / s, coords_[2] / s);
            }
        }
        return *this;
    }

    ProjectivePoint scaled(const K& s) const {
        return ProjectivePoint(coords_[0] * s, coords_[1] * s, coords_[2] * s);
    }

    friend bool operator==(const ProjectivePoint& p, const ProjectivePoint& q) {
        for (int i = 0; i < 3; ++i) {
            for (int j = i + 1; j < 3; ++j) {
                if (!(p.coords_[i] * q.coords_[j] - p.coords_[j] * q.coords_[i]).is_zero()) return false;
            }
        }
        return true;
    }

    template <ExactField V>
    ProjectivePoint<V> promote() const {
        return ProjectivePoint<V>(V(coords_[0]), V(coords_[1]), V(coords_[2]));
    }

    /// "(a:b:c)" of the canonical representative.
    std::string str() const {
        const auto c = canonical();
        return "(" + c.coords_[0].str() + ":" + c.coords_[1].str() + ":" + c.coords_[2].str() + ")";
    }

private:
    std::array<K, 3> coords_;
};

template <ExactField K>
K evaluate(const BasicPoly<K>& f, const ProjectivePoint<K>& p) {
    return f.template evaluate<K>(p.coords());
}

}  // namespace curvefree
