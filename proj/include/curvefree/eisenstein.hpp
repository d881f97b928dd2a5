#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "curvefree/rational.hpp"

namespace curvefree {

/// Element re + wc*w of Q(w), where w is a primitive cube root of unity
/// (w^2 + w + 1 = 0). Products are reduced with w^2 = -1 - w, so the pair
/// (re, wc) is the unique representation of the value.
class Eisenstein {
public:
    Eisenstein() = default;
    Eisenstein(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(int value) : re_(value) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
    Eisenstein(Rational re, Rational wc) : re_(std::move(re)), wc_(std::move(wc)) {}

    static Eisenstein omega() { return {Rational(0), Rational(1)}; }

    /// Parses a constant expression such as "3*w^2 - 1/2".
    static Eisenstein parse(std::string_view text);

    const Rational& re() const { return re_; }
    const Rational& wc() const { return wc_; }

    bool is_zero() const { return re_.is_zero() && wc_.is_zero(); }
    bool is_rational() const { return wc_.is_zero(); }

    Eisenstein operator-() const { return {-re_, -wc_}; }
    Eisenstein& operator+=(const Eisenstein& o) {
        re_ += o.re_;
        wc_ += o.wc_;
        return *this;
    }
    Eisenstein& operator-=(const Eisenstein& o) {
        re_ -= o.re_;
        wc_ -= o.wc_;
        return *this;
    }
    Eisenstein& operator*=(const Eisenstein& o);
    /// Throws std::domain_error when o is zero.
    Eisenstein& operator/=(const Eisenstein& o);

    friend Eisenstein operator+(Eisenstein a, const Eisenstein& b) { return a += b; }
    friend Eisenstein operator-(Eisenstein a, const Eisenstein& b) { return a -= b; }
    friend Eisenstein operator*(Eisenstein a, const Eisenstein& b) { return a *= b; }
    friend Eisenstein operator/(Eisenstein a, const Eisenstein& b) { return a /= b; }
    friend bool operator==(const Eisenstein& a, const Eisenstein& b) = default;

    /// Galois conjugate, w -> w^2.
    Eisenstein conjugate() const { return {re_ - wc_, -wc_}; }
    /// a * conj(a) = re^2 - re*wc + wc^2; zero iff a is zero.
    Rational norm() const { return re_ * re_ - re_ * wc_ + wc_ * wc_; }
    Rational trace() const { return re_ + re_ - wc_; }
    Eisenstein inverse() const;
    Eisenstein pow(unsigned exponent) const;

    /// Square root inside Q(w), if one exists.
    bool sqrt_exact(Eisenstein& root) const;

    /// Canonical text: "a", "b*w", "a+b*w" (unit coefficients written as "w").
    std::string str() const;

    std::size_t hash() const { return re_.hash() * 31 + wc_.hash(); }

private:
    Rational re_;
    Rational wc_;
};

std::ostream& operator<<(std::ostream& os, const Eisenstein& e);

}  // namespace curvefree

template <>
struct std::hash<curvefree::Eisenstein> {
    std::size_t operator()(const curvefree::Eisenstein& e) const noexcept { return e.hash(); }
};
