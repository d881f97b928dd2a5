#pragma once

#include <memory>
#include <string>

#include "curvefree/eisenstein.hpp"

namespace curvefree {

/// Element a + b*sqrt(D) of Q(w)(sqrt(D)) for a radicand D in Q(w) that has
/// no square root in Q(w).
///
/// The radicand is carried by the value. Elements with b = 0 are plain
/// elements of Q(w) and combine with any extension; combining two elements
/// that carry different radicands throws std::logic_error. Zero-testing is
/// exact because D is checked to be a non-square when an extension is made.
class QuadExt {
public:
    QuadExt() = default;
    QuadExt(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
    QuadExt(int value) : a_(value) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Rational value) : a_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    QuadExt(Eisenstein value) : a_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

    /// sqrt(radicand). Throws std::invalid_argument if radicand is a square in Q(w).
    static QuadExt sqrt_of(const Eisenstein& radicand);
    /// sqrt(radicand) as an element: a plain Q(w) value if radicand is a square there.
    static QuadExt root(const Eisenstein& radicand);

    const Eisenstein& a() const { return a_; }
    const Eisenstein& b() const { return b_; }
    /// Radicand, or nullptr when this value lies in Q(w).
    const std::shared_ptr<const Eisenstein>& radicand() const { return radicand_; }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool in_base_field() const { return b_.is_zero(); }

    QuadExt operator-() const;
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o);
    QuadExt& operator*=(const QuadExt& o);
    QuadExt& operator/=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
    friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
    friend bool operator==(const QuadExt& x, const QuadExt& y);

    /// a - b*sqrt(D)
    QuadExt conjugate() const;
    QuadExt inverse() const;

    /// "a" or "(a)+(b)*sqrt(D)".
    std::string str() const;

private:
    QuadExt(Eisenstein a, Eisenstein b, std::shared_ptr<const Eisenstein> d)
        : a_(std::move(a)), b_(std::move(b)), radicand_(std::move(d)) {}

    void adopt_radicand(const QuadExt& o);
    void normalize();

    Eisenstein a_;
    Eisenstein b_;
    std::shared_ptr<const Eisenstein> radicand_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

}  // namespace curvefree
