#include "curvefree/eisenstein.hpp"

#include <array>
#include <ostream>
#include <stdexcept>

namespace curvefree {

Eisenstein& Eisenstein::operator*=(const Eisenstein& o) {
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, w^2 = -1 - w
    const Rational bd = wc_ * o.wc_;
    Rational re = re_ * o.re_ - bd;
    Rational wc = re_ * o.wc_ + wc_ * o.re_ - bd;
    re_ = std::move(re);
    wc_ = std::move(wc);
    return *this;
}

Eisenstein& Eisenstein::operator/=(const Eisenstein& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero in Q(w)");
    }
    *this *= o.conjugate();
    const Rational n = o.norm();
    re_ /= n;
    wc_ /= n;
    return *this;
}

Eisenstein Eisenstein::inverse() const { return Eisenstein(1) / *this; }

Eisenstein Eisenstein::pow(unsigned exponent) const {
    Eisenstein result(1);
    Eisenstein base = *this;
    while (exponent != 0) {
        if ((exponent & 1U) != 0) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

bool Eisenstein::sqrt_exact(Eisenstein& root) const {
    if (is_zero()) {
        root = Eisenstein();
        return true;
    }
    // For s = x + yw with s^2 = a: N(s)^2 = N(a), Tr(s)^2 = Tr(a) + 2N(s),
    // and -3y^2 = Tr(a) - 2N(s).
    Rational ns;
    if (!norm().sqrt_exact(ns)) return false;
    const Rational tr = trace();
    Rational ts;
    if (!(tr + ns + ns).sqrt_exact(ts)) return false;
    Rational y2 = (ns + ns - tr) / Rational(3);
    Rational y;
    if (!y2.sqrt_exact(y)) return false;
    for (const Rational& t : std::array{ts, -ts}) {
        for (const Rational& yy : std::array{y, -y}) {
            // Tr(x + yw) = 2x - y
            Eisenstein cand((t + yy) / Rational(2), yy);
            if (cand * cand == *this) {
                root = cand;
                return true;
            }
        }
    }
    return false;
}

std::string Eisenstein::str() const {
    if (wc_.is_zero()) return re_.str();
    std::string w_part;
    if (wc_ == Rational(1)) {
        w_part = "w";
    } else if (wc_ == Rational(-1)) {
        w_part = "-w";
    } else {
        w_part = wc_.str() + "*w";
    }
    if (re_.is_zero()) return w_part;
    if (w_part[0] == '-') return re_.str() + w_part;
    return re_.str() + "+" + w_part;
}

std::ostream& operator<<(std::ostream& os, const Eisenstein& e) { return os << e.str(); }

}  // namespace curvefree
