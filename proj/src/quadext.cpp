#include "curvefree/quadext.hpp"

#include <ostream>
#include <stdexcept>

namespace curvefree {

QuadExt QuadExt::sqrt_of(const Eisenstein& radicand) {
    Eisenstein r;
    if (radicand.sqrt_exact(r)) {
        throw std::invalid_argument("radicand " + radicand.str() + " is a square in Q(w)");
    }
    return QuadExt(Eisenstein(), Eisenstein(1), std::make_shared<const Eisenstein>(radicand));
}

QuadExt QuadExt::root(const Eisenstein& radicand) {
    Eisenstein r;
    if (radicand.sqrt_exact(r)) return QuadExt(r);
    return sqrt_of(radicand);
}

void QuadExt::adopt_radicand(const QuadExt& o) {
    if (o.radicand_ == nullptr || o.b_.is_zero()) return;
    if (radicand_ == nullptr || b_.is_zero()) {
        radicand_ = o.radicand_;
        return;
    }
    if (radicand_ != o.radicand_ && *radicand_ != *o.radicand_) {
        throw std::logic_error("mixing incompatible quadratic extensions sqrt(" + radicand_->str() +
                               ") and sqrt(" + o.radicand_->str() + ")");
    }
}

void QuadExt::normalize() {
    if (b_.is_zero()) radicand_.reset();
}

QuadExt QuadExt::operator-() const { return QuadExt(-a_, -b_, radicand_); }

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    adopt_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
    adopt_radicand(o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    adopt_radicand(o);
    if (o.b_.is_zero()) {
        a_ *= o.a_;
        b_ *= o.a_;
    } else if (b_.is_zero()) {
        b_ = a_ * o.b_;
        a_ *= o.a_;
    } else {
        Eisenstein a = a_ * o.a_ + b_ * o.b_ * *radicand_;
        Eisenstein b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
    }
    normalize();
    return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero in quadratic extension");
    }
    if (o.b_.is_zero()) {
        a_ /= o.a_;
        b_ /= o.a_;
        normalize();
        return *this;
    }
    // x / y = x * conj(y) / (a^2 - b^2 D)
    const Eisenstein n = o.a_ * o.a_ - o.b_ * o.b_ * *o.radicand_;
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    normalize();
    return *this;
}

bool operator==(const QuadExt& x, const QuadExt& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    if (x.b_.is_zero()) return true;
    return x.radicand_ == y.radicand_ || *x.radicand_ == *y.radicand_;
}

QuadExt QuadExt::conjugate() const { return QuadExt(a_, -b_, radicand_); }

QuadExt QuadExt::inverse() const { return QuadExt(1) / *this; }

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    return "(" + a_.str() + ")+(" + b_.str() + ")*sqrt(" + radicand_->str() + ")";
}

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.str(); }

}  // namespace curvefree
