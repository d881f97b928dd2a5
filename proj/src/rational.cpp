#include "curvefree/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace curvefree {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) {
        throw std::domain_error("rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    const auto slash = s.find('/');
    auto digits_ok = [&](std::size_t from, std::size_t to) {
        if (from >= to) return false;
        for (std::size_t i = from; i < to; ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    const std::size_t num_end = slash == std::string::npos ? s.size() : slash;
    if (!digits_ok(start, num_end) || (slash != std::string::npos && !digits_ok(slash + 1, s.size()))) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational literal '" + s + "'");
    }
    if (q.get_den() == 0) {
        throw std::domain_error("rational literal with zero denominator");
    }
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw std::domain_error("division by zero");
    }
    value_ /= o.value_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) {
        throw std::domain_error("inverse of zero");
    }
    return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    return Rational(num, den);
}

bool Rational::sqrt_exact(Rational& root) const {
    if (sign() < 0) return false;
    const mpz_class& num = value_.get_num();
    const mpz_class& den = value_.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) {
        return false;
    }
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    return true;
}

std::string Rational::str() const { return value_.get_str(10); }

std::size_t Rational::hash() const {
    const std::size_t h1 = std::hash<std::string>{}(value_.get_num().get_str(16));
    const std::size_t h2 = std::hash<std::string>{}(value_.get_den().get_str(16));
    return h1 ^ (h2 + 0x9e3779b97f4a7c15ULL + (h1 << 6) + (h1 >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace curvefree
