#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "curvefree/poly.hpp"

namespace curvefree {

/// Truncated power series sum c[i] t^i, known modulo t^precision().
template <ExactField K>
class Series {
public:
    Series() = default;
    explicit Series(std::size_t precision) : c_(precision, K(0)) {}
    Series(std::vector<K> coeffs) : c_(std::move(coeffs)) {}  // NOLINT(google-explicit-constructor)

    static Series constant(const K& value, std::size_t precision) {
        Series s(precision);
        if (precision > 0) s.c_[0] = value;
        return s;
    }

    /// t, to the given precision.
    static Series parameter(std::size_t precision) {
        Series s(precision);
        if (precision > 1) s.c_[1] = K(1);
        return s;
    }

    std::size_t precision() const { return c_.size(); }
    const K& operator[](std::size_t i) const { return c_[i]; }
    K& operator[](std::size_t i) { return c_[i]; }
    const std::vector<K>& coeffs() const { return c_; }

    Series truncated(std::size_t precision) const {
        Series s(precision);
        for (std::size_t i = 0; i < std::min(precision, c_.size()); ++i) s.c_[i] = c_[i];
        return s;
    }

    /// Index of the first nonzero coefficient, or nullopt if all known ones vanish.
    std::optional<std::size_t> order() const {
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i].is_zero()) return i;
        }
        return std::nullopt;
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series r(std::min(a.precision(), b.precision()));
        for (std::size_t i = 0; i < r.precision(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series r(std::min(a.precision(), b.precision()));
        for (std::size_t i = 0; i < r.precision(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }

    friend Series operator*(const Series& a, const Series& b) {
        const std::size_t n = std::min(a.precision(), b.precision());
        Series r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; i + j < n; ++j) {
                if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    Series scaled(const K& s) const {
        Series r(precision());
        for (std::size_t i = 0; i < precision(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    Series inverse() const {
        if (c_.empty() || c_[0].is_zero()) throw std::domain_error("series inverse needs a unit constant term");
        const std::size_t n = precision();
        Series r(n);
        const K inv0 = K(1) / c_[0];
        r.c_[0] = inv0;
        for (std::size_t k = 1; k < n; ++k) {
            K acc(0);
            for (std::size_t j = 1; j <= k; ++j) {
                if (!c_[j].is_zero()) acc += c_[j] * r.c_[k - j];
            }
            r.c_[k] = -(acc * inv0);
        }
        return r;
    }

    /// Divide by t^k; the first k coefficients must vanish. Precision drops by k.
    Series shifted_down(std::size_t k) const {
        if (k > precision()) throw std::invalid_argument("shift beyond precision");
        for (std::size_t i = 0; i < k; ++i) {
            if (!c_[i].is_zero()) throw std::logic_error("series not divisible by t^k");
        }
        return Series(std::vector<K>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
    }

    /// Multiply by t^k; precision grows by k.
    Series shifted_up(std::size_t k) const {
        std::vector<K> out(k, K(0));
        out.insert(out.end(), c_.begin(), c_.end());
        return Series(std::move(out));
    }

private:
    std::vector<K> c_;
};

/// Polynomial in two local coordinates (u, v), keys are (exp_u, exp_v).
template <ExactField K>
using LocalPoly = std::map<std::pair<int, int>, K>;

/// g(u(t), v(t)) truncated to the common precision.
template <ExactField K>
Series<K> compose(const LocalPoly<K>& g, const Series<K>& u, const Series<K>& v) {
    const std::size_t n = std::min(u.precision(), v.precision());
    int max_u = 0;
    int max_v = 0;
    for (const auto& [e, c] : g) {
        max_u = std::max(max_u, e.first);
        max_v = std::max(max_v, e.second);
    }
    std::vector<Series<K>> up{Series<K>::constant(K(1), n)};
    std::vector<Series<K>> vp{Series<K>::constant(K(1), n)};
    for (int i = 1; i <= max_u; ++i) up.push_back(up.back() * u);
    for (int i = 1; i <= max_v; ++i) vp.push_back(vp.back() * v);
    Series<K> total(n);
    for (const auto& [e, c] : g) {
        total = total + (up[e.first] * vp[e.second]).scaled(c);
    }
    return total;
}

template <ExactField K>
LocalPoly<K> local_partial(const LocalPoly<K>& g, int var) {
    LocalPoly<K> out;
    for (const auto& [e, c] : g) {
        const int power = var == 0 ? e.first : e.second;
        if (power == 0) continue;
        auto key = e;
        (var == 0 ? key.first : key.second) -= 1;
        out[key] += c * K(power);
    }
    return out;
}

}  // namespace curvefree
