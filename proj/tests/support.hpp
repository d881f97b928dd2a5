#pragma once

#include <random>
#include <vector>

#include "curvefree/matrix.hpp"
#include "curvefree/poly.hpp"

namespace curvefree::testing {

inline Rational random_rational(std::mt19937_64& rng, long span = 20, long max_den = 9) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, max_den);
    return Rational(mpz_class(num(rng)), mpz_class(den(rng)));
}

inline Eisenstein random_eisenstein(std::mt19937_64& rng, long span = 20, long max_den = 9) {
    return {random_rational(rng, span, max_den), random_rational(rng, span, max_den)};
}

inline Eisenstein random_nonzero(std::mt19937_64& rng) {
    for (;;) {
        auto e = random_eisenstein(rng);
        if (!e.is_zero()) return e;
    }
}

/// Dense random form of the given degree; each coefficient is zero with
/// probability about 1/3.
inline HomogeneousPoly random_poly(std::mt19937_64& rng, int degree, long span = 5) {
    TermMap<Eisenstein> terms;
    std::uniform_int_distribution<int> coin(0, 2);
    for (const auto& m : monomial_basis(degree)) {
        if (coin(rng) == 0) continue;
        terms[m] = random_eisenstein(rng, span, 3);
    }
    return HomogeneousPoly::from_terms(degree, terms);
}

/// Random invertible integer matrix with small entries.
inline Matrix3<Eisenstein> random_invertible(std::mt19937_64& rng, long span = 3) {
    std::uniform_int_distribution<long> entry(-span, span);
    for (;;) {
        Matrix3<Eisenstein> m;
        for (auto& row : m) {
            for (auto& e : row) e = Eisenstein(entry(rng));
        }
        if (!det3(m).is_zero()) return m;
    }
}

template <typename K>
Matrix3<K> inverse3(const Matrix3<K>& m) {
    const K det = det3(m);
    Matrix3<K> inv;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3;
            const int r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3;
            const int c1 = (i + 2) % 3;
            inv[i][j] = (m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0]) / det;
        }
    }
    return inv;
}

template <typename K>
std::array<K, 3> apply3(const Matrix3<K>& m, const std::array<K, 3>& v) {
    std::array<K, 3> out{K(0), K(0), K(0)};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) out[i] = out[i] + m[i][j] * v[j];
    }
    return out;
}

/// Rank over Q of the realification of an Eisenstein matrix: each entry
/// a + b w becomes the 2x2 block of multiplication by it on (1, w).
/// Plain rational Gauss elimination, independent of ExactMatrix::rank.
inline std::size_t realified_rank(const ExactMatrix& m) {
    const std::size_t rows = 2 * m.rows();
    const std::size_t cols = 2 * m.cols();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const auto& e = m.at(i, j);
            // (a + b w)(p + q w) = (ap - bq) + (aq + bp - bq) w
            a[2 * i][2 * j] = e.re();
            a[2 * i][2 * j + 1] = -e.wc();
            a[2 * i + 1][2 * j] = e.wc();
            a[2 * i + 1][2 * j + 1] = e.re() - e.wc();
        }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (a[r][c].is_zero()) continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace curvefree::testing
