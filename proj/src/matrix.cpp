#include "curvefree/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <stdexcept>

namespace curvefree {

namespace {

// Element a + b w of Z[w].
struct EisInt {
    mpz_class a;
    mpz_class b;

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
};

// out = x*y - u*v, then exact division by d (d | result guaranteed).
// Scratch values are passed in to avoid reallocations in the inner loop.
struct BareissScratch {
    mpz_class t1, t2, t3, n, ra, rb;
};

inline void mul_into(mpz_class& ra, mpz_class& rb, const EisInt& x, const EisInt& y, mpz_class& tmp) {
    // (a + bw)(c + dw) = (ac - bd) + (ad + bc - bd) w
    mpz_mul(tmp.get_mpz_t(), x.b.get_mpz_t(), y.b.get_mpz_t());
    mpz_mul(ra.get_mpz_t(), x.a.get_mpz_t(), y.a.get_mpz_t());
    mpz_sub(ra.get_mpz_t(), ra.get_mpz_t(), tmp.get_mpz_t());
    mpz_mul(rb.get_mpz_t(), x.a.get_mpz_t(), y.b.get_mpz_t());
    mpz_addmul(rb.get_mpz_t(), x.b.get_mpz_t(), y.a.get_mpz_t());
    mpz_sub(rb.get_mpz_t(), rb.get_mpz_t(), tmp.get_mpz_t());
}

class EisIntDivisor {
public:
    explicit EisIntDivisor(const EisInt& d) : d_(d) {
        conj_a_ = d.a - d.b;
        conj_b_ = -d.b;
        norm_ = d.a * d.a - d.a * d.b + d.b * d.b;
        unit_ = (norm_ == 1);
    }

    // value /= d, exact.
    void divide(EisInt& value, BareissScratch& s) const {
        if (d_.b == 0 && d_.a == 1) return;
        if (d_.b == 0) {
            mpz_divexact(value.a.get_mpz_t(), value.a.get_mpz_t(), d_.a.get_mpz_t());
            mpz_divexact(value.b.get_mpz_t(), value.b.get_mpz_t(), d_.a.get_mpz_t());
            return;
        }
        // value * conj(d) / N(d)
        const EisInt conj{conj_a_, conj_b_};
        mul_into(s.ra, s.rb, value, conj, s.t3);
        if (unit_) {
            mpz_swap(value.a.get_mpz_t(), s.ra.get_mpz_t());
            mpz_swap(value.b.get_mpz_t(), s.rb.get_mpz_t());
            return;
        }
        mpz_divexact(value.a.get_mpz_t(), s.ra.get_mpz_t(), norm_.get_mpz_t());
        mpz_divexact(value.b.get_mpz_t(), s.rb.get_mpz_t(), norm_.get_mpz_t());
    }

private:
    EisInt d_;
    mpz_class conj_a_, conj_b_, norm_;
    bool unit_ = false;
};

thread_local EliminationStats g_stats;

bool elimination_verbose() {
    static const bool verbose = std::getenv("CURVEFREE_ELIM_VERBOSE") != nullptr;
    return verbose;
}

}  // namespace

const EliminationStats& last_elimination_stats() { return g_stats; }

std::size_t ExactMatrix::nonzero_count() const {
    return static_cast<std::size_t>(std::count_if(data_.begin(), data_.end(), [](const Eisenstein& e) { return !e.is_zero(); }));
}

std::vector<Eisenstein> ExactMatrix::apply(const std::vector<Eisenstein>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    std::vector<Eisenstein> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Eisenstein acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& m = at(r, c);
            if (!m.is_zero() && !v[c].is_zero()) acc += m * v[c];
        }
        out[r] = acc;
    }
    return out;
}

std::size_t ExactMatrix::rank() const {
    // Clear denominators column by column; column scaling preserves rank.
    std::vector<EisInt> m(rows_ * cols_);
    for (std::size_t c = 0; c < cols_; ++c) {
        mpz_class l = 1;
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto& e = at(r, c);
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.re().raw().get_den_mpz_t());
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.wc().raw().get_den_mpz_t());
        }
        for (std::size_t r = 0; r < rows_; ++r) {
            const auto& e = at(r, c);
            auto& out = m[r * cols_ + c];
            out.a = e.re().numerator() * (l / e.re().denominator());
            out.b = e.wc().numerator() * (l / e.wc().denominator());
        }
    }

    BareissScratch s;
    EisInt prev{1, 0};
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t pivot = rows_;
        for (std::size_t r = rank; r < rows_; ++r) {
            if (!m[r * cols_ + c].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows_) continue;
        if (pivot != rank) {
            for (std::size_t j = c; j < cols_; ++j) std::swap(m[pivot * cols_ + j], m[rank * cols_ + j]);
        }
        const EisIntDivisor divisor(prev);
        const EisInt p = m[rank * cols_ + c];
        for (std::size_t i = rank + 1; i < rows_; ++i) {
            EisInt& lead = m[i * cols_ + c];
            const bool lead_zero = lead.is_zero();
            for (std::size_t j = c + 1; j < cols_; ++j) {
                EisInt& target = m[i * cols_ + j];
                const EisInt& above = m[rank * cols_ + j];
                const bool target_zero = target.is_zero();
                if (target_zero && (lead_zero || above.is_zero())) continue;
                // target = (p * target - lead * above) / prev
                mul_into(s.t1, s.t2, p, target, s.t3);
                if (!lead_zero && !above.is_zero()) {
                    mul_into(s.ra, s.rb, lead, above, s.t3);
                    mpz_sub(s.t1.get_mpz_t(), s.t1.get_mpz_t(), s.ra.get_mpz_t());
                    mpz_sub(s.t2.get_mpz_t(), s.t2.get_mpz_t(), s.rb.get_mpz_t());
                }
                mpz_swap(target.a.get_mpz_t(), s.t1.get_mpz_t());
                mpz_swap(target.b.get_mpz_t(), s.t2.get_mpz_t());
                divisor.divide(target, s);
            }
            lead.a = 0;
            lead.b = 0;
        }
        prev = p;
        ++rank;
    }

    g_stats = EliminationStats{rows_, cols_, rank, 0};
    if (elimination_verbose()) {
        std::size_t bits = 0;
        for (const auto& e : m) {
            bits = std::max({bits, mpz_sizeinbase(e.a.get_mpz_t(), 2), mpz_sizeinbase(e.b.get_mpz_t(), 2)});
        }
        g_stats.max_entry_bits = bits;
        std::cerr << "[elim] " << rows_ << "x" << cols_ << " rank " << rank << " max-bits " << bits << "\n";
    }
    return rank;
}

std::vector<std::vector<Eisenstein>> ExactMatrix::nullspace() const {
    std::vector<Eisenstein> m = data_;
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols_ && row < rows_; ++c) {
        std::size_t pivot = rows_;
        for (std::size_t r = row; r < rows_; ++r) {
            if (!m[r * cols_ + c].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows_) continue;
        if (pivot != row) {
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m[pivot * cols_ + j], m[row * cols_ + j]);
        }
        const Eisenstein inv = m[row * cols_ + c].inverse();
        for (std::size_t j = c; j < cols_; ++j) m[row * cols_ + j] *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row) continue;
            const Eisenstein factor = m[r * cols_ + c];
            if (factor.is_zero()) continue;
            for (std::size_t j = c; j < cols_; ++j) {
                if (!m[row * cols_ + j].is_zero()) m[r * cols_ + j] -= factor * m[row * cols_ + j];
            }
        }
        pivot_cols.push_back(c);
        ++row;
    }

    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Eisenstein>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Eisenstein> v(cols_);
        v[free] = Eisenstein(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = -m[i * cols_ + free];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace curvefree
