#include "curvefree/poly.hpp"

namespace curvefree {

std::string Monomial::str() const {
    std::string out;
    for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "xyz"[i];
        if (e[i] > 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

std::vector<Monomial> monomial_basis(int degree) {
    if (degree < 0) return {};
    std::vector<Monomial> basis;
    basis.reserve(static_cast<std::size_t>((degree + 1) * (degree + 2) / 2));
    for (int a = degree; a >= 0; --a) {
        for (int b = degree - a; b >= 0; --b) {
            basis.push_back(Monomial{{a, b, degree - a - b}});
        }
    }
    return basis;
}

std::size_t monomial_index(const Monomial& m) {
    // Monomials with a larger x-exponent come first: for x-exponent a there are
    // (d - a + 1) monomials, so the block for a starts after sum_{a' > a}.
    const int d = m.degree();
    const int a = m.e[0];
    const int k = d - a;  // blocks before this one have sizes 1, 2, ..., k
    const std::size_t block_start = static_cast<std::size_t>(k * (k + 1) / 2);
    return block_start + static_cast<std::size_t>(k - m.e[1]);
}

}  // namespace curvefree
