#include "curvefree/syzygy.hpp"

#include <algorithm>

namespace curvefree {

std::array<HomogeneousPoly, 3> jacobian_generators(const HomogeneousPoly& f) {
    return {f.partial(Var::x), f.partial(Var::y), f.partial(Var::z)};
}

ExactMatrix jacobian_map_matrix(const std::array<HomogeneousPoly, 3>& jacobian, int k) {
    const int target = k + jacobian[0].degree();
    const auto sources = monomial_basis(k);
    const std::size_t rows = monomial_basis(target).size();
    ExactMatrix m(rows, 3 * sources.size());
    for (std::size_t g = 0; g < 3; ++g) {
        for (std::size_t s = 0; s < sources.size(); ++s) {
            const std::size_t col = g * sources.size() + s;
            for (const auto& [mono, c] : jacobian[g].terms()) {
                m.at(monomial_index(mono * sources[s]), col) = c;
            }
        }
    }
    return m;
}

std::size_t syzygy_dim(const HomogeneousPoly& f, int k) {
    if (k < 0) return 0;
    const auto m = jacobian_map_matrix(jacobian_generators(f), k);
    return m.cols() - m.rank();
}

std::optional<std::array<HomogeneousPoly, 3>> witness_syzygy(const HomogeneousPoly& f, int k) {
    const auto m = jacobian_map_matrix(jacobian_generators(f), k);
    const auto kernel = m.nullspace();
    if (kernel.empty()) return std::nullopt;
    const auto basis = monomial_basis(k);
    std::array<HomogeneousPoly, 3> out;
    for (std::size_t g = 0; g < 3; ++g) {
        TermMap<Eisenstein> terms;
        for (std::size_t s = 0; s < basis.size(); ++s) terms.emplace(basis[s], kernel.front()[g * basis.size() + s]);
        out[g] = HomogeneousPoly::from_terms(k, terms);
    }
    return out;
}

int mdr(const HomogeneousPoly& f) {
    if (f.degree() < 2) throw std::invalid_argument("mdr needs degree >= 2");
    for (int k = 0; k < f.degree(); ++k) {
        if (syzygy_dim(f, k) > 0) return k;
    }
    // Unreachable for nonconstant f: the Koszul syzygies live in degree d - 1
    // unless the partials are proportional, in which case AR(f)_0 != 0.
    throw std::logic_error("no syzygy found up to degree d-1");
}

std::size_t jacobian_algebra_hilbert(const HomogeneousPoly& f, int t) {
    if (t < 0) return 0;
    const std::size_t dim_st = monomial_basis(t).size();
    const int source = t - f.degree() + 1;
    if (source < 0) return dim_st;
    const auto m = jacobian_map_matrix(jacobian_generators(f), source);
    return dim_st - m.rank();
}

TjurinaProbe total_tjurina_probe(const HomogeneousPoly& f) {
    const int d = f.degree();
    TjurinaProbe probe;
    // for conics 3d-6 = 0 lies below the degree of the generators
    const int start = std::max(3 * d - 6, d - 1);
    for (int i = 0; i < 3; ++i) {
        probe.degrees[i] = start + i;
        probe.values[i] = jacobian_algebra_hilbert(f, probe.degrees[i]);
    }
    auto agree = [&] { return probe.values[0] == probe.values[1] && probe.values[1] == probe.values[2]; };
    if (!agree()) {
        // smooth curves keep a one-dimensional socle at 3d-6, so slide the window once
        probe.degrees = {start + 1, start + 2, start + 3};
        probe.values = {probe.values[1], probe.values[2], jacobian_algebra_hilbert(f, start + 3)};
    }
    if (!agree()) {
        throw StabilizationError("Hilbert function of S/J_f did not stabilize: " + std::to_string(probe.values[0]) +
                                 ", " + std::to_string(probe.values[1]) + ", " + std::to_string(probe.values[2]) +
                                 " at t = " + std::to_string(probe.degrees[0]) + ".." +
                                 std::to_string(probe.degrees[2]) + " (non-reduced input?)");
    }
    probe.tau = probe.values[0];
    return probe;
}

std::size_t total_tjurina(const HomogeneousPoly& f) { return total_tjurina_probe(f).tau; }

std::string to_string(FreenessStatus s) {
    switch (s) {
        case FreenessStatus::free:
            return "free";
        case FreenessStatus::nearly_free:
            return "nearly_free";
        case FreenessStatus::neither:
            return "neither";
    }
    return "neither";
}

long free_tau(int degree, int r) {
    const long d1 = degree - 1;
    return d1 * d1 - static_cast<long>(r) * (d1 - r);
}

FreenessStatus freeness_status(int degree, int r, std::size_t tau) {
    const long t = static_cast<long>(tau);
    if (2 * r <= degree - 1 && t == free_tau(degree, r)) return FreenessStatus::free;
    if (t == free_tau(degree, r) - 1) return FreenessStatus::nearly_free;
    return FreenessStatus::neither;
}

FreenessCertificate certify(const HomogeneousPoly& f) {
    FreenessCertificate cert;
    cert.degree = f.degree();
    cert.r = mdr(f);
    const auto probe = total_tjurina_probe(f);
    cert.tau = probe.tau;
    cert.probe_degrees = probe.degrees;
    cert.status = freeness_status(cert.degree, cert.r, cert.tau);
    if (cert.status == FreenessStatus::free) cert.exponents = std::make_pair(cert.r, cert.degree - 1 - cert.r);
    cert.witness = witness_syzygy(f, cert.r);
    return cert;
}

}  // namespace curvefree
