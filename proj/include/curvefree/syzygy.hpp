#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curvefree/matrix.hpp"
#include "curvefree/poly.hpp"

namespace curvefree {

/// (f_x, f_y, f_z)
std::array<HomogeneousPoly, 3> jacobian_generators(const HomogeneousPoly& f);

/// Matrix of (a, b, c) -> a f_x + b f_y + c f_z from S_k^3 to S_{k+d-1}.
/// Columns: monomial_basis(k) for a, then for b, then for c.
/// Rows: monomial_basis(k + d - 1).
ExactMatrix jacobian_map_matrix(const std::array<HomogeneousPoly, 3>& jacobian, int k);

/// dim AR(f)_k.
std::size_t syzygy_dim(const HomogeneousPoly& f, int k);

/// One nonzero syzygy (a, b, c) of degree k, if any.
std::optional<std::array<HomogeneousPoly, 3>> witness_syzygy(const HomogeneousPoly& f, int k);

/// min{k : AR(f)_k != 0}, searched over k = 0..d-1.
int mdr(const HomogeneousPoly& f);

/// dim (S / J_f)_t.
std::size_t jacobian_algebra_hilbert(const HomogeneousPoly& f, int t);

/// Raised when the Hilbert function of S/J_f has not stabilized at the
/// probe degrees, which happens for non-reduced input.
class StabilizationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct TjurinaProbe {
    std::size_t tau = 0;
    std::array<int, 3> degrees{};
    std::array<std::size_t, 3> values{};
};

/// Global Tjurina number with the probe record: Hilbert function of S/J_f
/// at t = s, s+1, s+2 with s = max(3d-6, d-1), all three required to agree;
/// the window slides once to s+1 when only the first value differs.
TjurinaProbe total_tjurina_probe(const HomogeneousPoly& f);

std::size_t total_tjurina(const HomogeneousPoly& f);

enum class FreenessStatus { free, nearly_free, neither };

std::string to_string(FreenessStatus s);

/// Near-freeness here means tau = (d-1)^2 - r(d-r-1) - 1.
inline constexpr const char* kNearlyFreeConvention = "tau = (d-1)^2 - r(d-r-1) - 1";

struct FreenessCertificate {
    int degree = 0;
    int r = 0;
    std::size_t tau = 0;
    FreenessStatus status = FreenessStatus::neither;
    std::optional<std::pair<int, int>> exponents;
    std::array<int, 3> probe_degrees{};
    /// A nonzero syzygy of degree r.
    std::optional<std::array<HomogeneousPoly, 3>> witness;
};

/// (d-1)^2 - r(d-r-1)
long free_tau(int degree, int r);

/// Status from (d, r, tau) alone.
FreenessStatus freeness_status(int degree, int r, std::size_t tau);

/// Certifies f (assumed reduced, degree >= 2). Propagates StabilizationError.
FreenessCertificate certify(const HomogeneousPoly& f);

}  // namespace curvefree
