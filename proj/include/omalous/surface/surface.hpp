#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>

#include <json.hpp>

#include "omalous/exactmath/polynomial.hpp"

namespace omalous::surface {

/// Divisor class a*L + b*K on a polarized surface.
struct DivisorClass {
    std::int64_t l_mult = 0;
    std::int64_t k_mult = 0;
    friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

/// h0 for a smooth hypersurface of the given degree in P^3 (K = (d-4)H, L = H).
struct HypersurfaceH0 {
    std::int64_t degree = 0;
    friend bool operator==(const HypersurfaceH0&, const HypersurfaceH0&) = default;
};

/// User-supplied h0 values for a surface without a built-in formula.
struct H0Table {
    std::map<DivisorClass, std::int64_t> values;
    friend bool operator==(const H0Table&, const H0Table&) = default;
};

using H0Source = std::variant<std::monostate, HypersurfaceH0, H0Table>;

/// Numeric invariants of a polarized surface (X, L).
struct SurfaceData {
    std::int64_t L_squared = 0;
    std::int64_t K_dot_L = 0;
    std::int64_t K_squared = 0;   // c1^2
    std::int64_t c2_top = 0;      // topological Euler number
    std::int64_t p_g = 0;
    std::int64_t irregularity = 0;
    H0Source h0_source;

    /// h0(O_X(aL + bK)), or nullopt when the surface has no evaluator for it.
    std::optional<std::int64_t> h0(DivisorClass cls) const;
    std::optional<std::int64_t> hypersurface_degree() const;

    friend bool operator==(const SurfaceData&, const SurfaceData&) = default;
};

/// Degree plus an optional homogeneous defining form in x0..x3.
struct HypersurfaceSpec {
    std::int64_t degree = 0;
    std::optional<exact::QPolynomial> F;

    /// Checks degree >= 1 and, when F is present, that it is a nonzero form
    /// of that degree in four variables. Smoothness is not checked.
    void validate() const;
};

/// Invariants of a smooth degree-d surface in P^3 polarized by the hyperplane class.
SurfaceData hypersurface_invariants(std::int64_t d);

/// h0(X_d, O(mH)) = C(m+3,3) - C(m-d+3,3) for m >= 0, else 0.
std::int64_t h0_line_bundle(std::int64_t d, std::int64_t m);

struct NoetherReport {
    bool holds = false;
    std::int64_t twelve_chi = 0;     // 12 (1 + p_g - q)
    std::int64_t chern_sum = 0;      // K^2 + c2
    bool divisible_by_12 = false;
};

NoetherReport check_noether(const SurfaceData& s);

/// c1^2 <= 3 c2.
bool check_bmy(const SurfaceData& s);

nlohmann::json to_json(const SurfaceData& s);
SurfaceData surface_from_json(const nlohmann::json& j);
nlohmann::json to_json(const NoetherReport& r);

nlohmann::json to_json(const HypersurfaceSpec& h);
HypersurfaceSpec hypersurface_from_json(const nlohmann::json& j);

}  // namespace omalous::surface
