#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "omalous/exactmath/polynomial.hpp"
#include "omalous/exactmath/rational.hpp"
#include "omalous/surface/surface.hpp"

namespace omalous::liqin {

using exact::QPolynomial;
using exact::Rational;
using surface::SurfaceData;

/// Which of c1 = +K or c1 = -K a bundle (or a bound) is taken with.
enum class Sign { PlusK, MinusK };

enum class C1Description { PlusK, MinusK, Custom };

std::string to_string(Sign s);
Sign sign_from_string(const std::string& s);
std::string to_string(C1Description d);
C1Description c1_description_from_string(const std::string& s);

struct BundleNumerics {
    std::int64_t rank = 2;
    std::int64_t c1_dot_L = 0;
    std::int64_t c1_squared = 0;
    std::int64_t c2 = 0;
    C1Description c1_description = C1Description::Custom;

    friend bool operator==(const BundleNumerics&, const BundleNumerics&) = default;
};

/// Rank-2 numerics of the tangent bundle: c1 = -K, c2 = e(X).
BundleNumerics tangent_numerics(const SurfaceData& s);

/// c1.L / r.
Rational slope(std::int64_t c1_dot_L, std::int64_t rank);

struct OmalityReport {
    bool omalous = false;
    bool c1_dot_L_matches = false;   // against -K.L (or +K.L when dualized)
    bool c1_squared_matches = false;
    bool c2_matches = false;
    bool matched_dual = false;       // true when only the +K convention matched
    std::int64_t expected_c1_dot_L = 0;
    std::int64_t expected_c1_squared = 0;
    std::int64_t expected_c2 = 0;

    friend bool operator==(const OmalityReport&, const OmalityReport&) = default;
};

/// Numeric omality: c1.L = -K.L, c1^2 = K^2, c2 = c2(X). With `allow_dual`
/// the dual convention c1.L = +K.L is also accepted (a bundle is stable
/// iff its dual is, and dualizing keeps c2).
OmalityReport check_omality(const BundleNumerics& e, const SurfaceData& s, bool allow_dual = false);

/// Term breakdown of the stability bound
///   alpha = (r-1) [1 + max(p_g, h0(rL - c1 + K)) + 4 (r-1)^2 L^2] + (r-1) c1.L - r(r-1)/2 L^2.
/// `c1L_term` and `L2_term` are the signed contributions of the last two summands.
struct AlphaTerms {
    std::int64_t pg_term = 0;
    std::int64_t h0_term = 0;
    std::int64_t max_used = 0;
    std::int64_t excess_term = 0;
    std::int64_t c1L_term = 0;
    std::int64_t L2_term = 0;

    /// Re-sums the breakdown for rank r.
    std::int64_t reconstruct(std::int64_t rank) const;

    friend bool operator==(const AlphaTerms&, const AlphaTerms&) = default;
};

struct AlphaResult {
    std::int64_t rank = 0;
    Sign sign = Sign::PlusK;
    std::int64_t alpha = 0;
    AlphaTerms terms;

    friend bool operator==(const AlphaResult&, const AlphaResult&) = default;
};

/// Throws DomainError("MissingH0Evaluator") when the surface cannot supply
/// h0(rL - c1 + K), and ("InvalidRank") for r < 2.
AlphaResult alpha(const SurfaceData& s, std::int64_t rank, Sign sign);

struct SignedMargin {
    AlphaResult bound;
    std::int64_t margin = 0;   // c2 - alpha
    bool passes = false;

    friend bool operator==(const SignedMargin&, const SignedMargin&) = default;
};

struct GoodnessReport {
    std::int64_t rank = 0;
    std::int64_t c2_target = 0;
    SignedMargin plus;
    SignedMargin minus;
    Sign sign_used = Sign::PlusK;   // the sign with the larger margin
    std::int64_t alpha = 0;
    std::int64_t margin = 0;
    bool verdict = false;           // c2 >= alpha for at least one sign

    const AlphaTerms& terms() const { return sign_used == Sign::PlusK ? plus.bound.terms : minus.bound.terms; }

    friend bool operator==(const GoodnessReport&, const GoodnessReport&) = default;
};

GoodnessReport is_good(const SurfaceData& s, std::int64_t rank);

/// alpha(d, r, +K) on the regime where max(p_g, h0) = p_g and every binomial
/// is polynomial in d, as an exact polynomial in the single variable "d".
QPolynomial alpha_polynomial(std::int64_t rank);
/// c2(d) - alpha_polynomial(r).
QPolynomial margin_polynomial(std::int64_t rank);
/// Least d from which alpha_polynomial agrees with the exact evaluation for all larger d.
std::int64_t stable_regime_start(std::int64_t rank);
/// 1 + ceil(max |a_i / a_n|): every real root of p is strictly below it in modulus.
std::int64_t cauchy_bound(const QPolynomial& p);

struct D0Report {
    std::int64_t rank = 0;
    std::int64_t scan_begin = 0;
    std::int64_t scan_end = 0;
    std::int64_t regime_start = 0;
    Rational leading_coefficient;
    QPolynomial margin_polynomial;
    std::int64_t cauchy_bound = 0;
    std::optional<std::int64_t> d0;
    std::vector<std::int64_t> failures;   // failing degrees in [scan_begin, d0)

    friend bool operator==(const D0Report&, const D0Report&) = default;
};

inline constexpr std::int64_t kDefaultScanCap = 1'000'000;

/// Least degree d0 >= d_min such that every smooth degree-d surface in P^3
/// with d >= d0 is good of type (r, H). Certified by an exact scan up to
/// max(d_min, Cauchy bound, regime start) plus positivity of the leading
/// coefficient beyond. Throws DomainError("NoGoodD0") when the leading
/// coefficient is not positive and ("ScanCapExceeded") when the scan would
/// pass `scan_cap`.
D0Report find_d0(std::int64_t rank, std::int64_t d_min = 5, std::int64_t scan_cap = kDefaultScanCap);

/// Total length of the 0-cycles forced by Whitney's formula for
///   0 -> O(c1 + (1-r)L) -> E -> (+) O(L) (x) I_{Z_i} -> 0
/// to reach c2(E) = c2(X): n = c2 - (r-1) c1.L + r(r-1)/2 L^2.
/// Throws DomainError("NegativeCycleLength").
std::int64_t required_cycle_length(const SurfaceData& s, std::int64_t rank, Sign sign);

/// c1.L of the bundle for the given sign.
std::int64_t c1_dot_L(const SurfaceData& s, Sign sign);
/// Divisor class rL - c1 + K as aL + bK.
surface::DivisorClass cb_system_class(std::int64_t rank, Sign sign);

nlohmann::json to_json(const OmalityReport& r);
OmalityReport omality_from_json(const nlohmann::json& j);
nlohmann::json to_json(const AlphaResult& r);
AlphaResult alpha_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GoodnessReport& r);
GoodnessReport goodness_from_json(const nlohmann::json& j);
nlohmann::json to_json(const D0Report& r);
D0Report d0_from_json(const nlohmann::json& j);

}  // namespace omalous::liqin
