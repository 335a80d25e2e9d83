#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "omalous/exactmath/matrix.hpp"
#include "omalous/exactmath/monomial.hpp"
#include "omalous/exactmath/rational.hpp"
#include "omalous/liqin/liqin.hpp"
#include "omalous/surface/surface.hpp"

namespace omalous::cb {

using exact::ExactMatrix;
using exact::Rational;

/// Point of P^3 stored with its first nonzero coordinate scaled to 1, so
/// equality of representatives is equality of points.
class ProjectivePoint {
public:
    /// Throws DomainError("ZeroPoint") when every coordinate vanishes.
    explicit ProjectivePoint(std::array<Rational, 4> coords);

    const std::array<Rational, 4>& coords() const { return coords_; }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    std::string str() const;

    friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;

private:
    std::array<Rational, 4> coords_;
};

/// Reduced 0-cycle: a list of distinct points.
struct PointCycle {
    std::vector<ProjectivePoint> points;

    std::size_t length() const { return points.size(); }
    bool has_duplicates() const;

    friend bool operator==(const PointCycle&, const PointCycle&) = default;
};

/// The linear system |O_X(mH)| on a hypersurface with an explicit equation.
struct CBSystem {
    surface::HypersurfaceSpec hypersurface;
    std::int64_t degree = 0;

    /// System rL - c1 + K of the extension construction: m = r for c1 = +K,
    /// m = r + 2(d - 4) for c1 = -K.
    static CBSystem for_extension(const surface::HypersurfaceSpec& h, std::int64_t rank, liqin::Sign sign);
};

/// F(p) == 0. Throws DomainError("MissingDefiningPolynomial").
bool on_surface(const ProjectivePoint& p, const surface::HypersurfaceSpec& h);

/// The C(m+3,3) monomials of degree m in x0..x3, descending lex.
std::vector<exact::Monomial> degree_monomials(std::int64_t m);

/// Rows: degree-m monomials; columns: points of Z (canonical representatives).
ExactMatrix<Rational> evaluation_matrix(const PointCycle& z, std::int64_t m);

struct PointVerdict {
    ProjectivePoint point;
    std::size_t rank_without = 0;
    bool satisfied = false;   // rank unchanged when the point is removed

    friend bool operator==(const PointVerdict&, const PointVerdict&) = default;
};

struct CBReport {
    bool holds = false;
    std::int64_t degree = 0;
    std::size_t rank_full = 0;
    std::vector<PointVerdict> points;

    friend bool operator==(const CBReport&, const CBReport&) = default;
};

/// Cayley-Bacharach test for a reduced cycle on X: every degree-m section
/// vanishing on Z minus one point vanishes at that point too. Uses all
/// degree-m forms on P^3: restriction to X is onto and multiples of F vanish
/// at every point of X, so ranks over points of X are the same as for a
/// basis of H^0(O_X(m)).
/// Throws DomainError("PointOffSurface"), ("DuplicatePoints").
CBReport cb_check(const PointCycle& z, const CBSystem& sys);

struct ExtensionCertificate {
    std::int64_t rank = 0;
    liqin::Sign sign = liqin::Sign::PlusK;
    std::int64_t system_degree = 0;
    std::vector<CBReport> cycles;
    bool all_cb = false;
    std::int64_t total_length = 0;
    std::int64_t required_length = 0;
    bool length_matches = false;
    // Chern data of the would-be bundle E, from Whitney's formula with the actual lengths.
    std::int64_t target_c1_dot_L = 0;
    std::int64_t target_c1_squared = 0;
    std::int64_t target_c2 = 0;
    liqin::OmalityReport omality;
    bool complete = false;

    friend bool operator==(const ExtensionCertificate&, const ExtensionCertificate&) = default;
};

/// Checks r-1 cycles against the construction
///   0 -> O(c1 + (1-r)L) -> E -> (+) O(L) (x) I_{Z_i} -> 0
/// with every L_i = L. Throws DomainError("WrongCycleCount") and
/// propagates the cb_check errors.
ExtensionCertificate extension_certificate(const surface::SurfaceData& s, const surface::HypersurfaceSpec& h,
                                           const std::vector<PointCycle>& cycles, std::int64_t rank,
                                           liqin::Sign sign);

/// Heuristic sampler for experiments, not the stability-guaranteeing
/// choice: looks for a line of the form {x_a = e1 x_b, x_c = e2 x_d}
/// (e = +-1) or a coordinate line lying on X and draws `count` distinct
/// rational points on it; falls back to rejection-sampled points on such
/// lines. Deterministic for a given seed. Throws ("SamplerExhausted").
PointCycle sample_cycle(const surface::HypersurfaceSpec& h, std::size_t count, std::uint64_t seed);

nlohmann::json to_json(const ProjectivePoint& p);
ProjectivePoint point_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PointCycle& z);
PointCycle cycle_from_json(const nlohmann::json& j);
/// {"cycles": [<points array>, ...]}
std::vector<PointCycle> cycles_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CBReport& r);
CBReport cb_report_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ExtensionCertificate& c);
ExtensionCertificate certificate_from_json(const nlohmann::json& j);

}  // namespace omalous::cb
