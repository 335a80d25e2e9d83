#include "omalous/cb/cayley_bacharach.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "omalous/checked.hpp"
#include "omalous/error.hpp"
#include "omalous/exactmath/binomial.hpp"
#include "omalous/exactmath/serialize.hpp"

namespace omalous::cb {

using nlohmann::json;

ProjectivePoint::ProjectivePoint(std::array<Rational, 4> coords) : coords_(std::move(coords)) {
    const auto first = std::find_if(coords_.begin(), coords_.end(), [](const Rational& c) { return !c.is_zero(); });
    if (first == coords_.end()) throw DomainError("ZeroPoint", "(0:0:0:0) is not a projective point");
    const Rational scale = *first;
    for (auto& c : coords_) c /= scale;
}

std::string ProjectivePoint::str() const {
    return "(" + coords_[0].str() + ":" + coords_[1].str() + ":" + coords_[2].str() + ":" + coords_[3].str() + ")";
}

bool PointCycle::has_duplicates() const {
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (points[i] == points[j]) return true;
        }
    }
    return false;
}

CBSystem CBSystem::for_extension(const surface::HypersurfaceSpec& h, std::int64_t rank, liqin::Sign sign) {
    if (rank < 2) throw DomainError("InvalidRank", "rank must be >= 2");
    const auto cls = liqin::cb_system_class(rank, sign);
    return CBSystem{h, checked::add(cls.l_mult, checked::mul(cls.k_mult, h.degree - 4))};
}

bool on_surface(const ProjectivePoint& p, const surface::HypersurfaceSpec& h) {
    if (!h.F) throw DomainError("MissingDefiningPolynomial", "hypersurface has no defining polynomial");
    return exact::evaluate(*h.F, {p.coords().begin(), p.coords().end()}).is_zero();
}

std::vector<exact::Monomial> degree_monomials(std::int64_t m) {
    if (m < 0) throw DomainError("InvalidDegree", "system degree must be >= 0");
    std::vector<exact::Monomial> out;
    const int n = static_cast<int>(m);
    for (int a = n; a >= 0; --a) {
        for (int b = n - a; b >= 0; --b) {
            for (int c = n - a - b; c >= 0; --c) out.push_back(exact::Monomial({a, b, c, n - a - b - c}));
        }
    }
    return out;
}

ExactMatrix<Rational> evaluation_matrix(const PointCycle& z, std::int64_t m) {
    const auto monomials = degree_monomials(m);
    ExactMatrix<Rational> mat(monomials.size(), z.points.size(), Rational(0));
    for (std::size_t col = 0; col < z.points.size(); ++col) {
        const auto& p = z.points[col];
        for (std::size_t row = 0; row < monomials.size(); ++row) {
            Rational v(1);
            for (std::size_t i = 0; i < 4; ++i) {
                for (int k = 0; k < monomials[row][i]; ++k) v *= p[i];
            }
            mat(row, col) = v;
        }
    }
    return mat;
}

CBReport cb_check(const PointCycle& z, const CBSystem& sys) {
    for (const auto& p : z.points) {
        if (!on_surface(p, sys.hypersurface)) {
            throw DomainError("PointOffSurface", "point " + p.str() + " is not on the hypersurface");
        }
    }
    if (z.has_duplicates()) throw DomainError("DuplicatePoints", "cycle is not reduced: repeated point");

    CBReport rep;
    rep.degree = sys.degree;
    rep.rank_full = exact::rank(evaluation_matrix(z, sys.degree));
    rep.holds = true;
    for (std::size_t i = 0; i < z.points.size(); ++i) {
        PointCycle rest;
        for (std::size_t j = 0; j < z.points.size(); ++j) {
            if (j != i) rest.points.push_back(z.points[j]);
        }
        PointVerdict v{z.points[i], exact::rank(evaluation_matrix(rest, sys.degree)), false};
        v.satisfied = v.rank_without == rep.rank_full;
        rep.holds = rep.holds && v.satisfied;
        rep.points.push_back(std::move(v));
    }
    return rep;
}

ExtensionCertificate extension_certificate(const surface::SurfaceData& s, const surface::HypersurfaceSpec& h,
                                           const std::vector<PointCycle>& cycles, std::int64_t rank,
                                           liqin::Sign sign) {
    using checked::add;
    using checked::mul;
    using checked::sub;
    if (rank < 2) throw DomainError("InvalidRank", "rank must be >= 2");
    if (static_cast<std::int64_t>(cycles.size()) != rank - 1) {
        throw DomainError("WrongCycleCount", "rank " + std::to_string(rank) + " needs " + std::to_string(rank - 1) +
                                                 " cycles, got " + std::to_string(cycles.size()));
    }
    h.validate();

    ExtensionCertificate cert;
    cert.rank = rank;
    cert.sign = sign;
    const CBSystem sys = CBSystem::for_extension(h, rank, sign);
    cert.system_degree = sys.degree;
    cert.all_cb = true;
    for (const auto& z : cycles) {
        cert.cycles.push_back(cb_check(z, sys));
        cert.all_cb = cert.all_cb && cert.cycles.back().holds;
        cert.total_length = add(cert.total_length, static_cast<std::int64_t>(z.length()));
    }
    cert.required_length = liqin::required_cycle_length(s, rank, sign);
    cert.length_matches = cert.total_length == cert.required_length;

    // c(E) = (1 + c1 - (r-1)L) * prod_i (1 + L + [Z_i]).
    const std::int64_t L2 = s.L_squared;
    cert.target_c1_dot_L = liqin::c1_dot_L(s, sign);
    cert.target_c1_squared = s.K_squared;
    cert.target_c2 = add(add(sub(mul(exact::binomial(rank - 1, 2), L2), mul(mul(rank - 1, rank - 1), L2)),
                             mul(rank - 1, cert.target_c1_dot_L)),
                         cert.total_length);
    const liqin::BundleNumerics target{rank, cert.target_c1_dot_L, cert.target_c1_squared, cert.target_c2,
                                       sign == liqin::Sign::PlusK ? liqin::C1Description::PlusK
                                                                  : liqin::C1Description::MinusK};
    cert.omality = liqin::check_omality(target, s, /*allow_dual=*/true);
    cert.complete = cert.all_cb && cert.length_matches;
    return cert;
}

namespace {

struct CandidateLine {
    // Point(s, t) = s * base + t * direction.
    std::array<Rational, 4> base;
    std::array<Rational, 4> direction;
};

std::vector<CandidateLine> candidate_lines() {
    std::vector<CandidateLine> lines;
    // {x_a = e1 x_b, x_c = e2 x_d} for the three pairings of {0,1,2,3}.
    const std::array<std::array<int, 4>, 3> pairings{{{0, 2, 1, 3}, {0, 3, 1, 2}, {0, 1, 2, 3}}};
    for (const auto& pr : pairings) {
        for (int e1 : {1, -1}) {
            for (int e2 : {1, -1}) {
                CandidateLine l{};
                l.base.fill(Rational(0));
                l.direction.fill(Rational(0));
                l.base[pr[0]] = Rational(e1);
                l.base[pr[1]] = Rational(1);
                l.direction[pr[2]] = Rational(e2);
                l.direction[pr[3]] = Rational(1);
                lines.push_back(l);
            }
        }
    }
    // Coordinate lines {x_i = x_j = 0}.
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            CandidateLine l{};
            l.base.fill(Rational(0));
            l.direction.fill(Rational(0));
            int slot = 0;
            for (int k = 0; k < 4; ++k) {
                if (k == i || k == j) continue;
                (slot++ == 0 ? l.base : l.direction)[k] = Rational(1);
            }
            lines.push_back(l);
        }
    }
    return lines;
}

std::array<Rational, 4> point_on(const CandidateLine& l, const Rational& s, const Rational& t) {
    std::array<Rational, 4> out;
    for (std::size_t k = 0; k < 4; ++k) out[k] = s * l.base[k] + t * l.direction[k];
    return out;
}

bool line_on_surface(const CandidateLine& l, const surface::HypersurfaceSpec& h) {
    // A degree-d form vanishing at d+1 distinct points of a line vanishes on it.
    for (std::int64_t k = 0; k <= h.degree; ++k) {
        if (!on_surface(ProjectivePoint(point_on(l, Rational(1), Rational(k))), h)) return false;
    }
    return true;
}

}  // namespace

PointCycle sample_cycle(const surface::HypersurfaceSpec& h, std::size_t count, std::uint64_t seed) {
    if (!h.F) throw DomainError("MissingDefiningPolynomial", "sampler needs the defining polynomial");
    h.validate();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-50, 50);
    const auto lines = candidate_lines();
    std::vector<CandidateLine> contained;
    for (const auto& l : lines) {
        if (line_on_surface(l, h)) contained.push_back(l);
    }

    PointCycle z;
    const std::size_t max_attempts = 1000 * (count + 1);
    std::size_t attempts = 0;
    const CandidateLine* fixed = nullptr;
    if (!contained.empty()) {
        fixed = &contained[std::uniform_int_distribution<std::size_t>(0, contained.size() - 1)(rng)];
    }
    while (z.points.size() < count) {
        if (++attempts > max_attempts) {
            throw DomainError("SamplerExhausted", "could not find " + std::to_string(count) + " points on the surface");
        }
        const CandidateLine& l =
            fixed ? *fixed : lines[std::uniform_int_distribution<std::size_t>(0, lines.size() - 1)(rng)];
        const Rational s(coord(rng));
        const Rational t(coord(rng));
        if (s.is_zero() && t.is_zero()) continue;
        const ProjectivePoint p(point_on(l, s, t));
        if (!on_surface(p, h)) continue;
        if (std::find(z.points.begin(), z.points.end(), p) != z.points.end()) continue;
        z.points.push_back(p);
    }
    return z;
}

json to_json(const ProjectivePoint& p) {
    json out = json::array();
    for (const auto& c : p.coords()) out.push_back(c.str());
    return out;
}

ProjectivePoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw DomainError("ParseError", "a point needs exactly 4 coordinates");
    std::array<Rational, 4> c;
    for (std::size_t i = 0; i < 4; ++i) c[i] = exact::rational_from_json(j[i]);
    return ProjectivePoint(c);
}

json to_json(const PointCycle& z) {
    json pts = json::array();
    for (const auto& p : z.points) pts.push_back(to_json(p));
    return {{"points", pts}};
}

namespace {

PointCycle cycle_from_points_array(const json& arr) {
    if (!arr.is_array()) throw DomainError("ParseError", "points must be an array");
    PointCycle z;
    for (const auto& p : arr) z.points.push_back(point_from_json(p));
    return z;
}

}  // namespace

PointCycle cycle_from_json(const json& j) {
    if (j.is_object()) {
        if (!j.contains("points")) throw DomainError("ParseError", "cycle object without 'points'");
        return cycle_from_points_array(j.at("points"));
    }
    return cycle_from_points_array(j);
}

std::vector<PointCycle> cycles_from_json(const json& j) {
    if (!j.is_object() || !j.contains("cycles") || !j.at("cycles").is_array()) {
        throw DomainError("ParseError", "cycles file needs a 'cycles' array");
    }
    std::vector<PointCycle> out;
    for (const auto& c : j.at("cycles")) out.push_back(cycle_from_json(c));
    return out;
}

json to_json(const CBReport& r) {
    json pts = json::array();
    for (const auto& v : r.points) {
        pts.push_back({{"point", to_json(v.point)}, {"rank_without", v.rank_without}, {"satisfied", v.satisfied}});
    }
    return {{"holds", r.holds}, {"degree", r.degree}, {"rank_full", r.rank_full}, {"points", pts}};
}

CBReport cb_report_from_json(const json& j) {
    try {
        CBReport r;
        r.holds = j.at("holds").get<bool>();
        r.degree = j.at("degree").get<std::int64_t>();
        r.rank_full = j.at("rank_full").get<std::size_t>();
        for (const auto& v : j.at("points")) {
            r.points.push_back(PointVerdict{point_from_json(v.at("point")), v.at("rank_without").get<std::size_t>(),
                                            v.at("satisfied").get<bool>()});
        }
        return r;
    } catch (const json::exception& e) {
        throw DomainError("ParseError", std::string("CB report: ") + e.what());
    }
}

json to_json(const ExtensionCertificate& c) {
    json cycles = json::array();
    for (const auto& r : c.cycles) cycles.push_back(to_json(r));
    return {{"rank", c.rank},
            {"sign", liqin::to_string(c.sign)},
            {"system_degree", c.system_degree},
            {"cycles", cycles},
            {"all_cb", c.all_cb},
            {"total_length", c.total_length},
            {"required_length", c.required_length},
            {"length_matches", c.length_matches},
            {"target", {{"c1_dot_L", c.target_c1_dot_L}, {"c1_squared", c.target_c1_squared}, {"c2", c.target_c2}}},
            {"omality", liqin::to_json(c.omality)},
            {"complete", c.complete}};
}

ExtensionCertificate certificate_from_json(const json& j) {
    try {
        ExtensionCertificate c;
        c.rank = j.at("rank").get<std::int64_t>();
        c.sign = liqin::sign_from_string(j.at("sign").get<std::string>());
        c.system_degree = j.at("system_degree").get<std::int64_t>();
        for (const auto& r : j.at("cycles")) c.cycles.push_back(cb_report_from_json(r));
        c.all_cb = j.at("all_cb").get<bool>();
        c.total_length = j.at("total_length").get<std::int64_t>();
        c.required_length = j.at("required_length").get<std::int64_t>();
        c.length_matches = j.at("length_matches").get<bool>();
        c.target_c1_dot_L = j.at("target").at("c1_dot_L").get<std::int64_t>();
        c.target_c1_squared = j.at("target").at("c1_squared").get<std::int64_t>();
        c.target_c2 = j.at("target").at("c2").get<std::int64_t>();
        c.omality = liqin::omality_from_json(j.at("omality"));
        c.complete = j.at("complete").get<bool>();
        return c;
    } catch (const json::exception& e) {
        throw DomainError("ParseError", std::string("certificate: ") + e.what());
    }
}

}  // namespace omalous::cb
