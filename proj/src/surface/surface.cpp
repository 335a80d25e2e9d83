#include "omalous/surface/surface.hpp"

#include "omalous/checked.hpp"
#include "omalous/error.hpp"
#include "omalous/exactmath/binomial.hpp"
#include "omalous/exactmath/serialize.hpp"

namespace omalous::surface {

using checked::add;
using checked::mul;
using checked::sub;

std::optional<std::int64_t> SurfaceData::h0(DivisorClass cls) const {
    if (const auto* hs = std::get_if<HypersurfaceH0>(&h0_source)) {
        const std::int64_t m = add(cls.l_mult, mul(cls.k_mult, hs->degree - 4));
        return h0_line_bundle(hs->degree, m);
    }
    if (const auto* table = std::get_if<H0Table>(&h0_source)) {
        const auto it = table->values.find(cls);
        if (it != table->values.end()) return it->second;
    }
    return std::nullopt;
}

std::optional<std::int64_t> SurfaceData::hypersurface_degree() const {
    if (const auto* hs = std::get_if<HypersurfaceH0>(&h0_source)) return hs->degree;
    return std::nullopt;
}

void HypersurfaceSpec::validate() const {
    if (degree < 1) throw DomainError("InvalidDegree", "hypersurface degree must be >= 1");
    if (!F) return;
    if (F->vars().size() != 4) {
        throw DomainError("InvalidHypersurface", "defining form must use exactly 4 homogeneous coordinates");
    }
    if (F->is_zero()) throw DomainError("InvalidHypersurface", "defining form is zero");
    if (F->degree() != degree || !F->is_homogeneous({1, 1, 1, 1})) {
        throw DomainError("InvalidHypersurface",
                          "defining form is not homogeneous of degree " + std::to_string(degree));
    }
}

SurfaceData hypersurface_invariants(std::int64_t d) {
    if (d < 1) throw DomainError("InvalidDegree", "hypersurface degree must be >= 1, got " + std::to_string(d));
    SurfaceData s;
    const std::int64_t d2 = mul(d, d);
    const std::int64_t d3 = mul(d2, d);
    s.c2_top = add(sub(d3, mul(4, d2)), mul(6, d));
    s.K_squared = mul(d, mul(d - 4, d - 4));
    s.L_squared = d;
    s.K_dot_L = mul(d, d - 4);
    s.irregularity = 0;
    const std::int64_t chern_sum = add(s.K_squared, s.c2_top);
    if (chern_sum % 12 != 0) throw DomainError("NoetherViolation", "K^2 + c2 is not divisible by 12");
    s.p_g = chern_sum / 12 - 1;
    s.h0_source = HypersurfaceH0{d};
    return s;
}

std::int64_t h0_line_bundle(std::int64_t d, std::int64_t m) {
    if (m < 0) return 0;
    return sub(exact::binomial(add(m, 3), 3), exact::binomial(sub(m, d) + 3, 3));
}

NoetherReport check_noether(const SurfaceData& s) {
    NoetherReport r;
    r.twelve_chi = mul(12, sub(add(1, s.p_g), s.irregularity));
    r.chern_sum = add(s.K_squared, s.c2_top);
    r.divisible_by_12 = r.chern_sum % 12 == 0;
    r.holds = r.twelve_chi == r.chern_sum;
    return r;
}

bool check_bmy(const SurfaceData& s) { return s.K_squared <= mul(3, s.c2_top); }

nlohmann::json to_json(const SurfaceData& s) {
    nlohmann::json h0 = nullptr;
    if (const auto* hs = std::get_if<HypersurfaceH0>(&s.h0_source)) {
        h0 = {{"kind", "hypersurface"}, {"degree", hs->degree}};
    } else if (const auto* table = std::get_if<H0Table>(&s.h0_source)) {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& [cls, v] : table->values) {
            values.push_back({{"l", cls.l_mult}, {"k", cls.k_mult}, {"h0", v}});
        }
        h0 = {{"kind", "table"}, {"values", values}};
    }
    return {{"L_squared", s.L_squared}, {"K_dot_L", s.K_dot_L},   {"K_squared", s.K_squared},
            {"c2_top", s.c2_top},       {"p_g", s.p_g},           {"irregularity", s.irregularity},
            {"h0", h0}};
}

SurfaceData surface_from_json(const nlohmann::json& j) {
    try {
        SurfaceData s;
        s.L_squared = j.at("L_squared").get<std::int64_t>();
        s.K_dot_L = j.at("K_dot_L").get<std::int64_t>();
        s.K_squared = j.at("K_squared").get<std::int64_t>();
        s.c2_top = j.at("c2_top").get<std::int64_t>();
        s.p_g = j.at("p_g").get<std::int64_t>();
        s.irregularity = j.at("irregularity").get<std::int64_t>();
        if (s.L_squared <= 0) throw DomainError("InvalidSurface", "L^2 must be positive");
        if (s.p_g < 0 || s.irregularity < 0) throw DomainError("InvalidSurface", "p_g and q must be non-negative");
        const auto& h0 = j.contains("h0") ? j.at("h0") : nlohmann::json(nullptr);
        if (h0.is_object()) {
            const auto kind = h0.at("kind").get<std::string>();
            if (kind == "hypersurface") {
                s.h0_source = HypersurfaceH0{h0.at("degree").get<std::int64_t>()};
            } else if (kind == "table") {
                H0Table table;
                for (const auto& v : h0.at("values")) {
                    table.values[{v.at("l").get<std::int64_t>(), v.at("k").get<std::int64_t>()}] =
                        v.at("h0").get<std::int64_t>();
                }
                s.h0_source = std::move(table);
            } else {
                throw DomainError("ParseError", "unknown h0 kind '" + kind + "'");
            }
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("ParseError", std::string("surface JSON: ") + e.what());
    }
}

nlohmann::json to_json(const NoetherReport& r) {
    return {{"holds", r.holds},
            {"twelve_chi", r.twelve_chi},
            {"chern_sum", r.chern_sum},
            {"divisible_by_12", r.divisible_by_12}};
}

nlohmann::json to_json(const HypersurfaceSpec& h) {
    nlohmann::json out = {{"degree", h.degree}};
    if (h.F) out["F"] = exact::to_json_value(*h.F);
    return out;
}

HypersurfaceSpec hypersurface_from_json(const nlohmann::json& j) {
    HypersurfaceSpec h;
    try {
        h.degree = j.at("degree").get<std::int64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw DomainError("ParseError", std::string("hypersurface JSON: ") + e.what());
    }
    if (j.contains("F") && !j.at("F").is_null()) h.F = exact::qpolynomial_from_json(j.at("F"));
    h.validate();
    return h;
}

}  // namespace omalous::surface
