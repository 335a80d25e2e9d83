#include "omalous/qsc/qsc.hpp"

#include <algorithm>

#include "omalous/error.hpp"
#include "omalous/exactmath/serialize.hpp"

namespace omalous::qsc {

using nlohmann::json;

DeformationMatrices DeformationMatrices::classical() {
    const ExactMatrix<Rational> id({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    const ExactMatrix<Rational> zero(2, 2, Rational(0));
    return DeformationMatrices{id, zero, zero, id};
}

void DeformationMatrices::validate() const {
    for (const auto* m : {&A, &B, &C, &D}) {
        if (m->rows() != 2 || m->cols() != 2) throw DomainError("ShapeMismatch", "deformation matrices must be 2x2");
    }
}

namespace {

std::optional<int> coefficient_degree(const RationalFunction& c, const std::vector<int>& weights) {
    if (!c.is_homogeneous(weights)) return std::nullopt;
    const auto degree_of = [&](const QPolynomial& p) { return p.terms().begin()->first.weighted_degree(weights); };
    return degree_of(c.numerator()) - degree_of(c.denominator());
}

void check_params(const RPolynomial& f, const Variables& params) {
    for (const auto& [m, c] : f.terms()) {
        if (!(c.params() == params)) {
            throw DomainError("RingMismatch", "coefficient parameters do not match the ring parameters");
        }
    }
}

}  // namespace

RingPresentation RingPresentation::build(Variables vars, Variables params, std::vector<int> var_weights,
                                         std::vector<int> param_weights, std::vector<RPolynomial> relations,
                                         std::optional<std::vector<Monomial>> preferred_basis,
                                         const std::string& basis_error_code) {
    if (var_weights.size() != vars.size() || param_weights.size() != params.size()) {
        throw DomainError("ShapeMismatch", "one grading weight per variable and parameter is required");
    }
    RingPresentation r;
    r.vars_ = std::move(vars);
    r.params_ = std::move(params);
    r.var_weights_ = std::move(var_weights);
    r.param_weights_ = std::move(param_weights);
    std::vector<std::size_t> front(r.vars_.size());
    for (std::size_t i = 0; i < front.size(); ++i) front[i] = i;
    r.order_ = MonomialOrder::block(std::move(front));

    std::vector<RPolynomial> generators;
    for (auto& rel : relations) {
        if (!(rel.vars() == r.vars_)) throw DomainError("RingMismatch", "relation uses different ring variables");
        check_params(rel, r.params_);
        if (!rel.is_zero() && !r.weighted_degree(rel)) {
            throw DomainError("InhomogeneousRelation", "relation " + exact::to_string(rel) +
                                                           " is not homogeneous under the grading");
        }
        if (!rel.is_zero()) generators.push_back(rel);
    }
    r.relations_ = std::move(relations);
    r.groebner_ = exact::buchberger(generators, r.order_);

    // The quotient is finite iff every variable has a pure power among the leading monomials.
    const std::size_t n = r.vars_.size();
    std::vector<int> bound(n, -1);
    std::vector<Monomial> leads;
    for (const auto& g : r.groebner_) {
        const Monomial& lm = g.leading_monomial(r.order_);
        leads.push_back(lm);
        for (std::size_t i = 0; i < n; ++i) {
            bool pure = true;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != i && lm[k] != 0) pure = false;
            }
            if (pure && (bound[i] < 0 || lm[i] < bound[i])) bound[i] = lm[i];
        }
    }
    r.finite_ = std::all_of(bound.begin(), bound.end(), [](int b) { return b >= 0; });
    if (r.finite_) {
        std::vector<int> e(n, 0);
        const bool empty_box = std::any_of(bound.begin(), bound.end(), [](int b) { return b == 0; });
        while (!empty_box) {
            Monomial m(e);
            if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); })) {
                r.standard_.push_back(m);
            }
            std::size_t k = 0;
            while (k < n && ++e[k] == bound[k]) e[k++] = 0;
            if (k == n) break;
        }
        std::sort(r.standard_.begin(), r.standard_.end(), [&](const Monomial& a, const Monomial& b) {
            const int da = a.weighted_degree(r.var_weights_);
            const int db = b.weighted_degree(r.var_weights_);
            if (da != db) return da < db;
            return r.order_.less(b, a);
        });
    }

    if (!preferred_basis) {
        r.basis_ = r.standard_;
        return r;
    }
    if (!r.finite_ || preferred_basis->size() != r.standard_.size()) {
        throw DomainError(basis_error_code,
                          r.finite_ ? "quotient has dimension " + std::to_string(r.standard_.size()) + ", expected " +
                                          std::to_string(preferred_basis->size())
                                    : "quotient is not finite-dimensional");
    }
    const std::size_t dim = r.standard_.size();
    const RationalFunction zero(r.params_);
    r.change_ = ExactMatrix<RationalFunction>(dim, dim, zero);
    for (std::size_t j = 0; j < dim; ++j) {
        const RPolynomial m = RPolynomial::term(r.vars_, (*preferred_basis)[j], RationalFunction(r.params_, Rational(1)));
        const auto coords = r.standard_coordinates(exact::normal_form(m, r.groebner_, r.order_));
        for (std::size_t i = 0; i < dim; ++i) r.change_(i, j) = coords[i];
    }
    if (exact::rank(r.change_) != dim) {
        throw DomainError(basis_error_code, "requested quotient basis is linearly dependent modulo the relations");
    }
    r.basis_ = std::move(*preferred_basis);
    r.uses_preferred_ = true;
    return r;
}

std::optional<Monomial> RingPresentation::top_monomial() const {
    if (basis_.empty()) return std::nullopt;
    int top = basis_.front().weighted_degree(var_weights_);
    for (const auto& m : basis_) top = std::max(top, m.weighted_degree(var_weights_));
    std::optional<Monomial> found;
    for (const auto& m : basis_) {
        if (m.weighted_degree(var_weights_) != top) continue;
        if (found) return std::nullopt;
        found = m;
    }
    return found;
}

std::optional<int> RingPresentation::weighted_degree(const RPolynomial& f) const {
    std::optional<int> deg;
    for (const auto& [m, c] : f.terms()) {
        const auto cd = coefficient_degree(c, param_weights_);
        if (!cd) return std::nullopt;
        const int d = m.weighted_degree(var_weights_) + *cd;
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

RPolynomial RingPresentation::lift(const QPolynomial& f) const { return exact::lift(f, vars_, params_); }

RPolynomial RingPresentation::variable(const std::string& name) const {
    return RPolynomial::variable(vars_, name, RationalFunction(params_, Rational(1)));
}

RPolynomial RingPresentation::constant(const RationalFunction& c) const { return RPolynomial::constant(vars_, c); }

std::vector<RationalFunction> RingPresentation::standard_coordinates(const RPolynomial& reduced) const {
    std::vector<RationalFunction> coords;
    coords.reserve(standard_.size());
    for (const auto& m : standard_) {
        const RationalFunction* c = reduced.find(m);
        coords.push_back(c ? *c : RationalFunction(params_));
    }
    return coords;
}

NormalFormResult RingPresentation::reduce(const RPolynomial& f) const {
    if (!(f.vars() == vars_)) throw DomainError("RingMismatch", "polynomial uses different ring variables");
    check_params(f, params_);
    NormalFormResult out{f, exact::normal_form(f, groebner_, order_), basis_, {}};
    if (!finite_) return out;
    out.coordinates = standard_coordinates(out.reduced);
    if (uses_preferred_ && !basis_.empty()) out.coordinates = exact::solve(change_, out.coordinates);
    return out;
}

RationalFunction RingPresentation::correlator(const RPolynomial& f) const {
    const auto top = top_monomial();
    if (!finite_ || !top) {
        throw DomainError("NoUniqueTopMonomial", "quotient basis has no unique top-degree monomial");
    }
    const auto nf = reduce(f);
    const auto it = std::find(basis_.begin(), basis_.end(), *top);
    return nf.coordinates[static_cast<std::size_t>(it - basis_.begin())];
}

RingPresentation qh_projective_space(int n) {
    if (n < 1) throw DomainError("InvalidDimension", "QH*(P^n) needs n >= 1");
    const Variables vars{"x"};
    const Variables params{"q"};
    const RationalFunction one(params, Rational(1));
    RPolynomial rel = RPolynomial::term(vars, Monomial({n + 1}), one);
    rel -= RPolynomial::constant(vars, RationalFunction::parameter(params, "q"));
    return RingPresentation::build(vars, params, {1}, {n + 1}, {rel});
}

RingPresentation qh_product_projective(int n, int m) {
    if (n < 1 || m < 1) throw DomainError("InvalidDimension", "QH*(P^n x P^m) needs n, m >= 1");
    const Variables vars{"x", "y"};
    const Variables params{"p", "q"};
    const RationalFunction one(params, Rational(1));
    RPolynomial r1 = RPolynomial::term(vars, Monomial({n + 1, 0}), one);
    r1 -= RPolynomial::constant(vars, RationalFunction::parameter(params, "p"));
    RPolynomial r2 = RPolynomial::term(vars, Monomial({0, m + 1}), one);
    r2 -= RPolynomial::constant(vars, RationalFunction::parameter(params, "q"));
    return RingPresentation::build(vars, params, {1, 1}, {n + 1, m + 1}, {r1, r2});
}

namespace {

Rational det2(const ExactMatrix<Rational>& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

ExactMatrix<Rational> sum2(const ExactMatrix<Rational>& a, const ExactMatrix<Rational>& b) {
    ExactMatrix<Rational> out(2, 2, Rational(0));
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) out(i, j) = a(i, j) + b(i, j);
    }
    return out;
}

}  // namespace

std::array<Rational, 3> det_pencil(const ExactMatrix<Rational>& m, const ExactMatrix<Rational>& n) {
    const Rational dm = det2(m);
    const Rational dn = det2(n);
    return {dm, det2(sum2(m, n)) - dm - dn, dn};
}

RingPresentation quadric_family_relations(const DeformationMatrices& mats) {
    mats.validate();
    const Variables vars{"a", "b"};
    const Variables params{"p", "q"};
    auto relation = [&](const ExactMatrix<Rational>& m, const ExactMatrix<Rational>& n, const char* param) {
        const auto c = det_pencil(m, n);
        RPolynomial rel(vars);
        rel.add_term(Monomial({2, 0}), RationalFunction(params, c[0]));
        rel.add_term(Monomial({1, 1}), RationalFunction(params, c[1]));
        rel.add_term(Monomial({0, 2}), RationalFunction(params, c[2]));
        rel.add_term(Monomial({0, 0}), -RationalFunction::parameter(params, param));
        return rel;
    };
    std::vector<Monomial> basis{Monomial({0, 0}), Monomial({1, 0}), Monomial({0, 1}), Monomial({1, 1})};
    return RingPresentation::build(vars, params, {1, 1}, {2, 2},
                                   {relation(mats.A, mats.B, "p"), relation(mats.C, mats.D, "q")},
                                   std::move(basis), "DegenerateDeformation");
}

bool check_classical_specialization(const DeformationMatrices& mats) {
    std::optional<RingPresentation> deformed;
    try {
        deformed = quadric_family_relations(mats);
    } catch (const DomainError& e) {
        if (e.code() == "DegenerateDeformation") return false;
        throw;
    }
    const RingPresentation classical = qh_product_projective(1, 1);
    const auto& lhs = deformed->groebner_basis();
    const auto& rhs = classical.groebner_basis();
    if (lhs.size() != rhs.size()) return false;
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        if (lhs[i].terms() != rhs[i].terms()) return false;
    }
    return true;
}

json to_json(const DeformationMatrices& m) {
    return {{"A", exact::to_json_value(m.A)},
            {"B", exact::to_json_value(m.B)},
            {"C", exact::to_json_value(m.C)},
            {"D", exact::to_json_value(m.D)}};
}

DeformationMatrices matrices_from_json(const json& j) {
    if (!j.is_object()) throw DomainError("ParseError", "matrices file must be a JSON object");
    DeformationMatrices m;
    for (const auto& [key, slot] : {std::pair{"A", &m.A}, {"B", &m.B}, {"C", &m.C}, {"D", &m.D}}) {
        if (!j.contains(key)) throw DomainError("ParseError", std::string("missing matrix '") + key + "'");
        *slot = exact::rational_matrix_from_json(j.at(key));
    }
    m.validate();
    return m;
}

namespace {

json monomials_json(const std::vector<Monomial>& ms) {
    json out = json::array();
    for (const auto& m : ms) out.push_back(m.exponents());
    return out;
}

std::vector<Monomial> monomials_from(const json& j) {
    std::vector<Monomial> out;
    for (const auto& e : j) out.emplace_back(e.get<std::vector<int>>());
    return out;
}

}  // namespace

json to_json(const RingPresentation& r) {
    json rels = json::array();
    for (const auto& p : r.relations()) rels.push_back(exact::to_json_value(p, r.params()));
    json gb = json::array();
    for (const auto& p : r.groebner_basis()) gb.push_back(exact::to_json_value(p, r.params()));
    const auto top = r.top_monomial();
    return {{"vars", r.vars().names()},
            {"params", r.params().names()},
            {"grading", {{"vars", r.var_weights()}, {"params", r.param_weights()}}},
            {"relations", rels},
            {"groebner_basis", gb},
            {"finite", r.finite()},
            {"standard_monomials", monomials_json(r.standard_monomials())},
            {"staircase", monomials_json(r.staircase())},
            {"top_monomial", top ? json(top->exponents()) : json(nullptr)}};
}

RingPresentation ring_from_json(const json& j) {
    try {
        const Variables vars(j.at("vars").get<std::vector<std::string>>());
        const Variables params(j.at("params").get<std::vector<std::string>>());
        std::vector<RPolynomial> rels;
        for (const auto& p : j.at("relations")) {
            const RPolynomial raw = exact::rpolynomial_from_json(p);
            // Re-home onto the shared variable lists.
            RPolynomial rel(vars);
            for (const auto& [m, c] : raw.terms()) {
                rel.add_term(m, RationalFunction(exact::change_ring(c.numerator(), params),
                                                 exact::change_ring(c.denominator(), params)));
            }
            rels.push_back(std::move(rel));
        }
        std::optional<std::vector<Monomial>> preferred;
        if (j.at("finite").get<bool>()) preferred = monomials_from(j.at("staircase"));
        return RingPresentation::build(vars, params, j.at("grading").at("vars").get<std::vector<int>>(),
                                       j.at("grading").at("params").get<std::vector<int>>(), std::move(rels),
                                       std::move(preferred));
    } catch (const json::exception& e) {
        throw DomainError("ParseError", std::string("ring JSON: ") + e.what());
    }
}

json to_json(const NormalFormResult& r, const Variables& params) {
    json coords = json::array();
    for (const auto& c : r.coordinates) coords.push_back(exact::to_json_value(c));
    return {{"input", exact::to_json_value(r.input, params)},
            {"reduced", exact::to_json_value(r.reduced, params)},
            {"basis", monomials_json(r.basis)},
            {"coordinates", coords}};
}

}  // namespace omalous::qsc
