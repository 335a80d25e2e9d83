#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "omalous/exactmath/groebner.hpp"
#include "omalous/exactmath/matrix.hpp"
#include "omalous/exactmath/ratfunc.hpp"

namespace omalous::qsc {

using exact::ExactMatrix;
using exact::Monomial;
using exact::MonomialOrder;
using exact::QPolynomial;
using exact::Rational;
using exact::RationalFunction;
using exact::RPolynomial;
using exact::Variables;

/// The 2x2 matrices A, B, C, D of the deformation
///   0 -> O^2 -> O(1,0)^2 + O(0,1)^2 -> E -> 0
/// of the tangent bundle of P^1 x P^1; A = D = I, B = C = 0 is the tangent bundle.
struct DeformationMatrices {
    ExactMatrix<Rational> A, B, C, D;

    static DeformationMatrices classical();
    /// Throws DomainError("ShapeMismatch") unless all four are 2x2.
    void validate() const;

    friend bool operator==(const DeformationMatrices&, const DeformationMatrices&) = default;
};

struct NormalFormResult {
    RPolynomial input;
    RPolynomial reduced;
    std::vector<Monomial> basis;
    std::vector<RationalFunction> coordinates;   // of `reduced` in `basis`
};

/// Presentation of a quotient ring Q(params)[vars] / (relations) with a
/// weighted grading, its reduced Groebner basis (degrevlex on the ring
/// variables, parameters in the coefficient field), and, when the quotient
/// is finite-dimensional, a monomial basis of it.
class RingPresentation {
public:
    /// Computes the Groebner basis eagerly. `preferred_basis`, when given,
    /// replaces the standard monomials as the reported quotient basis; it
    /// must be linearly independent modulo the ideal and of the same size,
    /// otherwise DomainError(`basis_error_code`) is raised.
    static RingPresentation build(Variables vars, Variables params, std::vector<int> var_weights,
                                  std::vector<int> param_weights, std::vector<RPolynomial> relations,
                                  std::optional<std::vector<Monomial>> preferred_basis = std::nullopt,
                                  const std::string& basis_error_code = "BasisNotIndependent");

    const Variables& vars() const { return vars_; }
    const Variables& params() const { return params_; }
    const std::vector<int>& var_weights() const { return var_weights_; }
    const std::vector<int>& param_weights() const { return param_weights_; }
    const std::vector<RPolynomial>& relations() const { return relations_; }
    const std::vector<RPolynomial>& groebner_basis() const { return groebner_; }
    const MonomialOrder& order() const { return order_; }

    bool finite() const { return finite_; }
    /// Monomials outside the leading-term ideal (empty when not finite).
    const std::vector<Monomial>& standard_monomials() const { return standard_; }
    /// Reported quotient basis: the preferred basis if one was given, else the standard monomials.
    const std::vector<Monomial>& staircase() const { return basis_; }
    std::optional<Monomial> top_monomial() const;

    /// Weighted degree of a polynomial whose terms (coefficients included)
    /// are all of one degree; nullopt otherwise or for zero.
    std::optional<int> weighted_degree(const RPolynomial& f) const;

    /// Ring-variable polynomial from a Q-polynomial over (some of) vars + params.
    RPolynomial lift(const QPolynomial& f) const;
    RPolynomial variable(const std::string& name) const;
    RPolynomial constant(const RationalFunction& c) const;

    NormalFormResult reduce(const RPolynomial& f) const;
    /// Coefficient of the unique top-degree basis monomial in reduce(f).
    /// Throws DomainError("NoUniqueTopMonomial").
    RationalFunction correlator(const RPolynomial& f) const;

private:
    std::vector<RationalFunction> standard_coordinates(const RPolynomial& reduced) const;

    Variables vars_;
    Variables params_;
    std::vector<int> var_weights_;
    std::vector<int> param_weights_;
    std::vector<RPolynomial> relations_;
    std::vector<RPolynomial> groebner_;
    MonomialOrder order_ = MonomialOrder::degrevlex();
    bool finite_ = false;
    std::vector<Monomial> standard_;
    std::vector<Monomial> basis_;
    bool uses_preferred_ = false;
    // Column j: coordinates of basis_[j] in the standard monomials.
    ExactMatrix<RationalFunction> change_;
};

/// QH*(P^n) = Q(q)[x] / (x^{n+1} - q), deg x = 1, deg q = n + 1.
RingPresentation qh_projective_space(int n);

/// QH*(P^n x P^m) = Q(p,q)[x,y] / (x^{n+1} - p, y^{m+1} - q).
RingPresentation qh_product_projective(int n, int m);

/// Deformed quadric ring Q(p,q)[a,b] / (det(aA + bB) - p, det(aC + bD) - q)
/// with quotient basis {1, a, b, ab}. Throws DomainError("DegenerateDeformation")
/// when the quotient is not 4-dimensional or ab is dependent on {1, a, b}
/// (e.g. det A = det B = 0, where the first relation reads c ab - p).
RingPresentation quadric_family_relations(const DeformationMatrices& mats);

/// det(aM + bN) as a quadratic form, via
/// det(aM + bN) = a^2 det M + ab [det(M+N) - det M - det N] + b^2 det N.
std::array<Rational, 3> det_pencil(const ExactMatrix<Rational>& m, const ExactMatrix<Rational>& n);

/// True iff the deformed quadric ring has exactly the reduced Groebner basis
/// of QH*(P^1 x P^1) with x -> a, y -> b.
bool check_classical_specialization(const DeformationMatrices& mats);

nlohmann::json to_json(const DeformationMatrices& m);
DeformationMatrices matrices_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RingPresentation& r);
RingPresentation ring_from_json(const nlohmann::json& j);
nlohmann::json to_json(const NormalFormResult& r, const Variables& params);

}  // namespace omalous::qsc
