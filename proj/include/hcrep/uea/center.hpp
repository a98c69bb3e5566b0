#pragma once

#include <string>
#include <vector>

#include "hcrep/linalg.hpp"
#include "hcrep/rootsys/weyl.hpp"
#include "hcrep/uea/pbw.hpp"
#include "hcrep/uea/polynomial.hpp"
#include "hcrep/verdict.hpp"

namespace hcrep::uea {

/// Variable names H(a), H(b), ... for polynomials on h^*: variable i is
/// lambda(H_i).
std::vector<std::string> cartan_variable_names(const RootSystem& rs);

/// beta(u): drop every PBW monomial with a positive root vector and read the
/// remaining Cartan monomials as a polynomial in lambda(H_i). Throws
/// InvalidInput unless u has weight 0.
Polynomial beta_projection(const PBWAlgebra& alg, const Element& u);

struct Casimir {
    Element element;
    /// Per simple factor: multiple of the Killing-dual Casimir that was used.
    std::vector<Rational> scale;
    std::string normalization;
};

/// Quadratic Casimir: on each simple factor, the Killing-dual element
/// sum x_i x^i times B(H_theta, H_theta)/2 with theta the highest root, so
/// that it acts on V_lambda by (lambda, lambda + 2 delta) in the form with
/// (theta, theta) = 2. Throws InvalidInput if the Killing form is degenerate.
Casimir casimir(const PBWAlgebra& alg);

/// Killing form tr(ad b_i ad b_j) in the basis of the algebra.
RationalMatrix killing_form(const StructureConstants& sc);

/// [z, b_i] = 0 for every basis element.
bool is_central(const PBWAlgebra& alg, const Element& z);

/// chi_lambda(z) = beta(z)(lambda). With strict, throws InvalidInput for a
/// non-central z.
Rational infinitesimal_character(const PBWAlgebra& alg, const Element& z, const Weight& lambda, bool strict = true);

/// gamma(z)(lambda) = beta(z)(lambda - delta).
Polynomial gamma_polynomial(const PBWAlgebra& alg, const Element& z);

/// gamma(z) is invariant under the linear action of every listed Weyl
/// element, both as a polynomial and on each sampled weight.
Verdict gamma_invariance_check(const PBWAlgebra& alg, const Element& z,
                               const std::vector<rootsys::WeylGroupElement>& w, const std::vector<Weight>& samples);

/// Action of an element on the Verma module M(lambda), truncated to the PBW
/// monomials in negative root vectors of total height <= depth. Entries are
/// polynomials in lambda, so one symbolic computation serves every lambda.
struct VermaAction {
    std::vector<Word> basis;
    /// columns[j] lists (row, entry) pairs of the image of basis[j].
    std::vector<std::vector<std::pair<std::size_t, Polynomial>>> columns;
    std::size_t rank = 0;

    RationalMatrix at(const Weight& lambda) const;
};

VermaAction verma_action(const PBWAlgebra& alg, const Element& u, long depth);
RationalMatrix verma_action_oracle(const PBWAlgebra& alg, const Element& u, const Weight& lambda, long depth);

}  // namespace hcrep::uea
