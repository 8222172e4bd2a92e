#pragma once

#include "skl/ncalg.hpp"
#include "skl/tower.hpp"

namespace skl {

/// A valid parameter triple with its scalar field. gamma is determined
/// by alpha + beta + gamma + alpha*beta*gamma = 0; the tower adjoins
/// i and square roots a, b, c of alpha, beta, gamma in that order.
struct Params {
    Rat alpha_r, beta_r, gamma_r;
    TowerPtr tower;
    FieldElem alpha, beta, gamma;
    FieldElem i, a, b, c;
};

struct DerivedConstants {
    FieldElem mu, nu, lambda;
};

enum class Central { Omega, OmegaPrime, Theta, ThetaPrime };

/// Throws ConstraintViolation when 1 + alpha*beta = 0 or when any of
/// alpha, beta, gamma lands in {0, 1, -1}.
Params make_params(const Rat& alpha, const Rat& beta);

/// Generators x0..x3 and the six relations
///   x0 xi - xi x0 - alpha_i (xj xk + xk xj),
///   x0 xi + xi x0 - (xj xk - xk xj)
/// over the cyclic triples (i,j,k) of (1,2,3).
QuadAlgebra q_relations(const Params& p);

/// Generators y0..y3 and the six twisted relations
///   y0 yi - yi y0 - alpha_i (yj yk - yk yj),
///   y0 yi + yi y0 - (yj yk + yk yj),
/// ordered difference i=1,2,3 then sum i=1,2,3.
QuadAlgebra qtilde_relations(const Params& p);

NcTensor central_element(const Params& p, Central which);

/// mu = (1-gamma)/(1+alpha), nu = (1+gamma)/(1-beta),
/// lambda = (nu - mu nu)/(nu - mu).
DerivedConstants derived_constants(const Params& p);

}  // namespace skl
