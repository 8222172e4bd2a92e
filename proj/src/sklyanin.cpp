#include "skl/sklyanin.hpp"

#include "skl/errors.hpp"

namespace skl {

namespace {

const int CYCLIC[3][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}};

NcTensor word2(const TowerPtr& t, int i, int j, const FieldElem& c) {
    NcTensor z{4, 2, t, {}};
    nc_add_term(z, 4L * i + j, c);
    return z;
}

}  // namespace

Params make_params(const Rat& alpha, const Rat& beta) {
    if (1 + alpha * beta == 0)
        throw ConstraintViolation("make_params: 1 + alpha*beta = 0");
    Rat gamma = -(alpha + beta) / (1 + alpha * beta);
    for (const Rat& v : {alpha, beta, gamma})
        if (v == 0 || v == 1 || v == -1)
            throw ConstraintViolation(
                "make_params: parameter in {0, 1, -1}");

    TowerPtr t = adjoin_root(Tower::rationals(), "i",
                             {FieldElem(Tower::rationals(), Rat(1)),
                              FieldElem(Tower::rationals(), Rat(0))});
    FieldElem i = FieldElem::generator(t, 1);
    auto [ta, a] = sqrt_adjoin(t, FieldElem(t, alpha));
    auto [tb, b] = sqrt_adjoin(ta, FieldElem(ta, beta));
    auto [tc, c] = sqrt_adjoin(tb, FieldElem(tb, gamma));

    Params p;
    p.alpha_r = alpha;
    p.beta_r = beta;
    p.gamma_r = gamma;
    p.tower = tc;
    p.alpha = FieldElem(tc, alpha);
    p.beta = FieldElem(tc, beta);
    p.gamma = FieldElem(tc, gamma);
    p.i = embed(i, tc);
    p.a = embed(a, tc);
    p.b = embed(b, tc);
    p.c = embed(c, tc);
    return p;
}

QuadAlgebra q_relations(const Params& p) {
    const TowerPtr& t = p.tower;
    const FieldElem alphas[3] = {p.alpha, p.beta, p.gamma};
    FieldElem one(t, Rat(1));
    std::vector<NcTensor> rels;
    for (int row = 0; row < 3; ++row) {
        int i = CYCLIC[row][0], j = CYCLIC[row][1], k = CYCLIC[row][2];
        rels.push_back(word2(t, 0, i, one) - word2(t, i, 0, one) -
                       word2(t, j, k, alphas[row]) -
                       word2(t, k, j, alphas[row]));
    }
    for (int row = 0; row < 3; ++row) {
        int i = CYCLIC[row][0], j = CYCLIC[row][1], k = CYCLIC[row][2];
        rels.push_back(word2(t, 0, i, one) + word2(t, i, 0, one) -
                       word2(t, j, k, one) + word2(t, k, j, one));
    }
    return QuadAlgebra({"x0", "x1", "x2", "x3"}, rels, t);
}

QuadAlgebra qtilde_relations(const Params& p) {
    const TowerPtr& t = p.tower;
    const FieldElem alphas[3] = {p.alpha, p.beta, p.gamma};
    FieldElem one(t, Rat(1));
    std::vector<NcTensor> rels;
    for (int row = 0; row < 3; ++row) {
        int i = CYCLIC[row][0], j = CYCLIC[row][1], k = CYCLIC[row][2];
        rels.push_back(word2(t, 0, i, one) - word2(t, i, 0, one) -
                       word2(t, j, k, alphas[row]) +
                       word2(t, k, j, alphas[row]));
    }
    for (int row = 0; row < 3; ++row) {
        int i = CYCLIC[row][0], j = CYCLIC[row][1], k = CYCLIC[row][2];
        rels.push_back(word2(t, 0, i, one) + word2(t, i, 0, one) -
                       word2(t, j, k, one) - word2(t, k, j, one));
    }
    return QuadAlgebra({"y0", "y1", "y2", "y3"}, rels, t);
}

NcTensor central_element(const Params& p, Central which) {
    const TowerPtr& t = p.tower;
    FieldElem one(t, Rat(1));
    NcTensor z{4, 2, t, {}};
    switch (which) {
        case Central::Omega:
            nc_add_term(z, 0, -one);
            for (int j = 1; j < 4; ++j) nc_add_term(z, 5L * j, one);
            break;
        case Central::Theta:
            for (int j = 0; j < 4; ++j) nc_add_term(z, 5L * j, one);
            break;
        case Central::OmegaPrime:
        case Central::ThetaPrime: {
            FieldElem c2 = (one + p.alpha) / (one - p.beta);
            FieldElem c3 = (one - p.alpha) / (one + p.gamma);
            nc_add_term(z, 5L, one);
            nc_add_term(z, 10L, c2);
            nc_add_term(z, 15L, c3);
            break;
        }
    }
    return z;
}

DerivedConstants derived_constants(const Params& p) {
    FieldElem one(p.tower, Rat(1));
    FieldElem mu = (one - p.gamma) / (one + p.alpha);
    FieldElem nu = (one + p.gamma) / (one - p.beta);
    if (mu == one || nu == one || mu == nu)
        throw ConstraintViolation("derived_constants: {1, mu, nu} collapse");
    FieldElem lambda = (nu - mu * nu) / (nu - mu);
    if (lambda.is_zero() || lambda == one)
        throw ConstraintViolation("derived_constants: lambda in {0, 1}");
    return {mu, nu, lambda};
}

}  // namespace skl
