#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skl/errors.hpp"
#include "skl/sklyanin.hpp"
#include "skl/twist.hpp"

using namespace skl;

namespace {

Params defaults() { return make_params(Rat(2), Rat(3)); }

Cocycle2 trivial_cocycle(const GradingGroup& G, const TowerPtr& t) {
    Cocycle2 mu{G, t, {}};
    mu.table.assign(G.size(),
                    std::vector<FieldElem>(G.size(), FieldElem(t, Rat(1))));
    return mu;
}

}  // namespace

TEST_CASE("quaternion cocycle values") {
    Params p = defaults();
    Cocycle2 mu = cocycle_from_matrix_basis(quaternion_basis(p.tower, p.i));
    FieldElem one(p.tower, Rat(1));
    CHECK(mu.at(1, 2) == one);
    CHECK(mu.at(2, 1) == -one);
    for (int j = 1; j <= 3; ++j) CHECK(mu.at(j, j) == -one);
    for (int g = 0; g < 4; ++g) {
        CHECK(mu.at(0, g) == one);
        CHECK(mu.at(g, 0) == one);
    }
}

TEST_CASE("trivial group gives the trivial cocycle") {
    TowerPtr q = Tower::rationals();
    MatrixBasis basis{GradingGroup{{1}}, q, {{{FieldElem(q, Rat(1))}}}};
    Cocycle2 mu = cocycle_from_matrix_basis(basis);
    CHECK(mu.at(0, 0) == FieldElem(q, Rat(1)));
}

TEST_CASE("clock and shift over (Z/3)^2 give cube-root cocycle values") {
    TowerPtr q = Tower::rationals();
    TowerPtr t = adjoin_root(q, "zeta3",
                             {FieldElem(q, Rat(1)), FieldElem(q, Rat(1))});
    FieldElem zeta = FieldElem::generator(t, 1);
    FieldElem z(t), one(t, Rat(1));
    std::vector<std::vector<FieldElem>> clock{
        {one, z, z}, {z, zeta, z}, {z, z, zeta * zeta}};
    std::vector<std::vector<FieldElem>> shift{
        {z, z, one}, {one, z, z}, {z, one, z}};

    GradingGroup G{{3, 3}};
    MatrixBasis basis{G, t, {}};
    basis.mats.resize(9);
    for (int pq = 0; pq < 9; ++pq) {
        int pp = pq % 3, qq = pq / 3;
        auto m = std::vector<std::vector<FieldElem>>(
            3, std::vector<FieldElem>(3, z));
        for (int i = 0; i < 3; ++i) m[i][i] = one;
        auto mul = [&](const auto& a, const auto& b) {
            std::vector<std::vector<FieldElem>> o(
                3, std::vector<FieldElem>(3, z));
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k)
                    for (int j = 0; j < 3; ++j) o[i][j] += a[i][k] * b[k][j];
            return o;
        };
        for (int s = 0; s < pp; ++s) m = mul(m, clock);
        for (int s = 0; s < qq; ++s) m = mul(m, shift);
        basis.mats[pq] = m;
    }
    Cocycle2 mu = cocycle_from_matrix_basis(basis);
    for (int g = 0; g < 9; ++g)
        for (int h = 0; h < 9; ++h)
            CHECK(mu.at(g, h) * mu.at(g, h) * mu.at(g, h) == one);
}

TEST_CASE("twisting the relations") {
    Params p = defaults();
    QuadAlgebra Q = q_relations(p);
    QuadAlgebra Qt = qtilde_relations(p);
    CharacterAssignment ch = sklyanin_characters();
    Cocycle2 mu = cocycle_from_matrix_basis(quaternion_basis(p.tower, p.i));

    QuadAlgebra twisted = twist_algebra(Q, ch, mu, Qt.labels());
    CHECK(twisted.span_in_degree(2).same_span(Qt.span_in_degree(2)));

    SUBCASE("hilbert dimensions are preserved") {
        for (int n = 0; n <= 4; ++n)
            CHECK(hilbert_dim(twisted, n) == hilbert_dim(Q, n));
    }

    SUBCASE("trivial cocycle changes nothing") {
        QuadAlgebra same = twist_algebra(Q, ch, trivial_cocycle(ch.group,
                                                                p.tower));
        CHECK(same.span_in_degree(2).same_span(Q.span_in_degree(2)));
    }

    SUBCASE("double twist recovers Q") {
        QuadAlgebra back = twist_algebra(twisted, ch, mu, Q.labels());
        CHECK(back.span_in_degree(2).same_span(Q.span_in_degree(2)));
    }

    SUBCASE("twist then inverse twist recovers Q") {
        QuadAlgebra back =
            twist_algebra(twisted, ch, cocycle_inverse(mu), Q.labels());
        CHECK(back.span_in_degree(2).same_span(Q.span_in_degree(2)));
    }
}

TEST_CASE("twisting elements") {
    Params p = defaults();
    CharacterAssignment ch = sklyanin_characters();
    Cocycle2 mu = cocycle_from_matrix_basis(quaternion_basis(p.tower, p.i));

    NcTensor omega = central_element(p, Central::Omega);
    NcTensor theta = central_element(p, Central::Theta);
    CHECK(nc_equal(twist_element(omega, ch, mu),
                   nc_scale(FieldElem(p.tower, Rat(-1)), theta)));

    NcTensor omegap = central_element(p, Central::OmegaPrime);
    NcTensor thetap = central_element(p, Central::ThetaPrime);
    CHECK(nc_equal(twist_element(omegap, ch, mu),
                   nc_scale(FieldElem(p.tower, Rat(-1)), thetap)));

    NcTensor x00 = nc_tensor(nc_gen(4, 0, p.tower), nc_gen(4, 0, p.tower));
    CHECK(nc_equal(twist_element(x00, ch, mu), x00));

    CHECK_THROWS_AS(twist_element(nc_gen(4, 0, p.tower), ch, mu),
                    UnsupportedDegree);

    SUBCASE("centrality transfers through the twist") {
        QuadAlgebra Q = q_relations(p);
        QuadAlgebra twisted = twist_algebra(Q, ch, mu);
        CHECK(is_central(Q, omega));
        CHECK(is_central(twisted, twist_element(omega, ch, mu)));
    }
}

TEST_CASE("matrix algebras are strongly graded by clock and shift") {
    CHECK(torsor_strong_grading_check(1));
    CHECK(torsor_strong_grading_check(2));
    CHECK(torsor_strong_grading_check(3));
}

TEST_CASE("mu2-valued cohomology of the Klein group") {
    GradingGroup G{{2, 2}};
    std::vector<bool> swaps{false, false, true, true};

    std::array<std::array<int, 2>, 4> f{{{1, 1}, {-1, -1}, {1, 1}, {-1, -1}}};
    CohomologyReport rep = mu2_cohomology(G, swaps, f);
    CHECK(rep.z1_size == 4);
    CHECK(rep.b1_size == 2);
    CHECK(rep.h1_size == 2);
    CHECK(rep.is_cocycle);
    CHECK_FALSE(rep.is_coboundary);

    std::array<std::array<int, 2>, 4> zero{{{1, 1}, {1, 1}, {1, 1}, {1, 1}}};
    CohomologyReport rep0 = mu2_cohomology(G, swaps, zero);
    CHECK(rep0.is_cocycle);
    CHECK(rep0.is_coboundary);

    CHECK_THROWS_AS(mu2_cohomology(GradingGroup{{2}}, swaps, f),
                    UnsupportedGroup);
}
