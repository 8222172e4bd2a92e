#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skl/errors.hpp"
#include "skl/geometry.hpp"
#include "skl/linalg.hpp"

using namespace skl;

namespace {

Params defaults() { return make_params(Rat(2), Rat(3)); }

std::mt19937 rng(211);

ProjPoint random_point(const TowerPtr& t) {
    std::uniform_int_distribution<int> d(1, 40);
    return make_point(t, {FieldElem(t, Rat(d(rng))), FieldElem(t, Rat(d(rng))),
                          FieldElem(t, Rat(d(rng))),
                          FieldElem(t, Rat(d(rng)))});
}

std::vector<std::vector<FieldElem>> gram_rows(const Quadric& Q) {
    std::vector<std::vector<FieldElem>> m;
    for (int i = 0; i < 4; ++i)
        m.push_back({Q.gram[i][0], Q.gram[i][1], Q.gram[i][2], Q.gram[i][3]});
    return m;
}

}  // namespace

TEST_CASE("projective points") {
    TowerPtr q = Tower::rationals();
    ProjPoint p = make_point(q, {FieldElem(q, Rat(2)), FieldElem(q, Rat(4)),
                                 FieldElem(q), FieldElem(q, Rat(6))});
    ProjPoint p2 = make_point(q, {FieldElem(q, Rat(1)), FieldElem(q, Rat(2)),
                                  FieldElem(q), FieldElem(q, Rat(3))});
    CHECK(proj_equal(p, p2));
    CHECK(proj_equal(normalized(p), p2));
    CHECK_FALSE(proj_equal(p, random_point(q)));
    CHECK_THROWS_AS(
        make_point(q, {FieldElem(q), FieldElem(q), FieldElem(q), FieldElem(q)}),
        ZeroInput);
}

TEST_CASE("gamma action") {
    TowerPtr q = Tower::rationals();
    ProjPoint p = make_point(q, {FieldElem(q, Rat(3)), FieldElem(q, Rat(5)),
                                 FieldElem(q, Rat(7)), FieldElem(q, Rat(11))});
    ProjPoint g1 = gamma_act(1, p);
    CHECK(g1.c[0] == p.c[0]);
    CHECK(g1.c[1] == p.c[1]);
    CHECK(g1.c[2] == -p.c[2]);
    CHECK(g1.c[3] == -p.c[3]);

    SUBCASE("gamma1 gamma2 = gamma3 on 100 random points") {
        for (int k = 0; k < 100; ++k) {
            ProjPoint r = random_point(q);
            CHECK(proj_equal(gamma_act(1, gamma_act(2, r)), gamma_act(3, r)));
        }
    }

    SUBCASE("e0 is fixed by the whole group") {
        ProjPoint e0 = make_point(q, {FieldElem(q, Rat(1)), FieldElem(q),
                                      FieldElem(q), FieldElem(q)});
        for (int g = 0; g < 4; ++g) CHECK(proj_equal(gamma_act(g, e0), e0));
    }
}

TEST_CASE("on_curve and two_torsion") {
    Params p = defaults();
    CurveE E = curve_of(p);
    TwoTorsion tt = two_torsion(p);

    for (const ProjPoint* pt : {&tt.o, &tt.xi1, &tt.xi2, &tt.xi3}) {
        CHECK(on_curve(E, *pt));
        CHECK(pt->c[0].is_zero());
    }
    CHECK(coplanar(tt.o, tt.xi1, tt.xi2, tt.xi3));
    // pairwise distinct
    CHECK_FALSE(proj_equal(tt.o, tt.xi1));
    CHECK_FALSE(proj_equal(tt.o, tt.xi2));
    CHECK_FALSE(proj_equal(tt.o, tt.xi3));
    CHECK_FALSE(proj_equal(tt.xi1, tt.xi2));
    CHECK_FALSE(proj_equal(tt.xi1, tt.xi3));
    CHECK_FALSE(proj_equal(tt.xi2, tt.xi3));

    TowerPtr q = Tower::rationals();
    ProjPoint e0 = make_point(q, {FieldElem(q, Rat(1)), FieldElem(q),
                                  FieldElem(q), FieldElem(q)});
    CHECK_FALSE(on_curve(E, e0));
}

TEST_CASE("sample_point") {
    Params p = defaults();
    CurveE E = curve_of(p);

    SUBCASE("s = 1") {
        auto [pt, t] = sample_point(E, Rat(1));
        CHECK(pt.c[0] == FieldElem(t, Rat(1)));
        CHECK(pt.c[3] == FieldElem(t, Rat(1)));
        CHECK(pt.c[1] * pt.c[1] == FieldElem(t, Rat(-9, 5)));
        CHECK(pt.c[2] * pt.c[2] == FieldElem(t, Rat(-1, 5)));
        CHECK(on_curve(E, pt));
    }

    SUBCASE("s = 0") {
        auto [pt, t] = sample_point(E, Rat(0));
        CHECK(pt.c[1] * pt.c[1] == FieldElem(t, Rat(-8, 5)));
        CHECK(pt.c[2] * pt.c[2] == FieldElem(t, Rat(3, 5)));
        CHECK(on_curve(E, pt));
    }

    SUBCASE("at most one coordinate vanishes, and gamma/neg stay on E") {
        for (const Rat& s : {Rat(1), Rat(0), Rat(2), Rat(3), Rat(1, 2)}) {
            auto [pt, t] = sample_point(E, s);
            int zeros = 0;
            for (int j = 0; j < 4; ++j) zeros += pt.c[j].is_zero();
            CHECK(zeros <= 1);
            CHECK(on_curve(E, pt));
            CHECK(on_curve(E, neg(pt)));
            for (int g = 1; g < 4; ++g) CHECK(on_curve(E, gamma_act(g, pt)));
        }
    }
}

TEST_CASE("neg is an involution fixing the x0 = 0 slice of E") {
    Params p = defaults();
    CurveE E = curve_of(p);
    auto [pt, t] = sample_point(E, Rat(2));
    CHECK(proj_equal(neg(neg(pt)), pt));
    CHECK_FALSE(proj_equal(neg(pt), pt));

    auto [pt0, t0] = sample_point(E, Rat(0));
    CHECK(proj_equal(neg(pt0), pt0));

    TwoTorsion tt = two_torsion(p);
    CHECK(proj_equal(neg(tt.o), tt.o));
}

TEST_CASE("singular quadrics") {
    Params p = defaults();
    DerivedConstants d = derived_constants(p);
    std::array<Quadric, 4> Qs = singular_quadrics(p);

    CHECK(Qs[0].gram[0][0].is_zero());
    CHECK(Qs[0].gram[1][1] == d.mu);
    CHECK(Qs[0].gram[2][2] == d.nu);
    CHECK(Qs[0].gram[3][3].rat() == 1);

    for (int i = 0; i < 4; ++i) {
        CHECK(rank_dense(gram_rows(Qs[i])) == 3);
        // the singular direction is the i-th coordinate point
        TowerPtr q = Tower::rationals();
        std::array<FieldElem, 4> e{FieldElem(q), FieldElem(q), FieldElem(q),
                                   FieldElem(q)};
        e[i] = FieldElem(q, Rat(1));
        ProjPoint ei = make_point(q, e);
        for (int r = 0; r < 4; ++r) {
            FieldElem dot(q);
            for (int c = 0; c < 4; ++c) dot += Qs[i].gram[r][c] * ei.c[c];
            CHECK(dot.is_zero());
        }
    }

    SUBCASE("vanishing on sampled points of E") {
        CurveE E = curve_of(p);
        for (const Rat& s : {Rat(1), Rat(0), Rat(3)}) {
            auto [pt, t] = sample_point(E, s);
            for (int i = 0; i < 4; ++i)
                CHECK(quadric_eval(Qs[i], pt).is_zero());
        }
    }
}

TEST_CASE("coplanarity") {
    Params p = defaults();
    CurveE E = curve_of(p);
    auto [pt, t1] = sample_point(E, Rat(1));
    auto [qt, t] = sample_point_over(E, Rat(2), t1);

    CHECK(coplanar(neg(pt), gamma_act(1, pt), neg(qt), gamma_act(1, qt)));

    SUBCASE("four random points are not") {
        TowerPtr q = Tower::rationals();
        CHECK_FALSE(coplanar(random_point(q), random_point(q),
                             random_point(q), random_point(q)));
    }
}

TEST_CASE("line_on_quadric") {
    Params p = defaults();
    CurveE E = curve_of(p);
    std::array<Quadric, 4> Qs = singular_quadrics(p);

    SUBCASE("secant through neg(p) and gamma_i(p) lies on Q_i") {
        for (const Rat& s : {Rat(1), Rat(2), Rat(3), Rat(1, 2), Rat(4)}) {
            auto [pt, t] = sample_point(E, s);
            for (int i = 1; i < 4; ++i)
                CHECK(line_on_quadric(neg(pt), gamma_act(i, pt), Qs[i]));
            CHECK(line_on_quadric(neg(pt), pt, Qs[0]));
        }
    }

    SUBCASE("wrong pairings fail") {
        auto [pt, t] = sample_point(E, Rat(1));
        CHECK_FALSE(line_on_quadric(pt, gamma_act(1, pt), Qs[0]));
        CHECK_FALSE(line_on_quadric(neg(pt), gamma_act(1, pt), Qs[2]));
    }

    SUBCASE("degenerate line") {
        auto [pt0, t0] = sample_point(E, Rat(0));
        // x0 = 0, so neg(p) = p projectively
        CHECK_THROWS_AS(line_on_quadric(neg(pt0), pt0, Qs[0]),
                        DegenerateLine);
    }
}

TEST_CASE("translation evidence for five sampled pairs") {
    Params p = defaults();
    CurveE E = curve_of(p);
    std::array<Quadric, 4> Qs = singular_quadrics(p);
    const Rat pairs[5][2] = {{Rat(1), Rat(2)},
                             {Rat(2), Rat(3)},
                             {Rat(3), Rat(1, 2)},
                             {Rat(1, 2), Rat(4)},
                             {Rat(4), Rat(1)}};
    for (const auto& pr : pairs) {
        auto [pt, t1] = sample_point(E, pr[0]);
        auto [qt, t] = sample_point_over(E, pr[1], t1);
        for (int i = 1; i < 4; ++i) {
            CHECK(line_on_quadric(neg(pt), gamma_act(i, pt), Qs[i]));
            CHECK(coplanar(neg(pt), gamma_act(i, pt), neg(qt),
                           gamma_act(i, qt)));
        }
    }
}

TEST_CASE("branch cross-ratio") {
    CHECK(branch_cross_ratio_check(defaults()));
    CHECK(branch_cross_ratio_check(make_params(Rat(3), Rat(5))));
}

TEST_CASE("weierstrass group law") {
    Params p = defaults();
    TowerPtr q = Tower::rationals();
    FieldElem lam(q, derived_constants(p).lambda.rat());
    WeierstrassCurve W{lam};
    FieldElem zero(q), one(q, Rat(1));
    std::array<FieldElem, 3> O{zero, one, zero};
    std::array<FieldElem, 3> T1{zero, zero, one};
    std::array<FieldElem, 3> T2{one, zero, one};
    std::array<FieldElem, 3> T3{lam, zero, one};

    auto same = [](const std::array<FieldElem, 3>& a,
                   const std::array<FieldElem, 3>& b) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (a[i] * b[j] != a[j] * b[i]) return false;
        return true;
    };

    CHECK(same(weierstrass_add(W, T1, O), T1));
    CHECK(same(weierstrass_add(W, O, T2), T2));
    CHECK(same(weierstrass_add(W, T1, T1), O));
    CHECK(same(weierstrass_add(W, T2, T2), O));
    CHECK(same(weierstrass_add(W, T3, T3), O));
    CHECK(same(weierstrass_add(W, T2, T3), T1));
    CHECK(same(weierstrass_add(W, T1, T2), T3));
    CHECK(same(weierstrass_add(W, T1, T3), T2));

    SUBCASE("a non-2-torsion point does not double to the identity") {
        // x = 2 gives y^2 = 2 * 1 * (2 - lambda)
        FieldElem x(q, Rat(2));
        auto [t, y] = sqrt_adjoin(q, x * (x - one) * (x - lam));
        std::array<FieldElem, 3> P{embed(x, t), y, FieldElem(t, Rat(1))};
        std::array<FieldElem, 3> Pneg{P[0], -P[1], P[2]};
        auto dbl = weierstrass_add(W, P, P);
        CHECK_FALSE(dbl[2].is_zero());
        // P + (-P) = identity, and the double stays on the curve
        auto s = weierstrass_add(W, P, Pneg);
        CHECK(s[2].is_zero());
        CHECK(dbl[1] * dbl[1] * dbl[2] ==
              dbl[0] * (dbl[0] - dbl[2]) * (dbl[0] - embed(lam, t) * dbl[2]));
    }

    SUBCASE("off-curve input is rejected") {
        CHECK_THROWS_AS(weierstrass_add(W, {one, one, one}, O), NotOnCurve);
    }
}
