#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "skl/errors.hpp"
#include "skl/tower.hpp"

using namespace skl;

namespace {

FieldElem fe(TowerPtr t, long num, long den = 1) {
    return FieldElem(std::move(t), Rat(num, den));
}

TowerPtr quad_ext(const TowerPtr& t, const std::string& label, Rat s) {
    return adjoin_root(t, label, {FieldElem(t, -s), FieldElem(t, Rat(0))});
}

// Q(i, sqrt2, sqrt3) and then sqrt(-5/7) on top: the scalar field used by
// the default algebra parameters.
TowerPtr base8() {
    TowerPtr t = quad_ext(Tower::rationals(), "i", Rat(-1));
    t = quad_ext(t, "sqrt2", Rat(2));
    t = quad_ext(t, "sqrt3", Rat(3));
    return t;
}

std::mt19937 rng(20260823);

FieldElem random_elem(const TowerPtr& t) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rat> c(t->dim());
    for (auto& x : c) x = Rat(num(rng), den(rng));
    return FieldElem(t, std::move(c));
}

}  // namespace

TEST_CASE("single quadratic adjunction gives a dimension-2 tower") {
    TowerPtr t = quad_ext(Tower::rationals(), "i", Rat(-1));
    CHECK(t->dim() == 2);
    FieldElem i = FieldElem::generator(t, 1);
    CHECK(i * i == fe(t, -1));
}

TEST_CASE("independent surds stack to dimension 4") {
    TowerPtr t = quad_ext(Tower::rationals(), "sqrt2", Rat(2));
    t = quad_ext(t, "sqrt3", Rat(3));
    CHECK(t->dim() == 4);
    FieldElem r2 = FieldElem::generator(t, 1);
    FieldElem r3 = FieldElem::generator(t, 2);
    CHECK(r2 * r2 == fe(t, 2));
    CHECK(r3 * r3 == fe(t, 3));
    CHECK(r2 * r3 == r3 * r2);
}

TEST_CASE("sqrt(-5/7) is not in Q(i, sqrt2, sqrt3)") {
    // In a multiquadratic field every square root of a rational is a
    // rational multiple of a product of the adjoined roots, so it is
    // enough to scan the eight products of {-1, 2, 3}.
    Rat target(-5, 7);
    for (Rat v : {Rat(1), Rat(-1), Rat(2), Rat(3), Rat(-2), Rat(-3), Rat(6),
                  Rat(-6)}) {
        Rat q = target / v;
        bool is_square =
            q > 0 && mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
            mpz_perfect_square_p(q.get_den().get_mpz_t());
        CHECK_FALSE(is_square);
    }

    TowerPtr t = quad_ext(base8(), "c", Rat(-5, 7));
    CHECK(t->dim() == 16);
    FieldElem c = FieldElem::generator(t, 4);
    CHECK(c * c == FieldElem(t, Rat(-5, 7)));
    CHECK(c * c.inv() == fe(t, 1));
}

TEST_CASE("inverses") {
    TowerPtr q = Tower::rationals();
    CHECK(fe(q, 2).inv() == fe(q, 1, 2));

    TowerPtr ti = quad_ext(q, "i", Rat(-1));
    FieldElem i = FieldElem::generator(ti, 1);
    CHECK(i.inv() == -i);

    TowerPtr t2 = quad_ext(q, "sqrt2", Rat(2));
    FieldElem r2 = FieldElem::generator(t2, 1);
    CHECK((fe(t2, 1) + r2).inv() == r2 - fe(t2, 1));

    CHECK_THROWS_AS(FieldElem(q).inv(), ZeroInput);
}

TEST_CASE("inverting a zero divisor is detected, not mis-answered") {
    TowerPtr t = quad_ext(Tower::rationals(), "r", Rat(4));  // x^2 - 4
    FieldElem x = FieldElem::generator(t, 1);
    CHECK_THROWS_AS((x - fe(t, 2)).inv(), ZeroDivisor);
}

TEST_CASE("sqrt_adjoin") {
    TowerPtr q = Tower::rationals();
    auto [t2, r2] = sqrt_adjoin(q, fe(q, 2));
    CHECK(t2->dim() == 2);
    CHECK(r2 * r2 == fe(t2, 2));

    SUBCASE("rational perfect squares need no adjunction") {
        auto [t4, two] = sqrt_adjoin(t2, fe(t2, 4));
        CHECK(t4->same_as(*t2));
        CHECK(two == fe(t2, 2));
        auto [tq, half] = sqrt_adjoin(q, fe(q, 9, 4));
        CHECK(tq->same_as(*q));
        CHECK(half == fe(q, 3, 2));
    }

    SUBCASE("zero returns zero without adjunction") {
        auto [tz, z] = sqrt_adjoin(t2, FieldElem(t2));
        CHECK(tz->same_as(*t2));
        CHECK(z.is_zero());
    }

    SUBCASE("nu - 1 at the default parameters") {
        auto [t, s] = sqrt_adjoin(q, fe(q, -8, 7));
        CHECK(t->dim() == 2);
        CHECK(s * s == fe(t, -8, 7));
    }
}

TEST_CASE("embedding is a ring homomorphism") {
    TowerPtr small = quad_ext(Tower::rationals(), "i", Rat(-1));
    TowerPtr big = quad_ext(small, "sqrt2", Rat(2));
    for (int k = 0; k < 50; ++k) {
        FieldElem a = random_elem(small);
        FieldElem b = random_elem(small);
        CHECK(embed(a * b, big) == embed(a, big) * embed(b, big));
        CHECK(embed(a + b, big) == embed(a, big) + embed(b, big));
    }
}

TEST_CASE("field axioms on random elements of the degree-16 tower") {
    TowerPtr t = quad_ext(base8(), "c", Rat(-5, 7));
    REQUIRE(t->dim() == 16);
    FieldElem one = fe(t, 1);
    for (int k = 0; k < 1000; ++k) {
        FieldElem x = random_elem(t);
        if (x.is_zero()) continue;
        FieldElem y = random_elem(t);
        FieldElem z = random_elem(t);
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * x.inv() == one);
    }
}

TEST_CASE("level tracking and printing") {
    TowerPtr t = quad_ext(base8(), "c", Rat(-5, 7));
    FieldElem i = FieldElem::generator(t, 1);
    FieldElem r2 = FieldElem::generator(t, 2);
    CHECK(i.level() == 1);
    CHECK(r2.level() == 2);
    CHECK((i * r2).level() == 2);
    CHECK(fe(t, 7).level() == 0);
    CHECK(fe(t, 7).rat() == 7);
    CHECK((fe(t, 1) + i).str() == "1 + i");
    CHECK((r2 - i).str() == "-i + sqrt2");
}
