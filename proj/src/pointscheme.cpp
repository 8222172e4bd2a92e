#include "skl/pointscheme.hpp"

#include <map>
#include <random>

#include "skl/errors.hpp"
#include "skl/linalg.hpp"

namespace skl {

namespace {

// index of each degree-4 exponent vector, lexicographic
const std::map<std::array<int, 4>, int>& quartic_index() {
    static const std::map<std::array<int, 4>, int> table = [] {
        std::map<std::array<int, 4>, int> m;
        int idx = 0;
        for (int e0 = 0; e0 <= 4; ++e0)
            for (int e1 = 0; e0 + e1 <= 4; ++e1)
                for (int e2 = 0; e0 + e1 + e2 <= 4; ++e2)
                    m.emplace(std::array<int, 4>{e0, e1, e2,
                                                 4 - e0 - e1 - e2},
                              idx++);
        return m;
    }();
    return table;
}

SparseRow quartic_row(const MultiPoly& p) {
    const auto& index = quartic_index();
    SparseRow row;
    for (const auto& [m, c] : p.terms) row.emplace_back(index.at(m), c);
    return row;
}

MultiPoly det_poly(const std::vector<std::vector<MultiPoly>>& m,
                   std::vector<int> rows, std::vector<int> cols,
                   const TowerPtr& t) {
    if (rows.size() == 1) return m[rows[0]][cols[0]];
    MultiPoly acc = poly_zero(t);
    std::vector<int> sub(rows.begin() + 1, rows.end());
    for (size_t j = 0; j < cols.size(); ++j) {
        std::vector<int> rest;
        for (size_t k = 0; k < cols.size(); ++k)
            if (k != j) rest.push_back(cols[k]);
        MultiPoly term = m[rows[0]][cols[j]] * det_poly(m, sub, rest, t);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

std::vector<FieldElem> coords_of(const ProjPoint& p) {
    return {p.c[0], p.c[1], p.c[2], p.c[3]};
}

bool kernel_matches(const std::vector<FieldElem>& k, const ProjPoint& v) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (k[i] * v.c[j] != k[j] * v.c[i]) return false;
    return true;
}

}  // namespace

std::vector<ProjPoint> PointFamily::all() const {
    std::vector<ProjPoint> out;
    for (const auto& g : groups)
        for (const auto& p : g) out.push_back(p);
    return out;
}

PointFamily build_point_family(const Params& p) {
    const TowerPtr& t = p.tower;
    FieldElem one(t, Rat(1)), zero(t);
    PointFamily f;
    f.tower = t;
    for (int j = 0; j < 4; ++j) {
        std::array<FieldElem, 4> e{zero, zero, zero, zero};
        e[j] = one;
        f.groups[0][j] = make_point(t, e);
    }
    std::array<ProjPoint, 4> tops;
    tops[0] = make_point(t, {one, one, one, one});
    tops[1] = make_point(t, {p.b * p.c, -p.i, -p.i * p.b, -p.c});
    tops[2] = make_point(t, {p.a * p.c, -p.a, -p.i, -p.i * p.c});
    tops[3] = make_point(t, {p.a * p.b, -p.i * p.a, -p.b, -p.i});
    for (int g = 0; g < 4; ++g) {
        f.groups[g + 1][0] = tops[g];
        for (int r = 1; r < 4; ++r)
            f.groups[g + 1][r] = gamma_act(r, tops[g]);
    }
    return f;
}

ProjPoint theta(const PointFamily& f, const ProjPoint& u) {
    for (int g = 0; g < 5; ++g)
        for (const ProjPoint& member : f.groups[g])
            if (proj_equal(member, u))
                return g <= 1 ? u : gamma_act(g - 1, u);
    throw NotInFamily("theta: " + point_str(u));
}

PointSchemeReport verify_point_scheme(const QuadAlgebra& A,
                                      const PointFamily& f) {
    RelationMatrix M = multilinearize(A);
    PointSchemeReport rep;
    for (const ProjPoint& u : f.all()) {
        ProjPoint tu = theta(f, u);
        auto Mu = evaluate(M, coords_of(u));
        if (rank_dense(Mu) != 3)
            throw VerificationFailed("rank != 3 at " + point_str(u));
        auto ker = nullspace_dense(Mu, f.tower);
        if (ker.size() != 1 || !kernel_matches(ker[0], tu))
            throw VerificationFailed("kernel mismatch at " + point_str(u));
        // residual M(u) theta(u) and the transposed pair
        for (const auto& row : Mu) {
            FieldElem dot(f.tower);
            for (int j = 0; j < 4; ++j) dot += row[j] * tu.c[j];
            if (!dot.is_zero())
                throw VerificationFailed("residual at " + point_str(u));
        }
        auto Mtu = evaluate(M, coords_of(tu));
        for (const auto& row : Mtu) {
            FieldElem dot(f.tower);
            for (int j = 0; j < 4; ++j) dot += row[j] * u.c[j];
            if (!dot.is_zero())
                throw VerificationFailed("transposed residual at " +
                                         point_str(u));
        }
        ++rep.rank3_matches;
    }

    std::mt19937 rng(411);
    std::uniform_int_distribution<int> d(2, 97);
    TowerPtr q = Tower::rationals();
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<FieldElem> v;
        for (int j = 0; j < 4; ++j) v.emplace_back(q, Rat(d(rng)));
        if (rank_dense(evaluate(M, v)) != 4)
            throw VerificationFailed("degenerate rank at a random point");
        ++rep.random_rank4;
    }
    rep.ok = true;
    return rep;
}

std::vector<MultiPoly> relation_minors(const QuadAlgebra& A) {
    RelationMatrix M = multilinearize(A);
    const TowerPtr& t = A.tower();
    std::vector<std::vector<MultiPoly>> entries(
        M.rows, std::vector<MultiPoly>(M.cols, poly_zero(t)));
    for (int k = 0; k < M.rows; ++k)
        for (int j = 0; j < M.cols; ++j)
            for (int i = 0; i < 4; ++i)
                entries[k][j] =
                    entries[k][j] + poly_scale(M.coeff[k][j][i], poly_var(t, i));

    FieldElem half(t, Rat(1, 2));
    std::vector<MultiPoly> minors;
    for (int a = 0; a < M.rows; ++a)
        for (int b = a + 1; b < M.rows; ++b)
            for (int c = b + 1; c < M.rows; ++c)
                for (int d = c + 1; d < M.rows; ++d)
                    minors.push_back(poly_scale(
                        half,
                        det_poly(entries, {a, b, c, d}, {0, 1, 2, 3}, t)));
    return minors;
}

std::vector<MultiPoly> factored_quartics(const Params& p) {
    TowerPtr t = Tower::rationals();
    const Rat al = p.alpha_r, be = p.beta_r, ga = p.gamma_r;
    auto sq = [&](int j) { return poly_var(t, j) * poly_var(t, j); };
    auto pr = [&](int j, int k) { return poly_var(t, j) * poly_var(t, k); };
    auto cs = [&](const Rat& r) { return FieldElem(t, r); };
    auto diag = [&](Rat d0, Rat d1, Rat d2, Rat d3) {
        return poly_scale(cs(d0), sq(0)) + poly_scale(cs(d1), sq(1)) +
               poly_scale(cs(d2), sq(2)) + poly_scale(cs(d3), sq(3));
    };

    MultiPoly S1 = diag(1, be * ga, al * ga, al * be);
    MultiPoly S2 = diag(1, -1, -al, al);
    MultiPoly S3 = diag(1, be, -1, -be);
    MultiPoly S4 = diag(1, -ga, ga, -1);

    std::vector<MultiPoly> out;
    out.push_back((pr(2, 3) - pr(0, 1)) * S1);
    out.push_back((pr(1, 3) - pr(0, 2)) * S1);
    out.push_back((pr(1, 2) - pr(0, 3)) * S1);
    out.push_back((pr(0, 1) + pr(2, 3)) * S2);
    out.push_back((pr(0, 2) + poly_scale(cs(be), pr(1, 3))) * S2);
    out.push_back((pr(0, 3) - poly_scale(cs(ga), pr(1, 2))) * S2);
    out.push_back((pr(0, 1) - poly_scale(cs(al), pr(2, 3))) * S3);
    out.push_back((pr(0, 2) + pr(1, 3)) * S3);
    out.push_back((pr(0, 3) + poly_scale(cs(ga), pr(1, 2))) * S3);
    out.push_back((pr(0, 1) + poly_scale(cs(al), pr(2, 3))) * S4);
    out.push_back((pr(0, 2) - poly_scale(cs(be), pr(1, 3))) * S4);
    out.push_back((pr(0, 3) + pr(1, 2)) * S4);

    // three combinations of squared monomials
    auto sqsq = [&](const Rat& r, int j, int k) {
        return poly_scale(cs(r), sq(j) * sq(k));
    };
    out.push_back(sqsq(al * be, 1, 3) + sqsq(-al * be, 2, 3) +
                  sqsq(be, 0, 1) + sqsq(-be, 1, 3) + sqsq(al, 0, 2) +
                  sqsq(-al, 2, 3) + sqsq(1, 0, 1) + sqsq(-1, 0, 2));
    out.push_back(sqsq(be * ga, 1, 2) + sqsq(-be * ga, 1, 3) +
                  sqsq(ga, 0, 2) + sqsq(-ga, 1, 2) + sqsq(be, 0, 3) +
                  sqsq(-be, 1, 3) + sqsq(1, 0, 2) + sqsq(-1, 0, 3));
    out.push_back(sqsq(al * ga, 1, 2) + sqsq(-al * ga, 2, 3) +
                  sqsq(al, 2, 3) + sqsq(-ga, 0, 1) + sqsq(ga, 1, 2) +
                  sqsq(-al, 0, 3) + sqsq(1, 0, 1) + sqsq(-1, 0, 3));
    return out;
}

bool minors_check(const QuadAlgebra& A, const Params& p,
                  const PointFamily& f) {
    std::vector<MultiPoly> minors = relation_minors(A);
    for (const MultiPoly& m : minors)
        for (const ProjPoint& u : f.all())
            if (!poly_eval(m, u.c).is_zero())
                throw VerificationFailed("minor nonzero at " + point_str(u));

    std::vector<SparseRow> rows1, rows2;
    for (const MultiPoly& m : minors) rows1.push_back(quartic_row(m));
    for (const MultiPoly& m : factored_quartics(p))
        rows2.push_back(quartic_row(m));
    Subspace span1(35, rows1), span2(35, rows2);
    if (!span1.same_span(span2))
        throw SpanMismatch("minor span differs from the factored list");
    return true;
}

bool four_quadrics_independence(const Params& p) {
    TowerPtr t = Tower::rationals();
    const Rat al = p.alpha_r, be = p.beta_r, ga = p.gamma_r;
    const Rat rows[4][4] = {{1, be * ga, al * ga, al * be},
                            {1, -1, -al, al},
                            {1, be, -1, -be},
                            {1, -ga, ga, -1}};
    std::vector<std::vector<FieldElem>> m;
    for (const auto& r : rows) {
        std::vector<FieldElem> row;
        for (const Rat& x : r) row.emplace_back(t, x);
        m.push_back(row);
    }
    Rat s = 1 + al * be + be * ga + ga * al;
    if (s != (1 + al) * (1 + be) * (1 + ga)) return false;
    if (det_dense(m).rat() != -s * s) return false;
    if (s == 0) return false;
    return rank_dense(std::move(m)) == 4;  // spans all four squares
}

ProjPoint sigma(const QuadAlgebra& A, const ProjPoint& pt) {
    RelationMatrix M = multilinearize(A);
    auto ker = nullspace_dense(evaluate(M, coords_of(pt)), pt.tower());
    if (ker.size() != 1)
        throw RankDegenerate("sigma: kernel dimension " +
                             std::to_string(ker.size()) + " at " +
                             point_str(pt));
    return make_point(pt.tower(), {ker[0][0], ker[0][1], ker[0][2],
                                   ker[0][3]});
}

}  // namespace skl
