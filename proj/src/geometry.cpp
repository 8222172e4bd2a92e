#include "skl/geometry.hpp"

#include <algorithm>

#include "skl/errors.hpp"
#include "skl/linalg.hpp"

namespace skl {

ProjPoint make_point(const TowerPtr& t, std::array<FieldElem, 4> coords) {
    ProjPoint p;
    bool all_zero = true;
    for (int j = 0; j < 4; ++j) {
        p.c[j] = embed(coords[j], t);
        all_zero = all_zero && p.c[j].is_zero();
    }
    if (all_zero) throw ZeroInput("make_point: all coordinates zero");
    return p;
}

bool proj_equal(const ProjPoint& p, const ProjPoint& q) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p.c[i] * q.c[j] != p.c[j] * q.c[i]) return false;
    return true;
}

ProjPoint normalized(const ProjPoint& p) {
    for (int j = 0; j < 4; ++j) {
        if (p.c[j].is_zero()) continue;
        FieldElem inv = p.c[j].inv();
        ProjPoint out = p;
        for (int k = 0; k < 4; ++k) out.c[k] = inv * p.c[k];
        return out;
    }
    throw ZeroInput("normalized: zero point");
}

std::string point_str(const ProjPoint& p) {
    std::string s = "(";
    for (int j = 0; j < 4; ++j)
        s += p.c[j].str() + (j < 3 ? ", " : ")");
    return s;
}

MultiPoly poly_zero(const TowerPtr& t) { return MultiPoly{t, {}}; }

MultiPoly poly_var(const TowerPtr& t, int j) {
    MultiPoly p{t, {}};
    std::array<int, 4> mono{0, 0, 0, 0};
    mono[j] = 1;
    p.terms.emplace(mono, FieldElem(t, Rat(1)));
    return p;
}

MultiPoly poly_const(const FieldElem& c) {
    MultiPoly p{c.tower(), {}};
    if (!c.is_zero()) p.terms.emplace(std::array<int, 4>{0, 0, 0, 0}, c);
    return p;
}

void poly_add_term(MultiPoly& p, const std::array<int, 4>& mono,
                   const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = p.terms.find(mono);
    if (it == p.terms.end()) {
        p.terms.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) p.terms.erase(it);
    }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms) poly_add_term(out, m, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out = a;
    for (const auto& [m, c] : b.terms) poly_add_term(out, m, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out{a.tower, {}};
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            std::array<int, 4> m;
            for (int j = 0; j < 4; ++j) m[j] = ma[j] + mb[j];
            poly_add_term(out, m, ca * cb);
        }
    return out;
}

MultiPoly poly_scale(const FieldElem& c, const MultiPoly& a) {
    MultiPoly out{a.tower, {}};
    for (const auto& [m, v] : a.terms) poly_add_term(out, m, c * v);
    return out;
}

FieldElem poly_eval(const MultiPoly& p, const std::array<FieldElem, 4>& x) {
    FieldElem acc;
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        FieldElem term = c;
        for (int j = 0; j < 4; ++j)
            for (int e = 0; e < m[j]; ++e) term = term * x[j];
        if (first) {
            acc = term;
            first = false;
        } else {
            acc += term;
        }
    }
    if (first) return FieldElem(p.tower);
    return acc;
}

Quadric diagonal_quadric(const TowerPtr& t,
                         const std::array<FieldElem, 4>& d) {
    Quadric Q;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            Q.gram[i][j] = (i == j) ? embed(d[i], t) : FieldElem(t);
    return Q;
}

FieldElem quadric_eval(const Quadric& Q, const ProjPoint& p) {
    return quadric_pair(Q, p, p);
}

FieldElem quadric_pair(const Quadric& Q, const ProjPoint& p,
                       const ProjPoint& q) {
    FieldElem s = Q.gram[0][0] * p.c[0] * q.c[0];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == 0 && j == 0) continue;
            s += Q.gram[i][j] * p.c[i] * q.c[j];
        }
    return s;
}

CurveE curve_of(const Params& p) {
    TowerPtr q = Tower::rationals();
    CurveE E{p, poly_zero(q), poly_zero(q)};
    for (int j = 0; j < 4; ++j)
        E.q1 = E.q1 + poly_var(q, j) * poly_var(q, j);
    const Rat coeffs[3] = {1 - p.gamma_r, 1 + p.alpha_r * p.gamma_r,
                           1 + p.alpha_r};
    for (int j = 1; j < 4; ++j)
        E.q2 = E.q2 + poly_scale(FieldElem(q, coeffs[j - 1]),
                                 poly_var(q, j) * poly_var(q, j));
    return E;
}

ProjPoint gamma_act(int g, const ProjPoint& p) {
    ProjPoint out = p;
    if (g == 0) return out;
    for (int j = 1; j < 4; ++j)
        if (j != g) out.c[j] = -p.c[j];
    return out;
}

bool on_curve(const CurveE& E, const ProjPoint& p) {
    return poly_eval(E.q1, p.c).is_zero() && poly_eval(E.q2, p.c).is_zero();
}

std::pair<ProjPoint, TowerPtr> sample_point_over(const CurveE& E, const Rat& s,
                                                 const TowerPtr& base) {
    // At x0 = s, x3 = 1 the two quadrics are linear in (x1^2, x2^2).
    const Rat c1 = 1 - E.params.gamma_r;
    const Rat c2 = 1 + E.params.alpha_r * E.params.gamma_r;
    const Rat c3 = 1 + E.params.alpha_r;
    // u + v = -(s^2 + 1), c1 u + c2 v = -c3
    Rat det = c2 - c1;
    if (det == 0) throw DegenerateSample("sample_point: singular system");
    Rat u = (-(s * s + 1) * c2 + c3) / det;
    Rat v = -(s * s + 1) - u;
    if (u == 0 || v == 0)
        throw DegenerateSample("sample_point: vanishing square");

    auto [tu, x1] = sqrt_adjoin(base, FieldElem(base, u));
    auto [tv, x2] = sqrt_adjoin(tu, FieldElem(tu, v));
    ProjPoint p = make_point(
        tv, {FieldElem(tv, s), embed(x1, tv), embed(x2, tv),
             FieldElem(tv, Rat(1))});
    return {p, tv};
}

std::pair<ProjPoint, TowerPtr> sample_point(const CurveE& E, const Rat& s) {
    TowerPtr t = adjoin_root(Tower::rationals(), "i",
                             {FieldElem(Tower::rationals(), Rat(1)),
                              FieldElem(Tower::rationals(), Rat(0))});
    return sample_point_over(E, s, t);
}

ProjPoint neg(const ProjPoint& p) {
    ProjPoint out = p;
    out.c[0] = -p.c[0];
    return out;
}

TwoTorsion two_torsion(const Params& p) {
    DerivedConstants d = derived_constants(p);
    Rat mu = d.mu.rat(), nu = d.nu.rat();
    TowerPtr t = Tower::rationals();
    auto [t1, r1] = sqrt_adjoin(t, FieldElem(t, nu - 1));
    auto [t2, r2] = sqrt_adjoin(t1, FieldElem(t1, 1 - mu));
    auto [t3, r3] = sqrt_adjoin(t2, FieldElem(t2, mu - nu));
    TwoTorsion tt;
    tt.tower = t3;
    tt.o = make_point(t3, {FieldElem(t3), embed(r1, t3), embed(r2, t3),
                           embed(r3, t3)});
    tt.xi1 = gamma_act(1, tt.o);
    tt.xi2 = gamma_act(2, tt.o);
    tt.xi3 = gamma_act(3, tt.o);
    return tt;
}

std::array<Quadric, 4> singular_quadrics(const Params& p) {
    DerivedConstants d = derived_constants(p);
    Rat mu = d.mu.rat(), nu = d.nu.rat();
    TowerPtr q = Tower::rationals();
    auto diag = [&](Rat a, Rat b, Rat c, Rat e) {
        return diagonal_quadric(q, {FieldElem(q, a), FieldElem(q, b),
                                    FieldElem(q, c), FieldElem(q, e)});
    };
    std::array<Quadric, 4> out{
        diag(0, mu, nu, 1),
        diag(mu, 0, mu - nu, mu - 1),
        diag(nu, nu - mu, 0, nu - 1),
        diag(1, 1 - mu, 1 - nu, 0),
    };

    // Each member: in the pencil of E's two forms, rank 3, kernel e_i.
    const Rat pencil[2][4] = {
        {1, 1, 1, 1},
        {0, 1 - p.gamma_r, 1 + p.alpha_r * p.gamma_r, 1 + p.alpha_r}};
    for (int i = 0; i < 4; ++i) {
        std::array<Rat, 4> dg;
        for (int j = 0; j < 4; ++j) dg[j] = out[i].gram[j][j].rat();
        // two unknown pencil coefficients from two coordinates
        Rat a = dg[0];  // pencil[1][0] = 0
        Rat b = (dg[1] - a) / pencil[1][1];
        for (int j = 2; j < 4; ++j)
            if (dg[j] != a * pencil[0][j] + b * pencil[1][j])
                throw VerificationFailed("singular quadric not in pencil");
        int zeros = 0;
        for (int j = 0; j < 4; ++j) zeros += (dg[j] == 0);
        if (zeros != 1 || dg[i] != 0)
            throw VerificationFailed("singular quadric rank/kernel");
    }
    return out;
}

bool coplanar(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
              const ProjPoint& p4) {
    std::vector<std::vector<FieldElem>> m;
    for (const ProjPoint* p : {&p1, &p2, &p3, &p4})
        m.push_back({p->c[0], p->c[1], p->c[2], p->c[3]});
    return det_dense(std::move(m)).is_zero();
}

bool line_on_quadric(const ProjPoint& p, const ProjPoint& q,
                     const Quadric& Q) {
    if (proj_equal(p, q)) throw DegenerateLine("line_on_quadric: p = q");
    ProjPoint mid;
    for (int j = 0; j < 4; ++j) mid.c[j] = p.c[j] + q.c[j];
    return quadric_eval(Q, p).is_zero() && quadric_eval(Q, q).is_zero() &&
           quadric_eval(Q, mid).is_zero();
}

bool branch_cross_ratio_check(const Params& p) {
    DerivedConstants d = derived_constants(p);
    Rat mu = d.mu.rat(), nu = d.nu.rat(), lambda = d.lambda.rat();
    TwoTorsion tt = two_torsion(p);
    auto [ta, s_nn] = sqrt_adjoin(tt.tower, FieldElem(tt.tower, -nu));
    auto [t, s_mu] = sqrt_adjoin(ta, FieldElem(ta, mu));
    FieldElem snn = embed(s_nn, t), smu = embed(s_mu, t);

    // h(x0,x1,x2,x3) = (sqrt(-nu) x2 + sqrt(mu) x1 : x3) on P^1
    std::array<std::pair<FieldElem, FieldElem>, 4> z;
    const ProjPoint* pts[4] = {&tt.o, &tt.xi1, &tt.xi2, &tt.xi3};
    for (int k = 0; k < 4; ++k)
        z[k] = {snn * embed(pts[k]->c[2], t) + smu * embed(pts[k]->c[1], t),
                embed(pts[k]->c[3], t)};

    auto cross = [&](int i, int j) {
        return z[i].first * z[j].second - z[j].first * z[i].second;
    };
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (cross(i, j).is_zero()) return false;  // images must differ

    // Closed form: the images are (+-r1 +- r2 : r3).
    FieldElem r1 = snn * embed(tt.o.c[2], t);
    FieldElem r2 = smu * embed(tt.o.c[1], t);
    FieldElem r3 = embed(tt.o.c[3], t);
    if (r1 * r1 != FieldElem(t, mu * nu - nu)) return false;
    if (r2 * r2 != FieldElem(t, mu * nu - mu)) return false;
    if (r3 * r3 != FieldElem(t, mu - nu)) return false;
    for (int k = 0; k < 4; ++k) {
        bool matched = false;
        for (int e1 = -1; e1 <= 1 && !matched; e1 += 2)
            for (int e2 = -1; e2 <= 1 && !matched; e2 += 2) {
                FieldElem num = Rat(e1) * r1 + Rat(e2) * r2;
                matched = (z[k].first * r3 == num * z[k].second);
            }
        if (!matched) return false;
    }

    // Cross-ratio orbit comparison as sets.
    FieldElem c = (cross(0, 2) * cross(1, 3)) / (cross(0, 3) * cross(1, 2));
    FieldElem one(t, Rat(1));
    auto orbit = [&](const FieldElem& x) {
        std::vector<FieldElem> o{x,
                                 x.inv(),
                                 one - x,
                                 (one - x).inv(),
                                 x * (x - one).inv(),
                                 (x - one) * x.inv()};
        return o;
    };
    std::vector<FieldElem> got = orbit(c);
    std::vector<FieldElem> want = orbit(FieldElem(t, lambda));
    for (const auto& g : got) {
        bool found = false;
        for (const auto& w : want) found = found || g == w;
        if (!found) return false;
    }
    for (const auto& w : want) {
        bool found = false;
        for (const auto& g : got) found = found || g == w;
        if (!found) return false;
    }
    return true;
}

std::array<FieldElem, 3> weierstrass_add(const WeierstrassCurve& W,
                                         const std::array<FieldElem, 3>& P,
                                         const std::array<FieldElem, 3>& Q) {
    const TowerPtr& t = W.lambda.tower();
    FieldElem one(t, Rat(1)), zero(t);
    FieldElem a = -(one + W.lambda), b = W.lambda;

    auto on_w = [&](const std::array<FieldElem, 3>& p) {
        // y^2 z = x (x - z)(x - lambda z)
        return p[1] * p[1] * p[2] ==
               p[0] * (p[0] - p[2]) * (p[0] - W.lambda * p[2]);
    };
    auto is_identity = [&](const std::array<FieldElem, 3>& p) {
        return p[2].is_zero();
    };
    for (const auto& p : {P, Q}) {
        if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
            throw NotOnCurve("weierstrass_add: zero point");
        if (!on_w(p)) throw NotOnCurve("weierstrass_add: point off curve");
        if (p[2].is_zero() && p[0] != zero)
            throw NotOnCurve("weierstrass_add: bad point at infinity");
    }
    if (is_identity(P)) return Q;
    if (is_identity(Q)) return P;

    FieldElem zi = P[2].inv();
    FieldElem x1 = P[0] * zi, y1 = P[1] * zi;
    zi = Q[2].inv();
    FieldElem x2 = Q[0] * zi, y2 = Q[1] * zi;

    FieldElem m;
    if (x1 == x2) {
        if (y1 == -y2) return {zero, one, zero};
        m = (Rat(3) * (x1 * x1) + Rat(2) * (a * x1) + b) / (Rat(2) * y1);
    } else {
        m = (y2 - y1) / (x2 - x1);
    }
    FieldElem x3 = m * m - a - x1 - x2;
    FieldElem y3 = m * (x1 - x3) - y1;
    return {x3, y3, one};
}

}  // namespace skl
