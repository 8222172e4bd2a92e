#pragma once

#include <array>
#include <map>
#include <vector>

#include "skl/sklyanin.hpp"
#include "skl/tower.hpp"

namespace skl {

/// Point of P^3 as four coordinates, not all zero; equality up to a
/// global scalar.
struct ProjPoint {
    std::array<FieldElem, 4> c;

    const TowerPtr& tower() const { return c[0].tower(); }
};

ProjPoint make_point(const TowerPtr& t, std::array<FieldElem, 4> coords);
bool proj_equal(const ProjPoint& p, const ProjPoint& q);
/// Scales so the first nonzero coordinate is 1.
ProjPoint normalized(const ProjPoint& p);
std::string point_str(const ProjPoint& p);

/// Commutative polynomial in 4 variables, exponent vector to coefficient.
struct MultiPoly {
    TowerPtr tower;
    std::map<std::array<int, 4>, FieldElem> terms;
};

MultiPoly poly_zero(const TowerPtr& t);
MultiPoly poly_var(const TowerPtr& t, int j);
MultiPoly poly_const(const FieldElem& c);
void poly_add_term(MultiPoly& p, const std::array<int, 4>& mono,
                   const FieldElem& c);
MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_scale(const FieldElem& c, const MultiPoly& a);
FieldElem poly_eval(const MultiPoly& p, const std::array<FieldElem, 4>& x);

/// Quadratic form as a symmetric 4x4 Gram matrix.
struct Quadric {
    std::array<std::array<FieldElem, 4>, 4> gram;
};

Quadric diagonal_quadric(const TowerPtr& t,
                         const std::array<FieldElem, 4>& d);
FieldElem quadric_eval(const Quadric& Q, const ProjPoint& p);
FieldElem quadric_pair(const Quadric& Q, const ProjPoint& p,
                       const ProjPoint& q);

/// E = {sum x_j^2 = 0} cut with the second diagonal quadric
/// (1-gamma) x_1^2 + (1+alpha*gamma) x_2^2 + (1+alpha) x_3^2 = 0.
struct CurveE {
    Params params;
    MultiPoly q1, q2;
};

struct TwoTorsion {
    TowerPtr tower;
    ProjPoint o, xi1, xi2, xi3;

    const ProjPoint& xi(int i) const {
        return i == 1 ? xi1 : i == 2 ? xi2 : xi3;
    }
};

struct WeierstrassCurve {
    FieldElem lambda;  // not 0 or 1
};

CurveE curve_of(const Params& p);

/// The sign-flip action of the Klein group: g in {0..3}, g = k flips
/// the two coordinates other than 0 and k.
ProjPoint gamma_act(int g, const ProjPoint& p);

bool on_curve(const CurveE& E, const ProjPoint& p);

/// Solves for x1^2, x2^2 at x0 = s, x3 = 1 and adjoins the two roots
/// over a fresh tower Q(i, ...). DegenerateSample when a square
/// vanishes; ZeroDivisor propagates.
std::pair<ProjPoint, TowerPtr> sample_point(const CurveE& E, const Rat& s);

/// Same, but the roots are adjoined on top of the given tower, so several
/// sampled points can share one scalar field.
std::pair<ProjPoint, TowerPtr> sample_point_over(const CurveE& E, const Rat& s,
                                                 const TowerPtr& base);

/// The involution (w,x,y,z) -> (-w,x,y,z).
ProjPoint neg(const ProjPoint& p);

/// o = (0, sqrt(nu-1), sqrt(1-mu), sqrt(mu-nu)) and its Klein translates.
TwoTorsion two_torsion(const Params& p);

/// The four rank-3 members of the pencil through E, with singular
/// points at the coordinate points.
std::array<Quadric, 4> singular_quadrics(const Params& p);

bool coplanar(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3,
              const ProjPoint& p4);

/// Containment of the line through p and q certified by vanishing at
/// p, q and p+q. DegenerateLine when p = q.
bool line_on_quadric(const ProjPoint& p, const ProjPoint& q,
                     const Quadric& Q);

/// Projects the 2-torsion to P^1 by the explicit degree-two map and
/// compares the cross-ratio orbit of the four branch images with the
/// orbit of lambda. Also checks the closed-form branch coordinates.
bool branch_cross_ratio_check(const Params& p);

/// Chord-tangent addition on y^2 z = x (x - z)(x - lambda z) with
/// identity (0,1,0); points are (x,y,z) triples. NotOnCurve.
std::array<FieldElem, 3> weierstrass_add(const WeierstrassCurve& W,
                                         const std::array<FieldElem, 3>& P,
                                         const std::array<FieldElem, 3>& Q);

}  // namespace skl
