#pragma once

#include <array>
#include <vector>

#include "skl/geometry.hpp"
#include "skl/ncalg.hpp"
#include "skl/sklyanin.hpp"

namespace skl {

/// The 20 special points in P^3 where the twisted relations degenerate,
/// in five groups of four: the coordinate points, the all-ones orbit,
/// and three orbits with surd coordinates. In each non-fixed group the
/// rows are u, gamma_1(u), gamma_2(u), gamma_3(u).
struct PointFamily {
    TowerPtr tower;
    std::array<std::array<ProjPoint, 4>, 5> groups;

    std::vector<ProjPoint> all() const;
};

PointFamily build_point_family(const Params& p);

/// The order-2 permutation of the family: identity on the first two
/// groups, gamma_i on the i-th surd group. NotInFamily when u is not
/// projectively equal to a member.
ProjPoint theta(const PointFamily& f, const ProjPoint& u);

struct PointSchemeReport {
    int rank3_matches = 0;    // family points with rank 3 and kernel theta(u)
    int random_rank4 = 0;     // random points with full rank
    bool ok = false;
};

/// For every family point u: rank M(u) = 3, the kernel is spanned by
/// theta(u), the residual M(u) theta(u) vanishes, and the transposed
/// pair (theta(u), u) annihilates the relations too. Random points must
/// have full rank. Throws VerificationFailed naming the offending point.
PointSchemeReport verify_point_scheme(const QuadAlgebra& A,
                                      const PointFamily& f);

/// The fifteen 4x4 minors of the multilinearized relation matrix, as
/// quartic polynomials with the common factor 2 removed.
std::vector<MultiPoly> relation_minors(const QuadAlgebra& A);

/// The same span written as twelve factored quartics and three
/// square-monomial combinations.
std::vector<MultiPoly> factored_quartics(const Params& p);

/// Verifies that each minor vanishes on the whole family and that the
/// minors span the same 15-dimensional space of quartics as the
/// factored list. Throws SpanMismatch on a span discrepancy.
bool minors_check(const QuadAlgebra& A, const Params& p,
                  const PointFamily& f);

/// The four diagonal quadrics cutting out the family's coordinate
/// squares: determinant of their coefficient matrix is
/// -(1 + ab + bg + ga)^2 and their span is that of the four squares.
bool four_quadrics_independence(const Params& p);

/// The unique kernel direction of the multilinearized relation matrix
/// at pt. RankDegenerate unless the kernel is exactly one-dimensional.
ProjPoint sigma(const QuadAlgebra& A, const ProjPoint& pt);

}  // namespace skl
