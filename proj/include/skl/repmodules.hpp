#pragma once

#include <array>
#include <utility>

#include "skl/pointscheme.hpp"
#include "skl/twist.hpp"

namespace skl {

/// Sequence theta^n(u) certifying a cyclic module with one new basis
/// vector per degree: consecutive pairs annihilate every relation.
struct PointModuleWitness {
    std::vector<ProjPoint> seq;
};

/// True iff every relation of A, read as a bidegree-(1,1) form,
/// vanishes at the pair (u, v).
bool annihilates_pair(const QuadAlgebra& A, const ProjPoint& u,
                      const ProjPoint& v);

/// Builds the sequence u, theta(u), theta^2(u), ... of length N+1 and
/// verifies every consecutive pair. VerificationFailed on a nonzero
/// relation value, NotInFamily from theta.
PointModuleWitness point_module_witness(const QuadAlgebra& A,
                                        const PointFamily& f,
                                        const ProjPoint& u, int N);

/// The scalar by which the central sum of squares acts in degree 0 of
/// the module attached to u, computed on the stored representative
/// coordinates: sum_j u_j * theta(u)_j.
FieldElem theta_constant(const PointFamily& f, const ProjPoint& u);

/// For n = 0..steps with p_n the n-fold kernel iterate of p, checks
/// that the four vectors x_j(p_n) * q_j v span k^2, q_j the quaternion
/// basis built from imag. ZeroInput when v = 0.
bool fat_point_span_check(const QuadAlgebra& A, const ProjPoint& p,
                          const FieldElem& imag, int steps,
                          const std::array<FieldElem, 2>& v);

/// Defining forms of the secant line through p and gamma_xi(p), paired
/// by coordinates: (b0 x_0 + b1 x_a, b2 x_b + b3 x_c) with a = xi and
/// {b, c} the remaining indices. DegenerateSecant when p = gamma_xi(p)
/// or a coefficient pair vanishes.
std::pair<NcTensor, NcTensor> line_forms_q(const ProjPoint& p, int xi);

/// A pair of twisted-side forms cutting a line module, with the unit
/// multipliers on the second coefficient of each pair.
struct LineForms {
    int xi = 1;
    std::array<FieldElem, 4> beta;
    FieldElem eps1, eps2;
    NcTensor f1, f2;
};

/// For xi = 1 the displayed pattern (eps1 = eps2 = imag); for xi = 2, 3
/// the unit pattern is found by searching {1, -1, i, -i}^2 and keeping
/// the first pair whose quotient has line-module dimensions.
/// NoValidPattern when the search is exhausted.
LineForms line_forms_qtilde(const QuadAlgebra& Qt, const ProjPoint& p,
                            int xi, const FieldElem& imag);

/// The same forms with i replaced by -i in the unit multipliers.
LineForms conjugate_line_forms(const LineForms& lf);

/// dims of A modulo the two forms are 1, 2, ..., nmax+1.
bool verify_line_module(const QuadAlgebra& A, const NcTensor& f1,
                        const NcTensor& f2, int nmax = 4);

/// Degree-1 annihilation of the invariant generator for xi = 1: the
/// coefficient forms produced by the four 2x2 quaternion products lie
/// in the spans of the secant forms on each summand.
bool annihilates_invariant_generator(const ProjPoint& p, const LineForms& lf,
                                     const FieldElem& imag);

/// The explicit degree-0 equivariant structure: phi_1 = diag(1,-1,-1,1)
/// and phi_2 the outer swap, intertwining the quaternion action, with
/// {id, phi_1, phi_2, phi_1 phi_2} a Klein four-group.
bool verify_equivariant_table(const TowerPtr& t, const FieldElem& imag);

}  // namespace skl
