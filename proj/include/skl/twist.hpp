#pragma once

#include <array>
#include <vector>

#include "skl/ncalg.hpp"
#include "skl/sklyanin.hpp"

namespace skl {

/// Finite abelian group as a product of cyclic factors; elements are
/// flat indices with mixed-radix digits, first factor least significant.
struct GradingGroup {
    std::vector<int> orders;

    int size() const {
        int s = 1;
        for (int o : orders) s *= o;
        return s;
    }
    int add(int a, int b) const;
    int neg(int a) const;
};

/// Generator j carries the group element chars[j]; relations must be
/// bihomogeneous word by word for twisting to make sense.
struct CharacterAssignment {
    GradingGroup group;
    std::vector<int> chars;
};

/// Normalized 2-cocycle with values in the tower's units.
struct Cocycle2 {
    GradingGroup group;
    TowerPtr tower;
    std::vector<std::vector<FieldElem>> table;  // [g][h]

    const FieldElem& at(int g, int h) const { return table[g][h]; }
};

/// Group-indexed projective matrix basis: q_e = 1 and q_g q_h is a
/// scalar multiple of q_{g+h}.
struct MatrixBasis {
    GradingGroup group;
    TowerPtr tower;
    std::vector<std::vector<std::vector<FieldElem>>> mats;  // [g][r][c]
};

/// Throws NotProjectiveBasis when some product q_g q_h fails to be
/// proportional to q_{g+h}; validates the cocycle identity exhaustively.
Cocycle2 cocycle_from_matrix_basis(const MatrixBasis& basis);

/// The quaternion basis 1, diag(i,-i), antidiag(i,i), [[0,-1],[1,0]]
/// indexed by (Z/2)^2, over any tower whose element i squares to -1.
MatrixBasis quaternion_basis(const TowerPtr& t, const FieldElem& i);

/// The character grading of the Sklyanin generators: x0 trivial, xj the
/// j-th nontrivial character of (Z/2)^2.
CharacterAssignment sklyanin_characters();

/// Relations rescaled word by word: c_ij -> c_ij / mu(chi_i, chi_j).
QuadAlgebra twist_algebra(const QuadAlgebra& A, const CharacterAssignment& ch,
                          const Cocycle2& mu,
                          const std::vector<std::string>& new_labels = {});

/// Degree-2 elements rescaled the same way. UnsupportedDegree otherwise.
NcTensor twist_element(const NcTensor& z, const CharacterAssignment& ch,
                       const Cocycle2& mu);

/// Pointwise inverse cocycle.
Cocycle2 cocycle_inverse(const Cocycle2& mu);

/// Checks that M_n(k) under conjugation by clock and shift splits into
/// n^2 one-dimensional character eigenspaces, each spanned by an
/// invertible matrix, multiplying along the group (strong grading).
bool torsor_strong_grading_check(int n);

struct CohomologyReport {
    int z1_size = 0;
    int b1_size = 0;
    int h1_size = 0;
    bool is_cocycle = false;
    bool is_coboundary = false;
};

/// Exhaustive mu_2-valued 1-cocycle/1-coboundary enumeration for
/// G = (Z/2)^2 acting on {+-1}^2, with swaps[g] marking the elements
/// that act by swapping the two factors. f is evaluated for membership;
/// f[g] is a pair of signs. UnsupportedGroup unless G = (Z/2)^2.
CohomologyReport mu2_cohomology(const GradingGroup& G,
                                const std::vector<bool>& swaps,
                                const std::array<std::array<int, 2>, 4>& f);

}  // namespace skl
