#pragma once

#include <map>
#include <vector>

#include "skl/tower.hpp"

namespace skl {

/// Sparse vector: (index, coefficient) pairs sorted by index, no zeros.
using SparseRow = std::vector<std::pair<int, FieldElem>>;

SparseRow row_add(const SparseRow& a, const SparseRow& b);
/// a - c * b
SparseRow row_submul(const SparseRow& a, const FieldElem& c, const SparseRow& b);
SparseRow row_scale(const SparseRow& a, const FieldElem& c);

/// Incremental echelon form. Rows are stored normalized (leading
/// coefficient 1) and keyed by pivot index; not back-reduced.
class Echelon {
public:
    explicit Echelon(int ambient) : ambient_(ambient) {}

    /// Reduces the row against the current pivots and stores the
    /// remainder if nonzero. Returns true when the row was independent.
    bool insert(SparseRow row);

    /// Remainder of the row after eliminating every pivot index.
    SparseRow reduce(SparseRow row) const;

    int rank() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }
    const std::map<int, SparseRow>& rows() const { return rows_; }
    std::vector<int> pivots() const;

private:
    int ambient_;
    std::map<int, SparseRow> rows_;
};

/// A linear subspace of a coordinate space, held in echelon form.
class Subspace {
public:
    explicit Subspace(int ambient) : ech_(ambient) {}
    Subspace(int ambient, const std::vector<SparseRow>& spanning);

    int ambient() const { return ech_.ambient(); }
    int dim() const { return ech_.rank(); }
    int codim() const { return ambient() - dim(); }

    bool contains(const SparseRow& v) const { return ech_.reduce(v).empty(); }
    bool contains(const Subspace& other) const;
    bool same_span(const Subspace& other) const;

    /// Indices not used as pivots, sorted: coordinates of the quotient.
    const std::vector<int>& copivots() const;

    /// Image of v in the quotient, as a dense vector over copivots().
    std::vector<FieldElem> quotient_coords(const SparseRow& v) const;

private:
    Echelon ech_;
    mutable std::vector<int> copivots_;
};

/// Rank of a dense matrix, destroying it.
int rank_dense(std::vector<std::vector<FieldElem>> m);

/// Determinant of a dense square matrix by fraction-free elimination.
FieldElem det_dense(std::vector<std::vector<FieldElem>> m);

/// Solves the square system m x = rhs. Throws RankDegenerate when m is
/// singular; ZeroDivisor propagates from pivot inversion.
std::vector<FieldElem> solve_dense(std::vector<std::vector<FieldElem>> m,
                                   std::vector<FieldElem> rhs);

/// Basis of the right nullspace {v : m v = 0} of a dense matrix.
std::vector<std::vector<FieldElem>> nullspace_dense(
    std::vector<std::vector<FieldElem>> m, const TowerPtr& tower);

}  // namespace skl
