#include "skl/linalg.hpp"

#include <algorithm>

#include "skl/errors.hpp"

namespace skl {

SparseRow row_add(const SparseRow& a, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            FieldElem s = a[i].second + b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
            ++i, ++j;
        }
    }
    return out;
}

SparseRow row_submul(const SparseRow& a, const FieldElem& c,
                     const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            FieldElem v = -(c * b[j].second);
            if (!v.is_zero()) out.emplace_back(b[j].first, std::move(v));
            ++j;
        } else {
            FieldElem s = a[i].second - c * b[j].second;
            if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
            ++i, ++j;
        }
    }
    return out;
}

SparseRow row_scale(const SparseRow& a, const FieldElem& c) {
    if (c.is_zero()) return {};
    SparseRow out;
    out.reserve(a.size());
    for (const auto& [idx, v] : a) {
        FieldElem s = c * v;
        if (!s.is_zero()) out.emplace_back(idx, std::move(s));
    }
    return out;
}

bool Echelon::insert(SparseRow row) {
    while (!row.empty()) {
        auto it = rows_.find(row[0].first);
        if (it == rows_.end()) {
            row = row_scale(row, row[0].second.inv());
            rows_.emplace(row[0].first, std::move(row));
            return true;
        }
        row = row_submul(row, row[0].second, it->second);
    }
    return false;
}

SparseRow Echelon::reduce(SparseRow row) const {
    // Eliminate pivot-indexed entries in increasing index order; each
    // subtraction only introduces indices past the one eliminated.
    size_t i = 0;
    while (i < row.size()) {
        auto it = rows_.find(row[i].first);
        if (it == rows_.end()) {
            ++i;
            continue;
        }
        row = row_submul(row, row[i].second, it->second);
    }
    return row;
}

std::vector<int> Echelon::pivots() const {
    std::vector<int> p;
    p.reserve(rows_.size());
    for (const auto& [piv, row] : rows_) p.push_back(piv);
    return p;
}

Subspace::Subspace(int ambient, const std::vector<SparseRow>& spanning)
    : ech_(ambient) {
    for (const auto& r : spanning) ech_.insert(r);
}

bool Subspace::contains(const Subspace& other) const {
    for (const auto& [piv, row] : other.ech_.rows())
        if (!contains(row)) return false;
    return true;
}

bool Subspace::same_span(const Subspace& other) const {
    return dim() == other.dim() && contains(other);
}

const std::vector<int>& Subspace::copivots() const {
    if (copivots_.empty() && codim() > 0) {
        std::vector<int> piv = ech_.pivots();
        size_t k = 0;
        for (int i = 0; i < ambient(); ++i) {
            if (k < piv.size() && piv[k] == i)
                ++k;
            else
                copivots_.push_back(i);
        }
    }
    return copivots_;
}

std::vector<FieldElem> Subspace::quotient_coords(const SparseRow& v) const {
    SparseRow rem = ech_.reduce(v);
    const std::vector<int>& co = copivots();
    std::vector<FieldElem> out(co.size());
    size_t k = 0;
    for (const auto& [idx, val] : rem) {
        while (k < co.size() && co[k] < idx) ++k;
        if (k == co.size() || co[k] != idx)
            throw Error("quotient_coords: reduction left a pivot index");
        out[k] = val;
    }
    return out;
}

int rank_dense(std::vector<std::vector<FieldElem>> m) {
    if (m.empty()) return 0;
    const int nr = static_cast<int>(m.size());
    const int nc = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        FieldElem pinv = m[rank][c].inv();
        for (int r = rank + 1; r < nr; ++r) {
            if (m[r][c].is_zero()) continue;
            FieldElem f = m[r][c] * pinv;
            for (int j = c; j < nc; ++j) m[r][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

FieldElem det_dense(std::vector<std::vector<FieldElem>> m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw ConstraintViolation("det_dense: empty matrix");
    FieldElem det(m[0][0].tower(), Rat(1));
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return FieldElem(det.tower());
        if (piv != c) {
            std::swap(m[c], m[piv]);
            det = Rat(-1) * det;
        }
        det = det * m[c][c];
        FieldElem pinv = m[c][c].inv();
        for (int r = c + 1; r < n; ++r) {
            if (m[r][c].is_zero()) continue;
            FieldElem f = m[r][c] * pinv;
            for (int j = c; j < n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    return det;
}

std::vector<FieldElem> solve_dense(std::vector<std::vector<FieldElem>> m,
                                   std::vector<FieldElem> rhs) {
    const int n = static_cast<int>(m.size());
    for (int i = 0; i < n; ++i) m[i].push_back(rhs[i]);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw RankDegenerate("solve_dense: singular matrix");
        std::swap(m[c], m[piv]);
        FieldElem pinv = m[c][c].inv();
        for (int j = c; j <= n; ++j) m[c][j] = pinv * m[c][j];
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c].is_zero()) continue;
            FieldElem f = m[r][c];
            for (int j = c; j <= n; ++j) m[r][j] -= f * m[c][j];
        }
    }
    std::vector<FieldElem> x(n);
    for (int i = 0; i < n; ++i) x[i] = m[i][n];
    return x;
}

std::vector<std::vector<FieldElem>> nullspace_dense(
    std::vector<std::vector<FieldElem>> m, const TowerPtr& tower) {
    const int nr = static_cast<int>(m.size());
    const int nc = nr ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < nc && rank < nr; ++c) {
        int piv = -1;
        for (int r = rank; r < nr; ++r)
            if (!m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        FieldElem pinv = m[rank][c].inv();
        for (int j = c; j < nc; ++j) m[rank][j] = pinv * m[rank][j];
        for (int r = 0; r < nr; ++r) {
            if (r == rank || m[r][c].is_zero()) continue;
            FieldElem f = m[r][c];
            for (int j = c; j < nc; ++j) m[r][j] -= f * m[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(nc, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (int free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<FieldElem> v(nc, FieldElem(tower));
        v[free] = FieldElem(tower, Rat(1));
        for (int r = 0; r < rank; ++r)
            v[pivot_col[r]] = -embed(m[r][free], tower);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace skl
