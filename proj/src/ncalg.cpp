#include "skl/ncalg.hpp"

#include <algorithm>

#include "skl/errors.hpp"

namespace skl {

namespace {

long ipow(int g, int n) {
    long p = 1;
    while (n-- > 0) p *= g;
    return p;
}

/// All paddings u (x) e (x) w of e into degree n, appended to out.
void padded_rows(const NcTensor& e, int n, std::vector<SparseRow>& out) {
    const int g = e.gens;
    const int d = e.degree;
    for (int i = 0; i + d <= n; ++i) {
        const int j = n - d - i;
        const long nu = ipow(g, i), nw = ipow(g, j);
        const long shift_mid = ipow(g, d + j);
        for (long u = 0; u < nu; ++u) {
            for (long w = 0; w < nw; ++w) {
                SparseRow row;
                row.reserve(e.terms.size());
                for (const auto& [word, c] : e.terms)
                    row.emplace_back(
                        static_cast<int>(u * shift_mid + word * nw + w), c);
                out.push_back(std::move(row));
            }
        }
    }
}

int rank_of_projected(const Subspace& R, const std::vector<SparseRow>& rows) {
    std::vector<std::vector<FieldElem>> proj;
    proj.reserve(rows.size());
    for (const auto& r : rows) proj.push_back(R.quotient_coords(r));
    return rank_dense(std::move(proj));
}

}  // namespace

long word_concat(int gens, long u, int ulen, long v, int vlen) {
    (void)ulen;
    return u * ipow(gens, vlen) + v;
}

int word_letter(int gens, long w, int len, int pos) {
    return static_cast<int>(w / ipow(gens, len - 1 - pos)) % gens;
}

NcTensor nc_zero(int gens, int degree, TowerPtr t) {
    return NcTensor{gens, degree, std::move(t), {}};
}

NcTensor nc_gen(int gens, int j, const TowerPtr& t) {
    NcTensor z{gens, 1, t, {}};
    z.terms.emplace(j, FieldElem(t, Rat(1)));
    return z;
}

void nc_add_term(NcTensor& z, long word, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = z.terms.find(word);
    if (it == z.terms.end()) {
        z.terms.emplace(word, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) z.terms.erase(it);
    }
}

NcTensor nc_tensor(const NcTensor& a, const NcTensor& b) {
    NcTensor z{a.gens, a.degree + b.degree, a.tower, {}};
    const long shift = ipow(a.gens, b.degree);
    for (const auto& [wa, ca] : a.terms)
        for (const auto& [wb, cb] : b.terms)
            nc_add_term(z, wa * shift + wb, ca * cb);
    return z;
}

NcTensor nc_scale(const FieldElem& c, const NcTensor& a) {
    NcTensor z{a.gens, a.degree, a.tower, {}};
    for (const auto& [w, v] : a.terms) nc_add_term(z, w, c * v);
    return z;
}

NcTensor operator+(const NcTensor& a, const NcTensor& b) {
    if (a.degree != b.degree)
        throw DegreeMismatch("NcTensor sum of unequal degrees");
    NcTensor z = a;
    for (const auto& [w, v] : b.terms) nc_add_term(z, w, v);
    return z;
}

NcTensor operator-(const NcTensor& a, const NcTensor& b) {
    if (a.degree != b.degree)
        throw DegreeMismatch("NcTensor difference of unequal degrees");
    NcTensor z = a;
    for (const auto& [w, v] : b.terms) nc_add_term(z, w, -v);
    return z;
}

bool nc_equal(const NcTensor& a, const NcTensor& b) {
    return a.degree == b.degree && (a - b).terms.empty();
}

SparseRow nc_row(const NcTensor& a) {
    SparseRow row;
    row.reserve(a.terms.size());
    for (const auto& [w, c] : a.terms)
        row.emplace_back(static_cast<int>(w), c);
    return row;
}

std::string nc_str(const NcTensor& a, const std::vector<std::string>& labels) {
    if (a.terms.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : a.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")";
        for (int p = 0; p < a.degree; ++p)
            s += "*" + labels[word_letter(a.gens, w, a.degree, p)];
    }
    return s;
}

QuadAlgebra::QuadAlgebra(std::vector<std::string> labels,
                         std::vector<NcTensor> relations, TowerPtr tower)
    : labels_(std::move(labels)), tower_(std::move(tower)) {
    // Coefficients are rewritten over the smallest tower prefix that
    // carries all of them; elimination then runs over that prefix.
    int level = 0;
    for (auto& r : relations)
        for (auto& [w, c] : r.terms) {
            c = embed(c, tower_);
            level = std::max(level, c.level());
        }
    TowerPtr work = prefix_tower(tower_, level);
    relations_.reserve(relations.size());
    for (auto& r : relations) {
        if (r.degree != 2)
            throw DegreeMismatch("QuadAlgebra: relation of degree != 2");
        NcTensor s{gens(), 2, work, {}};
        for (const auto& [w, c] : r.terms)
            s.terms.emplace(w, restrict_to(c, work));
        relations_.push_back(std::move(s));
    }
    if (!relations_.empty()) {
        std::vector<SparseRow> rows;
        for (const auto& r : relations_) rows.push_back(nc_row(r));
        Subspace sp(static_cast<int>(ipow(gens(), 2)), rows);
        if (sp.dim() != static_cast<int>(relations_.size()))
            throw ConstraintViolation("QuadAlgebra: dependent relations");
    }
}

const Subspace& QuadAlgebra::span_in_degree(int n) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return *it->second;
    const long ambient = ipow(gens(), n);
    auto sp = std::make_unique<Subspace>(static_cast<int>(ambient));
    if (n >= 2 && !relations_.empty()) {
        std::vector<SparseRow> rows;
        for (const auto& r : relations_) padded_rows(r, n, rows);
        *sp = Subspace(static_cast<int>(ambient), rows);
    }
    return *cache_.emplace(n, std::move(sp)).first->second;
}

Subspace relation_space(const QuadAlgebra& A, int n) {
    if (n < 2) throw DegreeTooSmall("relation_space: degree < 2");
    return A.span_in_degree(n);
}

int hilbert_dim(const QuadAlgebra& A, int n) {
    if (n == 0) return 1;
    if (n == 1) return A.gens();
    return static_cast<int>(ipow(A.gens(), n)) - A.span_in_degree(n).dim();
}

std::vector<int> hilbert_dims(const QuadAlgebra& A, int nmax) {
    std::vector<int> out;
    for (int n = 0; n <= nmax; ++n) out.push_back(hilbert_dim(A, n));
    return out;
}

bool is_zero_in_quotient(const QuadAlgebra& A, const NcTensor& z,
                         const std::vector<NcTensor>& extra) {
    const int n = z.degree;
    if (z.terms.empty()) return true;
    const Subspace& R = A.span_in_degree(n);
    std::vector<SparseRow> rows;
    for (const auto& e : extra) {
        if (e.degree > n)
            throw DegreeMismatch("is_zero_in_quotient: extra degree > n");
        padded_rows(e, n, rows);
    }
    std::vector<std::vector<FieldElem>> proj;
    proj.reserve(rows.size() + 1);
    for (const auto& r : rows) proj.push_back(R.quotient_coords(r));
    int base = rank_dense(proj);
    proj.push_back(R.quotient_coords(nc_row(z)));
    return rank_dense(std::move(proj)) == base;
}

bool is_central(const QuadAlgebra& A, const NcTensor& z,
                const std::vector<NcTensor>& modulo) {
    for (int j = 0; j < A.gens(); ++j) {
        NcTensor xj = nc_gen(A.gens(), j, A.tower());
        NcTensor comm = nc_tensor(z, xj) - nc_tensor(xj, z);
        if (!is_zero_in_quotient(A, comm, modulo)) return false;
    }
    return true;
}

std::vector<int> left_quotient_dims(const QuadAlgebra& A,
                                    const std::vector<NcTensor>& W,
                                    int nmax) {
    const int g = A.gens();
    std::vector<int> dims{1};
    for (int n = 1; n <= nmax; ++n) {
        const Subspace& R = A.span_in_degree(n);
        const long nu = ipow(g, n - 1);
        std::vector<SparseRow> rows;
        rows.reserve(nu * W.size());
        for (long u = 0; u < nu; ++u) {
            for (const auto& w : W) {
                SparseRow row;
                row.reserve(w.terms.size());
                for (const auto& [word, c] : w.terms)
                    row.emplace_back(static_cast<int>(u * g + word), c);
                rows.push_back(std::move(row));
            }
        }
        dims.push_back(R.codim() - rank_of_projected(R, rows));
    }
    return dims;
}

std::vector<int> two_sided_quotient_dims(const QuadAlgebra& A,
                                         const std::vector<NcTensor>& Z,
                                         int nmax) {
    for (const auto& z : Z)
        if (!is_central(A, z))
            throw NotCentral("two_sided_quotient_dims: non-central element");
    std::vector<int> dims;
    for (int n = 0; n <= nmax; ++n) {
        if (n < 2) {
            dims.push_back(hilbert_dim(A, n));
            continue;
        }
        const Subspace& R = A.span_in_degree(n);
        std::vector<SparseRow> rows;
        for (const auto& z : Z) padded_rows(z, n, rows);
        dims.push_back(R.codim() - rank_of_projected(R, rows));
    }
    return dims;
}

QuadAlgebra koszul_dual(const QuadAlgebra& A) {
    const int g = A.gens();
    const int g2 = g * g;
    std::vector<std::string> dual_labels;
    for (const auto& l : A.labels()) dual_labels.push_back(l + "*");

    std::vector<NcTensor> dual_rels;
    if (A.relations().empty()) {
        for (int w = 0; w < g2; ++w) {
            NcTensor r{g, 2, A.tower(), {}};
            r.terms.emplace(w, FieldElem(A.tower(), Rat(1)));
            dual_rels.push_back(std::move(r));
        }
    } else {
        std::vector<std::vector<FieldElem>> C(
            A.relations().size(),
            std::vector<FieldElem>(g2, FieldElem(A.tower())));
        for (size_t k = 0; k < A.relations().size(); ++k)
            for (const auto& [w, c] : A.relations()[k].terms)
                C[k][w] = embed(c, A.tower());
        for (const auto& v : nullspace_dense(std::move(C), A.tower())) {
            NcTensor r{g, 2, A.tower(), {}};
            for (int w = 0; w < g2; ++w) nc_add_term(r, w, v[w]);
            dual_rels.push_back(std::move(r));
        }
    }
    return QuadAlgebra(dual_labels, dual_rels, A.tower());
}

RelationMatrix multilinearize(const QuadAlgebra& A) {
    const int g = A.gens();
    RelationMatrix M;
    M.rows = static_cast<int>(A.relations().size());
    M.cols = g;
    // Coefficients stay over the compressed relation tower so the matrix
    // can be evaluated at points over unrelated extensions of it.
    TowerPtr rt = A.relations().empty() ? A.tower() : A.relations()[0].tower;
    M.coeff.assign(M.rows,
                   std::vector<std::vector<FieldElem>>(
                       g, std::vector<FieldElem>(g, FieldElem(rt))));
    for (int k = 0; k < M.rows; ++k)
        for (const auto& [w, c] : A.relations()[k].terms) {
            int i = static_cast<int>(w) / g;
            int j = static_cast<int>(w) % g;
            M.coeff[k][j][i] = c;
        }
    return M;
}

std::vector<std::vector<FieldElem>> evaluate(const RelationMatrix& M,
                                             const std::vector<FieldElem>& u) {
    std::vector<std::vector<FieldElem>> out(
        M.rows, std::vector<FieldElem>(M.cols, FieldElem(u[0].tower())));
    for (int k = 0; k < M.rows; ++k)
        for (int j = 0; j < M.cols; ++j)
            for (int i = 0; i < static_cast<int>(u.size()); ++i)
                out[k][j] += M.coeff[k][j][i] * u[i];
    return out;
}

QuadAlgebra free_preset(int gens, const TowerPtr& t) {
    std::vector<std::string> labels;
    for (int j = 0; j < gens; ++j) labels.push_back("x" + std::to_string(j));
    return QuadAlgebra(labels, {}, t);
}

QuadAlgebra commutative_preset(int gens, const TowerPtr& t) {
    std::vector<std::string> labels;
    for (int j = 0; j < gens; ++j) labels.push_back("x" + std::to_string(j));
    std::vector<NcTensor> rels;
    for (int i = 0; i < gens; ++i)
        for (int j = i + 1; j < gens; ++j) {
            NcTensor xi = nc_gen(gens, i, t), xj = nc_gen(gens, j, t);
            rels.push_back(nc_tensor(xi, xj) - nc_tensor(xj, xi));
        }
    return QuadAlgebra(labels, rels, t);
}

}  // namespace skl
