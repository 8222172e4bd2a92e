#include "skl/twist.hpp"

#include <set>

#include "skl/errors.hpp"

namespace skl {

namespace {

using Mat = std::vector<std::vector<FieldElem>>;

Mat mat_mul(const Mat& a, const Mat& b) {
    const size_t n = a.size();
    Mat out(n, std::vector<FieldElem>(n, FieldElem(a[0][0].tower())));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

Mat mat_identity(int n, const TowerPtr& t) {
    Mat out(n, std::vector<FieldElem>(n, FieldElem(t)));
    for (int i = 0; i < n; ++i) out[i][i] = FieldElem(t, Rat(1));
    return out;
}

/// The scalar s with a = s b, or NotProjectiveBasis.
FieldElem proportionality(const Mat& a, const Mat& b) {
    const size_t n = a.size();
    FieldElem s;
    bool found = false;
    for (size_t i = 0; i < n && !found; ++i)
        for (size_t j = 0; j < n && !found; ++j)
            if (!b[i][j].is_zero()) {
                s = a[i][j] / b[i][j];
                found = true;
            }
    if (!found) throw NotProjectiveBasis("proportionality: zero reference");
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (a[i][j] != s * b[i][j])
                throw NotProjectiveBasis("matrices not proportional");
    return s;
}

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Rat> cyclotomic(int n) {
    // (x^n - 1) divided by the product of the lower cyclotomics.
    std::vector<Rat> num(n + 1, Rat(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        std::vector<Rat> div = cyclotomic(d);
        std::vector<Rat> q(num.size() - div.size() + 1, Rat(0));
        for (int k = static_cast<int>(q.size()) - 1; k >= 0; --k) {
            Rat lead = num[k + div.size() - 1];
            q[k] = lead;  // divisor is monic
            for (size_t t = 0; t < div.size(); ++t)
                num[k + t] -= lead * div[t];
        }
        num = std::move(q);
    }
    return num;
}

}  // namespace

int GradingGroup::add(int a, int b) const {
    int out = 0, mult = 1;
    for (int o : orders) {
        out += ((a % o + b % o) % o) * mult;
        a /= o;
        b /= o;
        mult *= o;
    }
    return out;
}

int GradingGroup::neg(int a) const {
    int out = 0, mult = 1;
    for (int o : orders) {
        out += ((o - a % o) % o) * mult;
        a /= o;
        mult *= o;
    }
    return out;
}

Cocycle2 cocycle_from_matrix_basis(const MatrixBasis& basis) {
    const GradingGroup& G = basis.group;
    const int N = G.size();
    Cocycle2 mu{G, basis.tower, {}};
    mu.table.assign(N, std::vector<FieldElem>(N, FieldElem(basis.tower)));
    for (int g = 0; g < N; ++g)
        for (int h = 0; h < N; ++h) {
            Mat prod = mat_mul(basis.mats[g], basis.mats[h]);
            mu.table[g][h] =
                embed(proportionality(prod, basis.mats[G.add(g, h)]),
                      basis.tower);
            if (mu.table[g][h].is_zero())
                throw NotProjectiveBasis("cocycle value zero");
        }
    FieldElem one(basis.tower, Rat(1));
    for (int g = 0; g < N; ++g)
        if (mu.table[0][g] != one || mu.table[g][0] != one)
            throw ConstraintViolation("cocycle not normalized");
    for (int g = 0; g < N; ++g)
        for (int h = 0; h < N; ++h)
            for (int k = 0; k < N; ++k)
                if (mu.table[g][h] * mu.table[G.add(g, h)][k] !=
                    mu.table[h][k] * mu.table[g][G.add(h, k)])
                    throw ConstraintViolation("cocycle identity fails");
    return mu;
}

MatrixBasis quaternion_basis(const TowerPtr& t, const FieldElem& i) {
    if (i * i != FieldElem(t, Rat(-1)))
        throw ConstraintViolation("quaternion_basis: i^2 != -1");
    FieldElem z(t), one(t, Rat(1)), ie = embed(i, t);
    MatrixBasis basis{GradingGroup{{2, 2}}, t, {}};
    basis.mats = {
        {{one, z}, {z, one}},
        {{ie, z}, {z, -ie}},
        {{z, ie}, {ie, z}},
        {{z, -one}, {one, z}},
    };
    return basis;
}

CharacterAssignment sklyanin_characters() {
    return CharacterAssignment{GradingGroup{{2, 2}}, {0, 1, 2, 3}};
}

QuadAlgebra twist_algebra(const QuadAlgebra& A, const CharacterAssignment& ch,
                          const Cocycle2& mu,
                          const std::vector<std::string>& new_labels) {
    TowerPtr t = mu.tower->is_prefix_of(*A.tower()) ? A.tower() : mu.tower;
    const int g = A.gens();
    std::vector<NcTensor> rels;
    for (const auto& r : A.relations()) {
        NcTensor s{g, 2, t, {}};
        for (const auto& [w, c] : r.terms) {
            int i = static_cast<int>(w) / g;
            int j = static_cast<int>(w) % g;
            s.terms.emplace(
                w, embed(c, t) * embed(mu.at(ch.chars[i], ch.chars[j]).inv(),
                                       t));
        }
        rels.push_back(std::move(s));
    }
    return QuadAlgebra(new_labels.empty() ? A.labels() : new_labels, rels, t);
}

NcTensor twist_element(const NcTensor& z, const CharacterAssignment& ch,
                       const Cocycle2& mu) {
    if (z.degree != 2)
        throw UnsupportedDegree("twist_element: degree != 2");
    NcTensor out{z.gens, 2, z.tower, {}};
    for (const auto& [w, c] : z.terms) {
        int i = static_cast<int>(w) / z.gens;
        int j = static_cast<int>(w) % z.gens;
        nc_add_term(out, w, c * mu.at(ch.chars[i], ch.chars[j]).inv());
    }
    return out;
}

Cocycle2 cocycle_inverse(const Cocycle2& mu) {
    Cocycle2 out = mu;
    for (auto& row : out.table)
        for (auto& v : row) v = v.inv();
    return out;
}

bool torsor_strong_grading_check(int n) {
    if (n < 1)
        throw ConstraintViolation("torsor_strong_grading_check: n < 1");
    if (n == 1) return true;

    TowerPtr t = Tower::rationals();
    FieldElem zeta(t, Rat(-1));
    if (n > 2) {
        std::vector<Rat> phi = cyclotomic(n);
        if (phi.size() < 3)
            throw TowerExtensionFailed("cyclotomic degree too small");
        std::vector<FieldElem> coeffs;
        for (size_t k = 0; k + 1 < phi.size(); ++k)
            coeffs.emplace_back(t, phi[k]);
        t = adjoin_root(t, "zeta" + std::to_string(n), coeffs);
        zeta = FieldElem::generator(t, 1);
    }

    FieldElem z(t);
    Mat clock(n, std::vector<FieldElem>(n, z));
    Mat shift(n, std::vector<FieldElem>(n, z));
    FieldElem pw(t, Rat(1));
    for (int i = 0; i < n; ++i) {
        clock[i][i] = pw;
        pw = pw * zeta;
        shift[(i + 1) % n][i] = FieldElem(t, Rat(1));
    }

    GradingGroup G{{n, n}};
    MatrixBasis basis{G, t, {}};
    basis.mats.resize(n * n);
    Mat cp = mat_identity(n, t);
    for (int p = 0; p < n; ++p) {
        Mat m = cp;
        for (int q = 0; q < n; ++q) {
            basis.mats[p + n * q] = m;
            m = mat_mul(m, shift);
        }
        cp = mat_mul(cp, clock);
    }

    try {
        // Spanning: the n^2 basis matrices are linearly independent.
        std::vector<std::vector<FieldElem>> flat;
        for (const auto& m : basis.mats) {
            std::vector<FieldElem> row;
            for (const auto& r : m) row.insert(row.end(), r.begin(), r.end());
            flat.push_back(std::move(row));
        }
        if (rank_dense(std::move(flat)) != n * n) return false;

        // One-dimensional eigenspaces with pairwise distinct characters.
        std::set<std::pair<std::string, std::string>> seen;
        for (const auto& m : basis.mats) {
            if (det_dense(m).is_zero()) return false;
            FieldElem sc = proportionality(mat_mul(clock, m),
                                           mat_mul(m, clock));
            FieldElem ss = proportionality(mat_mul(shift, m),
                                           mat_mul(m, shift));
            FieldElem scn(t, Rat(1)), ssn(t, Rat(1));
            for (int k = 0; k < n; ++k) scn *= sc, ssn *= ss;
            FieldElem one(t, Rat(1));
            if (scn != one || ssn != one) return false;
            if (!seen.emplace(sc.str(), ss.str()).second) return false;
        }

        // Strong grading: products land in the right component.
        cocycle_from_matrix_basis(basis);
    } catch (const NotProjectiveBasis&) {
        return false;
    } catch (const ZeroDivisor&) {
        throw TowerExtensionFailed(
            "torsor check: cyclotomic step was reducible");
    }
    return true;
}

CohomologyReport mu2_cohomology(const GradingGroup& G,
                                const std::vector<bool>& swaps,
                                const std::array<std::array<int, 2>, 4>& f) {
    if (G.orders != std::vector<int>{2, 2})
        throw UnsupportedGroup("mu2_cohomology: group must be (Z/2)^2");
    if (swaps.size() != 4 || swaps[0])
        throw UnsupportedGroup("mu2_cohomology: bad action table");
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (swaps[G.add(a, b)] != (swaps[a] != swaps[b]))
                throw UnsupportedGroup("mu2_cohomology: action not a hom");

    using M = std::array<int, 2>;  // values in {+1, -1}
    auto act = [&](int g, M m) { return swaps[g] ? M{m[1], m[0]} : m; };
    auto mul = [](M x, M y) { return M{x[0] * y[0], x[1] * y[1]}; };

    const std::array<M, 4> module{M{1, 1}, M{1, -1}, M{-1, 1}, M{-1, -1}};
    std::set<std::array<M, 4>> cocycles, coboundaries;
    for (int c1 = 0; c1 < 4; ++c1)
        for (int c2 = 0; c2 < 4; ++c2)
            for (int c3 = 0; c3 < 4; ++c3) {
                std::array<M, 4> cand{M{1, 1}, module[c1], module[c2],
                                      module[c3]};
                bool ok = true;
                for (int g = 0; g < 4 && ok; ++g)
                    for (int h = 0; h < 4 && ok; ++h)
                        ok = cand[G.add(g, h)] ==
                             mul(cand[g], act(g, cand[h]));
                if (ok) cocycles.insert(cand);
            }
    for (const M& m : module) {
        std::array<M, 4> cb;
        for (int g = 0; g < 4; ++g) cb[g] = mul(act(g, m), m);
        coboundaries.insert(cb);
    }

    CohomologyReport rep;
    rep.z1_size = static_cast<int>(cocycles.size());
    rep.b1_size = static_cast<int>(coboundaries.size());
    rep.h1_size = rep.z1_size / rep.b1_size;
    rep.is_cocycle = cocycles.count(f) > 0;
    rep.is_coboundary = coboundaries.count(f) > 0;
    return rep;
}

}  // namespace skl
