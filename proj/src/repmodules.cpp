#include "skl/repmodules.hpp"

#include "skl/errors.hpp"
#include "skl/linalg.hpp"

namespace skl {

namespace {

using Mat2 = std::array<std::array<FieldElem, 2>, 2>;
using Mat4 = std::array<std::array<FieldElem, 4>, 4>;

Mat2 mat2_of(const std::vector<std::vector<FieldElem>>& m) {
    return {{{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}};
}

Mat2 mul2(const Mat2& a, const Mat2& b) {
    Mat2 out;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
    return out;
}

Mat2 inv2(const Mat2& a) {
    FieldElem det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
    FieldElem d = det.inv();
    return {{{d * a[1][1], -(d * a[0][1])}, {-(d * a[1][0]), d * a[0][0]}}};
}

Mat4 mul4(const Mat4& a, const Mat4& b) {
    Mat4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            FieldElem s = a[r][0] * b[0][c];
            for (int k = 1; k < 4; ++k) s += a[r][k] * b[k][c];
            out[r][c] = s;
        }
    return out;
}

bool eq4(const Mat4& a, const Mat4& b) {
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (a[r][c] != b[r][c]) return false;
    return true;
}

Mat4 zero4(const TowerPtr& t) {
    Mat4 m;
    for (auto& row : m) row.fill(FieldElem(t));
    return m;
}

// coordinate pairs of the secant forms: (0, xi) and the other two
void secant_indices(int xi, int& a, int& b, int& c) {
    a = xi;
    b = xi == 1 ? 2 : 1;
    c = xi == 3 ? 2 : 3;
}

std::array<FieldElem, 4> secant_beta(const ProjPoint& p, int xi) {
    int a, b, c;
    secant_indices(xi, a, b, c);
    return {p.c[a], -p.c[0], p.c[c], -p.c[b]};
}

NcTensor form_of(const TowerPtr& t, int j0, const FieldElem& c0, int j1,
                 const FieldElem& c1) {
    NcTensor f = nc_zero(4, 1, t);
    nc_add_term(f, j0, c0);
    nc_add_term(f, j1, c1);
    return f;
}

SparseRow coeff_row(const std::array<FieldElem, 4>& v) {
    SparseRow row;
    for (int j = 0; j < 4; ++j)
        if (!v[j].is_zero()) row.emplace_back(j, v[j]);
    return row;
}

}  // namespace

bool annihilates_pair(const QuadAlgebra& A, const ProjPoint& u,
                      const ProjPoint& v) {
    RelationMatrix M = multilinearize(A);
    auto Mu = evaluate(M, {u.c[0], u.c[1], u.c[2], u.c[3]});
    for (const auto& row : Mu) {
        FieldElem dot = row[0] * v.c[0];
        for (int j = 1; j < 4; ++j) dot += row[j] * v.c[j];
        if (!dot.is_zero()) return false;
    }
    return true;
}

PointModuleWitness point_module_witness(const QuadAlgebra& A,
                                        const PointFamily& f,
                                        const ProjPoint& u, int N) {
    PointModuleWitness w;
    w.seq.push_back(u);
    for (int n = 0; n < N; ++n) w.seq.push_back(theta(f, w.seq.back()));
    for (int n = 0; n < N; ++n)
        if (!annihilates_pair(A, w.seq[n + 1], w.seq[n]))
            throw VerificationFailed("relation nonzero at step " +
                                     std::to_string(n) + " of " +
                                     point_str(u));
    return w;
}

FieldElem theta_constant(const PointFamily& f, const ProjPoint& u) {
    for (const auto& group : f.groups)
        for (const ProjPoint& rep : group)
            if (proj_equal(rep, u)) {
                ProjPoint tr = theta(f, rep);
                FieldElem s = rep.c[0] * tr.c[0];
                for (int j = 1; j < 4; ++j) s += rep.c[j] * tr.c[j];
                return s;
            }
    throw NotInFamily("theta_constant: " + point_str(u));
}

bool fat_point_span_check(const QuadAlgebra& A, const ProjPoint& p,
                          const FieldElem& imag, int steps,
                          const std::array<FieldElem, 2>& v) {
    if (v[0].is_zero() && v[1].is_zero())
        throw ZeroInput("fat_point_span_check: zero vector");
    const TowerPtr& t = p.tower();
    MatrixBasis qb = quaternion_basis(t, imag);
    ProjPoint cur = p;
    for (int n = 0; n <= steps; ++n) {
        std::vector<std::vector<FieldElem>> cols;
        for (int j = 0; j < 4; ++j) {
            const auto& q = qb.mats[j];
            FieldElem w0 = q[0][0] * v[0] + q[0][1] * v[1];
            FieldElem w1 = q[1][0] * v[0] + q[1][1] * v[1];
            cols.push_back({cur.c[j] * w0, cur.c[j] * w1});
        }
        if (rank_dense(std::move(cols)) != 2) return false;
        if (n < steps) cur = sigma(A, cur);
    }
    return true;
}

std::pair<NcTensor, NcTensor> line_forms_q(const ProjPoint& p, int xi) {
    if (proj_equal(p, gamma_act(xi, p)))
        throw DegenerateSecant("secant endpoints coincide");
    int a, b, c;
    secant_indices(xi, a, b, c);
    std::array<FieldElem, 4> beta = secant_beta(p, xi);
    if ((beta[0].is_zero() && beta[1].is_zero()) ||
        (beta[2].is_zero() && beta[3].is_zero()))
        throw DegenerateSecant("vanishing coefficient pair");
    const TowerPtr& t = p.tower();
    return {form_of(t, 0, beta[0], a, beta[1]),
            form_of(t, b, beta[2], c, beta[3])};
}

bool verify_line_module(const QuadAlgebra& A, const NcTensor& f1,
                        const NcTensor& f2, int nmax) {
    std::vector<int> dims = left_quotient_dims(A, {f1, f2}, nmax);
    for (int n = 0; n <= nmax; ++n)
        if (dims[n] != n + 1) return false;
    return true;
}

LineForms line_forms_qtilde(const QuadAlgebra& Qt, const ProjPoint& p,
                            int xi, const FieldElem& imag) {
    int a, b, c;
    secant_indices(xi, a, b, c);
    std::array<FieldElem, 4> beta = secant_beta(p, xi);
    if (proj_equal(p, gamma_act(xi, p)) ||
        (beta[0].is_zero() && beta[1].is_zero()) ||
        (beta[2].is_zero() && beta[3].is_zero()))
        throw DegenerateSecant("degenerate secant data");

    const TowerPtr& t = p.tower();
    FieldElem one(t, Rat(1));
    const FieldElem units[4] = {imag, -imag, one, -one};
    for (const FieldElem& e1 : units)
        for (const FieldElem& e2 : units) {
            LineForms lf;
            lf.xi = xi;
            lf.beta = beta;
            lf.eps1 = e1;
            lf.eps2 = e2;
            lf.f1 = form_of(t, 0, beta[0], a, e1 * beta[1]);
            lf.f2 = form_of(t, b, e2 * beta[2], c, beta[3]);
            std::vector<int> d2 = left_quotient_dims(Qt, {lf.f1, lf.f2}, 2);
            if (d2 != std::vector<int>{1, 2, 3}) continue;
            if (verify_line_module(Qt, lf.f1, lf.f2)) return lf;
        }
    throw NoValidPattern("no unit pattern cuts a line module");
}

LineForms conjugate_line_forms(const LineForms& lf) {
    const TowerPtr& t = lf.f1.tower;
    FieldElem mone(t, Rat(-1));
    auto conj = [&](const FieldElem& e) {
        return (e * e == mone) ? -e : e;
    };
    LineForms out = lf;
    out.eps1 = conj(lf.eps1);
    out.eps2 = conj(lf.eps2);
    int a, b, c;
    secant_indices(lf.xi, a, b, c);
    out.f1 = form_of(t, 0, lf.beta[0], a, out.eps1 * lf.beta[1]);
    out.f2 = form_of(t, b, out.eps2 * lf.beta[2], c, lf.beta[3]);
    return out;
}

bool annihilates_invariant_generator(const ProjPoint& p, const LineForms& lf,
                                     const FieldElem& imag) {
    const TowerPtr& t = p.tower();
    MatrixBasis qb = quaternion_basis(t, imag);
    auto [L1, L2] = line_forms_q(p, lf.xi);
    // the secant pair for the complementary translates flips the second
    // coefficient of each form
    std::array<FieldElem, 4> beta = lf.beta;
    int a, b, c;
    secant_indices(lf.xi, a, b, c);
    Subspace span_e(4, {nc_row(L1), nc_row(L2)});
    std::array<FieldElem, 4> r1{FieldElem(t), FieldElem(t), FieldElem(t),
                                FieldElem(t)};
    std::array<FieldElem, 4> r2 = r1;
    r1[0] = beta[0];
    r1[a] = -beta[1];
    r2[b] = beta[2];
    r2[c] = -beta[3];
    Subspace span_flip(4, {coeff_row(r1), coeff_row(r2)});

    // u = (0,1), v = (1,0) in the standard 2-vector coordinates; the
    // (u, v)-coordinates of q w are the swapped standard ones.
    for (const NcTensor* form : {&lf.f1, &lf.f2}) {
        std::array<FieldElem, 4> eu{FieldElem(t), FieldElem(t), FieldElem(t),
                                    FieldElem(t)};
        std::array<FieldElem, 4> ev = eu, epu = eu, epv = eu;
        for (const auto& [w, cj] : form->terms) {
            int j = static_cast<int>(w);
            const auto& q = qb.mats[j];
            eu[j] = cj * q[1][1];   // u-component of q u
            ev[j] = cj * q[0][1];   // v-component of q u
            epu[j] = cj * q[1][0];  // u-component of q v
            epv[j] = cj * q[0][0];  // v-component of q v
        }
        if (!span_e.contains(coeff_row(eu))) return false;
        if (!span_e.contains(coeff_row(ev))) return false;
        if (!span_flip.contains(coeff_row(epu))) return false;
        if (!span_flip.contains(coeff_row(epv))) return false;
    }
    return true;
}

bool verify_equivariant_table(const TowerPtr& t, const FieldElem& imag) {
    MatrixBasis qb = quaternion_basis(t, imag);
    FieldElem one(t, Rat(1)), zero(t);

    auto act2 = [&](const Mat2& q) {
        // swap to (u, v) coordinates with u = (0,1), v = (1,0)
        return Mat2{{{q[1][1], q[1][0]}, {q[0][1], q[0][0]}}};
    };
    auto act4 = [&](const Mat2& q) {
        Mat4 m = zero4(t);
        Mat2 s = act2(q);
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                m[r][c] = s[r][c];
                m[r + 2][c + 2] = s[r][c];
            }
        return m;
    };

    Mat4 id = zero4(t), phi1 = zero4(t), phi2 = zero4(t);
    for (int j = 0; j < 4; ++j) id[j][j] = one;
    phi1[0][0] = one;
    phi1[1][1] = -one;
    phi1[2][2] = -one;
    phi1[3][3] = one;
    phi2[3][0] = one;
    phi2[2][1] = one;
    phi2[1][2] = one;
    phi2[0][3] = one;
    Mat4 phi3 = mul4(phi1, phi2);

    if (!eq4(mul4(phi1, phi1), id)) return false;
    if (!eq4(mul4(phi2, phi2), id)) return false;
    if (!eq4(mul4(phi3, phi3), id)) return false;
    if (!eq4(phi3, mul4(phi2, phi1))) return false;

    const Mat4* phis[3] = {&phi1, &phi2, &phi3};
    for (int om = 1; om <= 3; ++om) {
        Mat2 qom = mat2_of(qb.mats[om]);
        Mat2 qinv = inv2(qom);
        for (int g = 0; g < 4; ++g) {
            Mat2 qg = mat2_of(qb.mats[g]);
            Mat2 conj = mul2(mul2(qom, qg), qinv);
            if (!eq4(mul4(*phis[om - 1], act4(qg)),
                     mul4(act4(conj), *phis[om - 1])))
                return false;
        }
    }
    return true;
}

}  // namespace skl
