#include "skl/checks.hpp"

#include <atomic>
#include <chrono>
#include <random>
#include <sstream>
#include <thread>

#include "skl/errors.hpp"
#include "skl/geometry.hpp"
#include "skl/linalg.hpp"
#include "skl/ncalg.hpp"
#include "skl/pointscheme.hpp"
#include "skl/repmodules.hpp"
#include "skl/sklyanin.hpp"
#include "skl/twist.hpp"

namespace skl {

namespace {

using CheckFn = std::pair<bool, std::string>;

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

std::string dims_str(const std::vector<int>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Params params_of(const Config& cfg) { return make_params(cfg.alpha, cfg.beta); }

/// Deterministic sample points: configured seeds first, then successive
/// integers, skipping degenerate slices.
std::vector<std::pair<ProjPoint, TowerPtr>> sampled_points(const CurveE& E,
                                                           const Config& cfg) {
    std::vector<std::pair<ProjPoint, TowerPtr>> out;
    std::vector<Rat> seeds = cfg.seeds;
    for (int next = 5; static_cast<int>(seeds.size()) < cfg.samples + 4;
         ++next)
        seeds.emplace_back(next);
    for (const Rat& s : seeds) {
        if (static_cast<int>(out.size()) >= cfg.samples) break;
        try {
            out.push_back(sample_point(E, s));
        } catch (const DegenerateSample&) {
        }
    }
    return out;
}

CheckFn check_params(const Config& cfg) {
    Params p = params_of(cfg);
    DerivedConstants d = derived_constants(p);
    Rat lhs = p.alpha_r + p.beta_r + p.gamma_r +
              p.alpha_r * p.beta_r * p.gamma_r;
    if (lhs != 0) return {false, "constraint residual " + rat_str(lhs)};
    std::ostringstream os;
    os << "gamma=" << rat_str(p.gamma_r) << " mu=" << rat_str(d.mu.rat())
       << " nu=" << rat_str(d.nu.rat())
       << " lambda=" << rat_str(d.lambda.rat())
       << " tower dim " << p.tower->dim();
    return {true, os.str()};
}

CheckFn check_hilbert_q(const Config& cfg) {
    Params p = params_of(cfg);
    std::vector<int> dims = hilbert_dims(q_relations(p), cfg.max_degree);
    for (int n = 0; n <= cfg.max_degree; ++n)
        if (dims[n] != binom(n + 3, 3))
            return {false, "dims " + dims_str(dims)};
    return {true, dims_str(dims)};
}

CheckFn check_hilbert_qtilde(const Config& cfg) {
    Params p = params_of(cfg);
    std::vector<int> dims = hilbert_dims(qtilde_relations(p), cfg.max_degree);
    for (int n = 0; n <= cfg.max_degree; ++n)
        if (dims[n] != binom(n + 3, 3))
            return {false, "dims " + dims_str(dims)};
    return {true, dims_str(dims)};
}

CheckFn check_hilbert_btilde(const Config& cfg) {
    Params p = params_of(cfg);
    std::vector<int> dims = two_sided_quotient_dims(
        qtilde_relations(p),
        {central_element(p, Central::Theta),
         central_element(p, Central::ThetaPrime)},
        cfg.max_degree);
    for (int n = 0; n <= cfg.max_degree; ++n) {
        long expect = binom(n + 3, 3) - 2 * binom(n + 1, 3) + binom(n - 1, 3);
        if (dims[n] != expect) return {false, "dims " + dims_str(dims)};
    }
    return {true, dims_str(dims)};
}

CheckFn check_hilbert_koszul(const Config& cfg) {
    Params p = params_of(cfg);
    int top = std::min(cfg.max_degree + 1, 5);
    for (const QuadAlgebra& A : {q_relations(p), qtilde_relations(p)}) {
        QuadAlgebra dual = koszul_dual(A);
        std::vector<int> dims = hilbert_dims(dual, top);
        for (int n = 0; n <= top; ++n)
            if (dims[n] != binom(4, n))
                return {false, "dual dims " + dims_str(dims)};
        for (int n = 1; n <= cfg.max_degree; ++n) {
            long sum = 0, sign = 1;
            for (int k = 0; k <= n; ++k) {
                sum += sign * hilbert_dim(A, k) *
                       (n - k <= top ? hilbert_dim(dual, n - k) : 0);
                sign = -sign;
            }
            if (sum != 0)
                return {false, "convolution residual at degree " +
                                   std::to_string(n)};
        }
    }
    return {true, "duals 1,4,6,4,1,0; alternating convolution vanishes"};
}

CheckFn check_center_q(const Config& cfg) {
    Params p = params_of(cfg);
    QuadAlgebra Q = q_relations(p);
    for (Central w : {Central::Omega, Central::OmegaPrime})
        if (!is_central(Q, central_element(p, w)))
            return {false, "non-central element"};
    return {true, "both degree-2 elements commute with every generator"};
}

CheckFn check_center_qtilde(const Config& cfg) {
    Params p = params_of(cfg);
    QuadAlgebra Qt = qtilde_relations(p);
    for (Central w : {Central::Theta, Central::ThetaPrime})
        if (!is_central(Qt, central_element(p, w)))
            return {false, "non-central element"};
    return {true, "both degree-2 elements commute with every generator"};
}

CheckFn check_btilde_squares(const Config& cfg) {
    Params p = params_of(cfg);
    QuadAlgebra Qt = qtilde_relations(p);
    std::vector<NcTensor> mods = {central_element(p, Central::Theta),
                                  central_element(p, Central::ThetaPrime)};
    int signs[4][4] = {{1, -1, -1, -1},
                       {1, -1, 1, 1},
                       {1, 1, -1, 1},
                       {1, 1, 1, -1}};
    for (const auto& s : signs) {
        NcTensor lin = nc_zero(4, 1, p.tower);
        for (int j = 0; j < 4; ++j)
            nc_add_term(lin, j, FieldElem(p.tower, Rat(s[j])));
        NcTensor sq = nc_tensor(lin, lin);
        if (!is_zero_in_quotient(Qt, sq, mods))
            return {false, "nonzero square for signs " +
                               std::to_string(s[1]) + "," +
                               std::to_string(s[2]) + "," +
                               std::to_string(s[3])};
        if (is_zero_in_quotient(Qt, sq, {}))
            return {false, "square already zero before the quotient"};
    }
    return {true, "all four squares die exactly in the quotient"};
}

CheckFn check_twist_span(const Config& cfg) {
    Params p = params_of(cfg);
    QuadAlgebra Q = q_relations(p);
    QuadAlgebra Qt = qtilde_relations(p);
    CharacterAssignment ch = sklyanin_characters();
    Cocycle2 mu = cocycle_from_matrix_basis(quaternion_basis(p.tower, p.i));
    QuadAlgebra twisted = twist_algebra(Q, ch, mu, Qt.labels());
    if (!twisted.span_in_degree(2).same_span(Qt.span_in_degree(2)))
        return {false, "twisted relation span differs"};
    QuadAlgebra back = twist_algebra(twisted, ch, mu, Q.labels());
    if (!back.span_in_degree(2).same_span(Q.span_in_degree(2)))
        return {false, "double twist does not recover the original span"};
    return {true, "twist lands on the companion span; double twist returns"};
}

CheckFn check_twist_central(const Config& cfg) {
    Params p = params_of(cfg);
    CharacterAssignment ch = sklyanin_characters();
    Cocycle2 mu = cocycle_from_matrix_basis(quaternion_basis(p.tower, p.i));
    NcTensor tw_omega =
        twist_element(central_element(p, Central::Omega), ch, mu);
    NcTensor tw_omegap =
        twist_element(central_element(p, Central::OmegaPrime), ch, mu);
    FieldElem mone(p.tower, Rat(-1));
    if (!nc_equal(tw_omega,
                  nc_scale(mone, central_element(p, Central::Theta))))
        return {false, "first central element mismatch"};
    if (!nc_equal(tw_omegap,
                  nc_scale(mone, central_element(p, Central::ThetaPrime))))
        return {false, "second central element mismatch"};
    return {true, "both central elements map to minus their companions"};
}

CheckFn check_points_scheme(const Config& cfg) {
    Params p = params_of(cfg);
    PointFamily f = build_point_family(p);
    std::vector<ProjPoint> all = f.all();
    for (size_t i = 0; i < all.size(); ++i)
        for (size_t j = i + 1; j < all.size(); ++j)
            if (proj_equal(all[i], all[j]))
                return {false, "coincident points " + point_str(all[i])};
    for (const ProjPoint& u : all)
        if (!proj_equal(theta(f, theta(f, u)), u))
            return {false, "permutation not an involution at " + point_str(u)};
    PointSchemeReport rep = verify_point_scheme(qtilde_relations(p), f);
    std::ostringstream os;
    os << rep.rank3_matches << "/20 rank-3 kernel matches, "
       << rep.random_rank4 << "/20 random full-rank";
    return {rep.ok, os.str()};
}

CheckFn check_points_minors(const Config& cfg) {
    Params p = params_of(cfg);
    PointFamily f = build_point_family(p);
    bool ok = minors_check(qtilde_relations(p), p, f);
    return {ok, "15 minors vanish on the family; span matches"};
}

CheckFn check_points_quadrics(const Config& cfg) {
    Params p = params_of(cfg);
    if (!four_quadrics_independence(p))
        return {false, "diagonal quadrics dependent"};
    return {true, "coefficient determinant nonzero; span is the squares"};
}

CheckFn check_point_modules(const Config& cfg) {
    Params p = params_of(cfg);
    PointFamily f = build_point_family(p);
    QuadAlgebra Qt = qtilde_relations(p);
    for (const ProjPoint& u : f.all()) point_module_witness(Qt, f, u, 6);
    return {true, "20 sequences of length 6 annihilate every relation"};
}

CheckFn check_theta_constants(const Config& cfg) {
    Params p = params_of(cfg);
    PointFamily f = build_point_family(p);
    Rat expect[5] = {Rat(1), Rat(4), (p.beta_r - 1) * (p.gamma_r + 1),
                     (p.alpha_r + 1) * (p.gamma_r - 1),
                     (p.alpha_r - 1) * (p.beta_r + 1)};
    std::string witness;
    for (int g = 0; g < 5; ++g) {
        for (const ProjPoint& u : f.groups[g]) {
            FieldElem k = theta_constant(f, u);
            if (k.is_zero()) return {false, "vanishing at " + point_str(u)};
            if (!k.is_rational() || k.rat() != expect[g])
                return {false, "unexpected value " + k.str() + " at " +
                                   point_str(u)};
        }
        witness += (g ? "," : "") + rat_str(expect[g]);
    }
    return {true, "group constants " + witness + ", all nonzero"};
}

CheckFn check_curve_samples(const Config& cfg) {
    Params p = params_of(cfg);
    CurveE E = curve_of(p);
    auto pts = sampled_points(E, cfg);
    if (static_cast<int>(pts.size()) < cfg.samples)
        return {false, "could not draw enough sample points"};
    for (const auto& [pt, t] : pts) {
        if (!on_curve(E, pt)) return {false, "off curve: " + point_str(pt)};
        int zeros = 0;
        for (int j = 0; j < 4; ++j) zeros += pt.c[j].is_zero();
        if (zeros > 1)
            return {false, "several vanishing coordinates: " + point_str(pt)};
        if (!on_curve(E, neg(pt)))
            return {false, "sign involution leaves the curve"};
        for (int g = 1; g < 4; ++g)
            if (!on_curve(E, gamma_act(g, pt)))
                return {false, "flip leaves the curve"};
    }
    return {true, std::to_string(pts.size()) + " points on both quadrics"};
}

CheckFn check_curve_translation(const Config& cfg) {
    Params p = params_of(cfg);
    CurveE E = curve_of(p);
    std::array<Quadric, 4> Qs = singular_quadrics(p);
    auto firsts = sampled_points(E, cfg);
    int pairs = 0;
    for (size_t k = 0; k < firsts.size(); ++k) {
        const auto& [pt, t1] = firsts[k];
        if (pt.c[0].is_zero()) continue;  // secants through neg(p) degenerate
        Rat s2 = cfg.seeds[(k + 1) % cfg.seeds.size()];
        ProjPoint qt;
        try {
            qt = sample_point_over(E, s2, t1).first;
        } catch (const DegenerateSample&) {
            qt = sample_point_over(E, s2 + 7, t1).first;
        }
        for (int i = 1; i < 4; ++i) {
            if (!line_on_quadric(neg(pt), gamma_act(i, pt), Qs[i]))
                return {false, "secant misses its quadric at " +
                                   point_str(pt)};
            if (!coplanar(neg(pt), gamma_act(i, pt), neg(qt),
                          gamma_act(i, qt)))
                return {false, "four translates not coplanar at " +
                                   point_str(pt)};
        }
        if (!line_on_quadric(neg(pt), pt, Qs[0]))
            return {false, "self secant misses the base quadric"};
        ++pairs;
    }
    if (pairs < cfg.samples - 1)
        return {false, "too few usable pairs: " + std::to_string(pairs)};
    return {true, std::to_string(pairs) + " pairs verified on all quadrics"};
}

CheckFn check_curve_sigma(const Config& cfg) {
    Params p = params_of(cfg);
    QuadAlgebra Q = q_relations(p);
    CurveE E = curve_of(p);
    for (const auto& [pt, t] : sampled_points(E, cfg)) {
        ProjPoint im = sigma(Q, pt);
        if (!on_curve(E, im))
            return {false, "kernel image off curve at " + point_str(pt)};
        for (int g = 1; g < 4; ++g)
            if (!proj_equal(sigma(Q, gamma_act(g, pt)), gamma_act(g, im)))
                return {false, "kernel map does not commute with flips"};
    }
    return {true, "kernel map preserves the curve and commutes with flips"};
}

CheckFn check_cross_ratio(const Config& cfg) {
    Params p = params_of(cfg);
    if (!branch_cross_ratio_check(p))
        return {false, "branch cross-ratio orbit mismatch"};
    DerivedConstants d = derived_constants(p);
    return {true, "orbit matches lambda = " + rat_str(d.lambda.rat())};
}

CheckFn check_weierstrass(const Config& cfg) {
    Params p = params_of(cfg);
    TowerPtr q = Tower::rationals();
    FieldElem lam(q, derived_constants(p).lambda.rat());
    WeierstrassCurve W{lam};
    FieldElem zero(q), one(q, Rat(1));
    std::array<FieldElem, 3> O{zero, one, zero};
    std::vector<std::array<FieldElem, 3>> tors = {
        O, {zero, zero, one}, {one, zero, one}, {lam, zero, one}};
    auto same = [](const std::array<FieldElem, 3>& a,
                   const std::array<FieldElem, 3>& b) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (a[i] * b[j] != a[j] * b[i]) return false;
        return true;
    };
    for (const auto& T : tors)
        if (!same(weierstrass_add(W, T, T), O))
            return {false, "doubling misses the identity"};
    for (const auto& A : tors)
        for (const auto& B : tors) {
            auto S = weierstrass_add(W, A, B);
            bool found = false;
            for (const auto& T : tors) found = found || same(S, T);
            if (!found) return {false, "chord sum leaves the four points"};
        }
    FieldElem x(q, Rat(2));
    auto [t, y] = sqrt_adjoin(q, x * (x - one) * (x - lam));
    std::array<FieldElem, 3> P{embed(x, t), y, FieldElem(t, Rat(1))};
    if (weierstrass_add(W, P, P)[2].is_zero())
        return {false, "a generic point doubles to the identity"};
    return {true, "the four special points form a Klein four-group"};
}

CheckFn check_line_modules(const Config& cfg) {
    Params p = params_of(cfg);
    QuadAlgebra Qt = qtilde_relations(p);
    CurveE E = curve_of(p);
    Config three = cfg;
    three.samples = 3;
    int verified = 0;
    for (const auto& [pt, t] : sampled_points(E, three)) {
        FieldElem imag = FieldElem::generator(t, 1);
        for (int xi = 1; xi <= 3; ++xi) {
            LineForms lf = line_forms_qtilde(Qt, pt, xi, imag);
            if (!verify_line_module(Qt, lf.f1, lf.f2))
                return {false, "forms fail at " + point_str(pt)};
            LineForms cj = conjugate_line_forms(lf);
            if (!verify_line_module(Qt, cj.f1, cj.f2))
                return {false, "conjugate forms fail at " + point_str(pt)};
            ++verified;
        }
    }
    return {true, std::to_string(verified) +
                      " flip/point combinations give dims 1,2,3,4,5"};
}

CheckFn check_lines_random(const Config& cfg) {
    Params p = params_of(cfg);
    QuadAlgebra Qt = qtilde_relations(p);
    std::mt19937 rng(1009);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 5; ++trial) {
        NcTensor f1 = nc_zero(4, 1, p.tower), f2 = nc_zero(4, 1, p.tower);
        for (int j = 0; j < 4; ++j) {
            nc_add_term(f1, j, FieldElem(p.tower, Rat(d(rng))));
            nc_add_term(f2, j, FieldElem(p.tower, Rat(d(rng))));
        }
        std::vector<int> dims = left_quotient_dims(Qt, {f1, f2}, 2);
        if (dims[2] == 3)
            return {false, "random pair landed on a line module"};
    }
    return {true, "5 random pairs miss the line-module dimension"};
}

CheckFn check_equivariant(const Config& cfg) {
    Params p = params_of(cfg);
    if (!verify_equivariant_table(p.tower, p.i))
        return {false, "equivariance relations fail"};
    return {true, "frame intertwines conjugation; Klein four-group"};
}

CheckFn check_fat_points(const Config& cfg) {
    Params p = params_of(cfg);
    QuadAlgebra Q = q_relations(p);
    CurveE E = curve_of(p);
    Config two = cfg;
    two.samples = std::min(cfg.samples, 2);
    for (const auto& [pt, t] : sampled_points(E, two)) {
        FieldElem imag = FieldElem::generator(t, 1);
        FieldElem one(t, Rat(1)), zero(t);
        for (const std::array<FieldElem, 2>& v :
             {std::array<FieldElem, 2>{one, zero},
              std::array<FieldElem, 2>{zero, one},
              std::array<FieldElem, 2>{one, imag}})
            if (!fat_point_span_check(Q, pt, imag, 3, v))
                return {false, "spanning fails at " + point_str(pt)};
    }
    return {true, "all orbit steps span the 2-dimensional column space"};
}

CheckFn check_cohomology(const Config& cfg) {
    (void)cfg;
    GradingGroup G{{2, 2}};
    std::vector<bool> swaps = {false, false, true, true};
    std::array<std::array<int, 2>, 4> f = {
        {{1, 1}, {-1, -1}, {1, 1}, {-1, -1}}};
    CohomologyReport rep = mu2_cohomology(G, swaps, f);
    if (rep.z1_size != 4 || rep.b1_size != 2 || rep.h1_size != 2)
        return {false, "sizes " + std::to_string(rep.z1_size) + "/" +
                           std::to_string(rep.b1_size) + "/" +
                           std::to_string(rep.h1_size)};
    if (!rep.is_cocycle || rep.is_coboundary)
        return {false, "distinguished function misclassified"};
    return {true, "|Z1| = 4, |B1| = 2, |H1| = 2; the marked cocycle is "
                  "not a coboundary"};
}

CheckFn check_torsor(const Config& cfg) {
    (void)cfg;
    for (int n : {2, 3})
        if (!torsor_strong_grading_check(n))
            return {false, "strong grading fails for n = " +
                               std::to_string(n)};
    return {true, "clock/shift grading is strong for n = 2, 3"};
}

}  // namespace

void validate_config(const Config& c) {
    if (c.max_degree < 2 || c.max_degree > 5)
        throw ConfigError("max_degree must be between 2 and 5");
    if (c.samples < 1) throw ConfigError("samples must be at least 1");
    if (c.format != "json" && c.format != "md")
        throw ConfigError("format must be json or md");
    if (c.alpha == 0 || c.beta == 0)
        throw ConfigError("alpha and beta must be nonzero");
}

const std::vector<Check>& check_registry() {
    static const std::vector<Check> registry = {
        {"params.validate", "params",
         "parameter constraint holds and the derived constants exist",
         check_params},
        {"hilbert.q", "hilbert",
         "untwisted algebra has the 4-variable polynomial series",
         check_hilbert_q},
        {"hilbert.qtilde", "hilbert",
         "twisted algebra has the 4-variable polynomial series",
         check_hilbert_qtilde},
        {"hilbert.btilde", "hilbert",
         "quotient by the two central elements has series (1-t^2)^2/(1-t)^4",
         check_hilbert_btilde},
        {"hilbert.koszul", "hilbert",
         "both quadratic duals are exterior-sized and the alternating "
         "convolution vanishes",
         check_hilbert_koszul},
        {"center.q", "center",
         "the two degree-2 elements of the untwisted algebra are central",
         check_center_q},
        {"center.qtilde", "center",
         "the two degree-2 elements of the twisted algebra are central",
         check_center_qtilde},
        {"center.btilde-squares", "center",
         "four signed sums of the generators square to zero in the quotient "
         "by the central pair",
         check_btilde_squares},
        {"twist.span", "twist",
         "the quaternion-cocycle twist carries each relation span to the "
         "companion and back",
         check_twist_span},
        {"twist.central", "twist",
         "the twist sends each central element to minus its companion",
         check_twist_central},
        {"points.scheme", "points",
         "all 20 special points are distinct with rank-3 relation matrix "
         "and kernel the involution image; random points have full rank",
         check_points_scheme},
        {"points.minors", "points",
         "the 15 quartic minors vanish on the family and span the factored "
         "list",
         check_points_minors},
        {"points.quadrics", "points",
         "the four diagonal quadrics are independent with the predicted "
         "determinant",
         check_points_quadrics},
        {"points.modules", "points",
         "every family point carries a length-6 module witness",
         check_point_modules},
        {"points.theta-constants", "points",
         "the central sum of squares acts by the predicted nonzero scalar "
         "on each orbit",
         check_theta_constants},
        {"curve.samples", "curve",
         "sampled points lie on both quadrics with at most one vanishing "
         "coordinate and stable under the symmetries",
         check_curve_samples},
        {"curve.translation", "curve",
         "secants through the flipped translates lie on the singular "
         "quadrics and the four translates are coplanar",
         check_curve_translation},
        {"curve.sigma", "curve",
         "the relation-kernel map preserves the curve and commutes with "
         "the flips",
         check_curve_sigma},
        {"curve.cross-ratio", "curve",
         "the branch-point cross-ratio orbit equals the orbit of lambda",
         check_cross_ratio},
        {"curve.weierstrass", "curve",
         "the four distinguished cubic points form a Klein four-group "
         "under chord-tangent addition",
         check_weierstrass},
        {"lines.modules", "lines",
         "discovered form pairs for every flip give quotient dims "
         "1,2,3,4,5, as do their conjugates",
         check_line_modules},
        {"lines.random", "lines",
         "random form pairs miss the line-module dimension in degree 2",
         check_lines_random},
        {"lines.equivariant", "lines",
         "the explicit degree-0 frame intertwines the quaternion "
         "conjugation action",
         check_equivariant},
        {"fatpoints.span", "fatpoints",
         "the four weighted quaternion columns span the plane along the "
         "kernel orbit",
         check_fat_points},
        {"cohomology.mu2", "cohomology",
         "sign-valued 1-cocycles number 4 with 2 coboundaries; the marked "
         "cocycle is nontrivial",
         check_cohomology},
        {"torsor.strong-grading", "torsor",
         "matrix algebras under the clock/shift grading are strongly "
         "graded",
         check_torsor},
    };
    return registry;
}

std::vector<const Check*> checks_in_group(const std::string& group) {
    std::vector<const Check*> out;
    for (const Check& c : check_registry())
        if (group == "all" || c.group == group) out.push_back(&c);
    return out;
}

std::vector<CheckResult> run_checks(const std::vector<const Check*>& checks,
                                    const Config& cfg, int workers) {
    std::vector<CheckResult> results(checks.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i = next.fetch_add(1); i < checks.size();
             i = next.fetch_add(1)) {
            const Check& c = *checks[i];
            CheckResult r;
            r.id = c.id;
            r.claim = c.claim;
            auto start = std::chrono::steady_clock::now();
            try {
                auto [ok, witness] = c.fn(cfg);
                r.status = ok ? "pass" : "fail";
                r.witness = witness;
            } catch (const std::exception& e) {
                r.status = "fail";
                r.witness = e.what();
            }
            r.elapsed = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            results[i] = std::move(r);
        }
    };
    int n = std::max(1, std::min<int>(workers, checks.size()));
    std::vector<std::thread> pool;
    for (int k = 1; k < n; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    return results;
}

}  // namespace skl
