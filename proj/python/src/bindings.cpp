#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "skl/checks.hpp"
#include "skl/errors.hpp"
#include "skl/pointscheme.hpp"
#include "skl/repmodules.hpp"
#include "skl/report.hpp"
#include "skl/sklyanin.hpp"
#include "skl/twist.hpp"

namespace py = pybind11;
using namespace skl;

namespace {

Config make_config(const std::string& alpha, const std::string& beta,
                   int max_degree, int samples) {
    Config cfg;
    cfg.alpha = parse_rat(alpha);
    cfg.beta = parse_rat(beta);
    cfg.max_degree = max_degree;
    cfg.samples = samples;
    validate_config(cfg);
    return cfg;
}

py::dict result_dict(const CheckResult& r) {
    py::dict d;
    d["id"] = r.id;
    d["claim"] = r.claim;
    d["status"] = r.status;
    d["witness"] = r.witness;
    d["elapsed"] = r.elapsed;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "Exact verification of a 4-generator quadratic algebra, its "
        "cocycle twist, and the attached projective geometry.";

    py::register_exception<ConfigError>(m, "ConfigError");
    py::register_exception<ZeroDivisor>(m, "ZeroDivisor");

    m.def(
        "derived_constants",
        [](const std::string& alpha, const std::string& beta) {
            Params p = make_params(parse_rat(alpha), parse_rat(beta));
            DerivedConstants d = derived_constants(p);
            py::dict out;
            out["gamma"] = rat_str(p.gamma_r);
            out["mu"] = rat_str(d.mu.rat());
            out["nu"] = rat_str(d.nu.rat());
            out["lambda"] = rat_str(d.lambda.rat());
            return out;
        },
        py::arg("alpha") = "2", py::arg("beta") = "3",
        "gamma and the three derived rational constants, as strings");

    m.def(
        "hilbert",
        [](const std::string& variant, const std::string& alpha,
           const std::string& beta, int max_degree) {
            Params p = make_params(parse_rat(alpha), parse_rat(beta));
            if (variant == "q")
                return hilbert_dims(q_relations(p), max_degree);
            if (variant == "qtilde")
                return hilbert_dims(qtilde_relations(p), max_degree);
            if (variant == "btilde")
                return two_sided_quotient_dims(
                    qtilde_relations(p),
                    {central_element(p, Central::Theta),
                     central_element(p, Central::ThetaPrime)},
                    max_degree);
            if (variant == "koszul-dual")
                return hilbert_dims(koszul_dual(q_relations(p)), max_degree);
            throw ConfigError("unknown variant: " + variant);
        },
        py::arg("variant"), py::arg("alpha") = "2", py::arg("beta") = "3",
        py::arg("max_degree") = 4,
        "graded dimensions for q, qtilde, btilde, or koszul-dual");

    m.def(
        "twist_roundtrip",
        [](const std::string& alpha, const std::string& beta) {
            Params p = make_params(parse_rat(alpha), parse_rat(beta));
            QuadAlgebra Q = q_relations(p);
            QuadAlgebra Qt = qtilde_relations(p);
            CharacterAssignment ch = sklyanin_characters();
            Cocycle2 mu =
                cocycle_from_matrix_basis(quaternion_basis(p.tower, p.i));
            QuadAlgebra tw = twist_algebra(Q, ch, mu, Qt.labels());
            QuadAlgebra back = twist_algebra(tw, ch, mu, Q.labels());
            return tw.span_in_degree(2).same_span(Qt.span_in_degree(2)) &&
                   back.span_in_degree(2).same_span(Q.span_in_degree(2));
        },
        py::arg("alpha") = "2", py::arg("beta") = "3",
        "twisted relations span the companion presentation and back");

    m.def(
        "point_scheme",
        [](const std::string& alpha, const std::string& beta) {
            Params p = make_params(parse_rat(alpha), parse_rat(beta));
            PointSchemeReport rep =
                verify_point_scheme(qtilde_relations(p), build_point_family(p));
            py::dict out;
            out["rank3_matches"] = rep.rank3_matches;
            out["random_rank4"] = rep.random_rank4;
            out["ok"] = rep.ok;
            return out;
        },
        py::arg("alpha") = "2", py::arg("beta") = "3",
        "rank/kernel verification over the 20-point family");

    m.def(
        "theta_constants",
        [](const std::string& alpha, const std::string& beta) {
            Params p = make_params(parse_rat(alpha), parse_rat(beta));
            PointFamily f = build_point_family(p);
            std::vector<std::string> out;
            for (int g = 0; g < 5; ++g)
                out.push_back(theta_constant(f, f.groups[g][0]).str());
            return out;
        },
        py::arg("alpha") = "2", py::arg("beta") = "3",
        "the scalar action of the central sum of squares per point orbit");

    m.def(
        "cross_ratio_ok",
        [](const std::string& alpha, const std::string& beta) {
            return branch_cross_ratio_check(
                make_params(parse_rat(alpha), parse_rat(beta)));
        },
        py::arg("alpha") = "2", py::arg("beta") = "3");

    m.def("torsor_strong_grading", &torsor_strong_grading_check, py::arg("n"),
          "clock/shift grading of the n x n matrix algebra is strong");

    m.def("cohomology_sizes", [] {
        GradingGroup G{{2, 2}};
        std::vector<bool> swaps = {false, false, true, true};
        std::array<std::array<int, 2>, 4> f = {
            {{1, 1}, {-1, -1}, {1, 1}, {-1, -1}}};
        CohomologyReport rep = mu2_cohomology(G, swaps, f);
        py::dict out;
        out["z1"] = rep.z1_size;
        out["b1"] = rep.b1_size;
        out["h1"] = rep.h1_size;
        out["is_cocycle"] = rep.is_cocycle;
        out["is_coboundary"] = rep.is_coboundary;
        return out;
    });

    m.def("list_checks", [] {
        py::list out;
        for (const Check& c : check_registry()) {
            py::dict d;
            d["id"] = c.id;
            d["group"] = c.group;
            d["claim"] = c.claim;
            out.append(d);
        }
        return out;
    });

    m.def(
        "verify",
        [](const std::string& group, const std::string& alpha,
           const std::string& beta, int max_degree, int samples) {
            Config cfg = make_config(alpha, beta, max_degree, samples);
            std::vector<const Check*> checks = checks_in_group(group);
            if (checks.empty()) throw ConfigError("unknown group: " + group);
            py::list out;
            for (const CheckResult& r : run_checks(checks, cfg))
                out.append(result_dict(r));
            return out;
        },
        py::arg("group") = "all", py::arg("alpha") = "2",
        py::arg("beta") = "3", py::arg("max_degree") = 4,
        py::arg("samples") = 5,
        "run a check group (or 'all') and return the result records");

    m.def(
        "report_json",
        [](const std::string& group, const std::string& alpha,
           const std::string& beta, int max_degree, int samples) {
            Config cfg = make_config(alpha, beta, max_degree, samples);
            std::vector<const Check*> checks = checks_in_group(group);
            if (checks.empty()) throw ConfigError("unknown group: " + group);
            return report_to_json(make_report(cfg, run_checks(checks, cfg)))
                .dump(2);
        },
        py::arg("group") = "all", py::arg("alpha") = "2",
        py::arg("beta") = "3", py::arg("max_degree") = 4,
        py::arg("samples") = 5, "the same run, rendered as a JSON report");
}
