// End-to-end acceptance gate: thirteen criteria, one line each, exact
// arithmetic throughout. Exit code is the number of failed criteria.

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "skl/checks.hpp"
#include "skl/errors.hpp"
#include "skl/tower.hpp"

using namespace skl;

namespace {

int failures = 0;

void line(int n, const std::string& what, bool ok,
          const std::string& detail = "") {
    std::printf("criterion %2d: %s -- %s%s\n", n, ok ? "PASS" : "FAIL",
                what.c_str(), detail.empty() ? "" : (" [" + detail + "]").c_str());
    if (!ok) ++failures;
}

/// Runs the registry checks with the given ids; true iff all pass.
std::pair<bool, std::string> run_ids(const Config& cfg,
                                     const std::vector<std::string>& ids) {
    std::vector<const Check*> picked;
    for (const std::string& id : ids)
        for (const Check& c : check_registry())
            if (c.id == id) picked.push_back(&c);
    if (picked.size() != ids.size()) return {false, "unknown check id"};
    for (const CheckResult& r : run_checks(picked, cfg))
        if (r.status != "pass") return {false, r.id + ": " + r.witness};
    return {true, ""};
}

struct Criterion {
    std::string what;
    std::vector<std::string> ids;
};

const std::vector<Criterion>& criteria_1_to_12() {
    static const std::vector<Criterion> cs = {
        {"graded dimensions 1,4,10,20,35 for both presentations",
         {"hilbert.q", "hilbert.qtilde"}},
        {"twist carries relations and central elements to their companions "
         "and back",
         {"twist.span", "twist.central"}},
        {"the degree-2 elements are central on both sides",
         {"center.q", "center.qtilde"}},
        {"quotient dimensions 1,4,8,12,16 and four square-zero elements",
         {"hilbert.btilde", "center.btilde-squares"}},
        {"20-point scheme: rank 3, kernel = involution image, involution "
         "squares to id, random rank 4, minor span",
         {"points.scheme", "points.minors"}},
        {"central scalar on each point orbit matches the closed form, "
         "nonzero",
         {"points.theta-constants"}},
        {"sampled curve points: coordinates, secants on the singular "
         "quadrics, coplanar translates, kernel map equivariance",
         {"curve.samples", "curve.translation", "curve.sigma"}},
        {"branch cross-ratio orbit equals the lambda orbit",
         {"curve.cross-ratio"}},
        {"line modules: discovered forms give dims 1..5, random pairs fail",
         {"lines.modules", "lines.random"}},
        {"Koszul duals sized 1,4,6,4,1,0 with vanishing alternating "
         "convolution",
         {"hilbert.koszul"}},
        {"sign cohomology sizes 4/2/2 with a non-coboundary cocycle; "
         "matrix algebras strongly graded for n = 2, 3",
         {"cohomology.mu2", "torsor.strong-grading"}},
        {"explicit equivariant frame intertwines the quaternion action",
         {"lines.equivariant"}},
    };
    return cs;
}

bool field_axioms() {
    TowerPtr t = Tower::rationals();
    FieldElem i2;
    std::tie(t, i2) = sqrt_adjoin(t, FieldElem(Tower::rationals(), Rat(-1)));
    FieldElem r2;
    std::tie(t, r2) = sqrt_adjoin(t, FieldElem(t, Rat(2)));
    FieldElem r7;
    std::tie(t, r7) = sqrt_adjoin(t, FieldElem(t, Rat(-7, 3)));

    std::mt19937 rng(20230823);
    std::uniform_int_distribution<int> num(-20, 20);
    auto rand_elem = [&] {
        std::vector<Rat> c(t->dim());
        for (Rat& x : c) x = Rat(num(rng), 1 + std::abs(num(rng)));
        return FieldElem(t, c);
    };
    FieldElem one(t, Rat(1));
    for (int trial = 0; trial < 40; ++trial) {
        FieldElem a = rand_elem(), b = rand_elem(), c = rand_elem();
        if ((a + b) + c != a + (b + c)) return false;
        if ((a * b) * c != a * (b * c)) return false;
        if (a * (b + c) != a * b + a * c) return false;
        if (a * b != b * a) return false;
        if (a + (-a) != FieldElem(t)) return false;
        if (!a.is_zero() && a * a.inv() != one) return false;
        if (!b.is_zero() && (a / b) * b != a) return false;
    }
    return true;
}

bool zero_divisor_surfaces() {
    // x^2 - 4 is reducible; (x - 2) is nonzero but not a unit, and
    // inversion must say so rather than return a wrong answer.
    TowerPtr t = adjoin_root(Tower::rationals(), "r",
                             {FieldElem(Tower::rationals(), Rat(-4)),
                              FieldElem(Tower::rationals(), Rat(0))});
    FieldElem x = FieldElem::generator(t, 1) - FieldElem(t, Rat(2));
    if (x.is_zero()) return false;
    try {
        (void)x.inv();
        return false;
    } catch (const ZeroDivisor&) {
        return true;
    }
}

}  // namespace

int main() {
    Config defaults;
    const auto& cs = criteria_1_to_12();
    for (size_t k = 0; k < cs.size(); ++k) {
        auto [ok, detail] = run_ids(defaults, cs[k].ids);
        line(static_cast<int>(k) + 1, cs[k].what, ok, detail);
    }

    bool ok13 = field_axioms() && zero_divisor_surfaces();
    std::string detail13;
    if (ok13) {
        Config second;
        second.alpha = Rat(3);
        second.beta = Rat(5);
        for (const Criterion& c : cs) {
            auto [ok, detail] = run_ids(second, c.ids);
            if (!ok) {
                ok13 = false;
                detail13 = "second preset: " + detail;
                break;
            }
        }
    } else {
        detail13 = "scalar arithmetic axioms or zero-divisor reporting";
    }
    line(13,
         "random-element field axioms, zero divisors surfaced, and the "
         "second parameter preset (3,5) passes everything above",
         ok13, detail13);

    if (failures == 0) std::printf("all 13 criteria passed\n");
    return failures;
}
