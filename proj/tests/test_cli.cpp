#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "skl/errors.hpp"
#include "skl/report.hpp"

using namespace skl;

TEST_CASE("config validation") {
    Config c;
    CHECK_NOTHROW(validate_config(c));

    Config bad = c;
    bad.max_degree = 6;
    CHECK_THROWS_AS(validate_config(bad), ConfigError);
    bad.max_degree = 1;
    CHECK_THROWS_AS(validate_config(bad), ConfigError);

    bad = c;
    bad.samples = 0;
    CHECK_THROWS_AS(validate_config(bad), ConfigError);

    bad = c;
    bad.format = "xml";
    CHECK_THROWS_AS(validate_config(bad), ConfigError);

    bad = c;
    bad.alpha = 0;
    CHECK_THROWS_AS(validate_config(bad), ConfigError);
}

TEST_CASE("registry integrity") {
    const auto& reg = check_registry();
    std::set<std::string> ids;
    for (const Check& c : reg) {
        CHECK(ids.insert(c.id).second);  // unique ids
        CHECK_FALSE(c.claim.empty());
        CHECK(c.id.rfind(c.group + ".", 0) == 0);  // id starts with group
    }

    // every check is reachable through exactly one group
    size_t total = 0;
    std::set<std::string> groups;
    for (const Check& c : reg) groups.insert(c.group);
    for (const std::string& g : groups) total += checks_in_group(g).size();
    CHECK(total == reg.size());
    CHECK(checks_in_group("all").size() == reg.size());
    CHECK(checks_in_group("no-such-group").empty());
}

TEST_CASE("cheap checks run and pass deterministically") {
    Config cfg;
    std::vector<const Check*> picked;
    for (const Check& c : check_registry())
        if (c.id == "params.validate" || c.id == "cohomology.mu2" ||
            c.id == "torsor.strong-grading")
            picked.push_back(&c);
    REQUIRE(picked.size() == 3);

    auto r1 = run_checks(picked, cfg, 2);
    auto r2 = run_checks(picked, cfg, 1);
    REQUIRE(r1.size() == 3);
    for (size_t i = 0; i < r1.size(); ++i) {
        CHECK(r1[i].status == "pass");
        CHECK(r1[i].id == picked[i]->id);  // registry order kept
        CHECK(r1[i].witness == r2[i].witness);
    }
}

TEST_CASE("failures carry the exception message") {
    Config cfg;
    Check boom{"boom.x", "boom", "always throws",
               [](const Config&) -> std::pair<bool, std::string> {
                   throw VerificationFailed("witness: (1:2:3:4)");
               }};
    auto res = run_checks({&boom}, cfg, 1);
    REQUIRE(res.size() == 1);
    CHECK(res[0].status == "fail");
    CHECK(res[0].witness == "witness: (1:2:3:4)");
}

TEST_CASE("json report round-trips") {
    Config cfg;
    cfg.alpha = Rat(3);
    cfg.beta = Rat(5);
    cfg.seeds = {Rat(1), Rat(-7, 3)};
    std::vector<CheckResult> results = {
        {"a.one", "first claim", "pass", "all good", 0.25},
        {"a.two", "second claim", "fail", "residual 3/7 at (1:0:0:1)", 1.5}};
    Report rep = make_report(cfg, results);

    Report back = report_from_json(report_to_json(rep));
    CHECK(back.generated == rep.generated);
    CHECK(back.config.alpha == rep.config.alpha);
    CHECK(back.config.beta == rep.config.beta);
    CHECK(back.config.max_degree == rep.config.max_degree);
    CHECK(back.config.samples == rep.config.samples);
    CHECK(back.config.seeds == rep.config.seeds);
    CHECK(back.config.format == rep.config.format);
    CHECK(back.results == rep.results);
    CHECK_FALSE(back.all_passed());

    // second pass is a fixed point
    CHECK(report_to_json(back) == report_to_json(rep));

    CHECK_THROWS_AS(report_from_json(nlohmann::json{{"x", 1}}), ConfigError);
}

TEST_CASE("markdown rendering") {
    Config cfg;
    cfg.format = "md";
    Report rep = make_report(
        cfg, {{"a.one", "claim", "pass", "has | a pipe", 0.0}});
    std::string md = report_render(rep);
    CHECK(md.find("| a.one | pass |") != std::string::npos);
    CHECK(md.find("has / a pipe") != std::string::npos);
    CHECK(md.find("All checks passed.") != std::string::npos);
}
