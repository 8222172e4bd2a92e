#include "skl/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

#include "skl/errors.hpp"

namespace skl {

using nlohmann::json;

bool Report::all_passed() const {
    for (const CheckResult& r : results)
        if (r.status != "pass") return false;
    return true;
}

Report make_report(const Config& cfg, std::vector<CheckResult> results) {
    Report r;
    auto now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    r.generated = buf;
    r.config = cfg;
    r.results = std::move(results);
    return r;
}

json report_to_json(const Report& r) {
    json jc;
    jc["alpha"] = rat_str(r.config.alpha);
    jc["beta"] = rat_str(r.config.beta);
    jc["max_degree"] = r.config.max_degree;
    jc["samples"] = r.config.samples;
    json seeds = json::array();
    for (const Rat& s : r.config.seeds) seeds.push_back(rat_str(s));
    jc["seeds"] = seeds;
    jc["format"] = r.config.format;

    json checks = json::array();
    for (const CheckResult& c : r.results)
        checks.push_back({{"id", c.id},
                          {"claim", c.claim},
                          {"status", c.status},
                          {"witness", c.witness},
                          {"elapsed", c.elapsed}});

    return json{{"generated", r.generated},
                {"config", jc},
                {"checks", checks},
                {"passed", r.all_passed()}};
}

Report report_from_json(const json& j) {
    try {
        Report r;
        r.generated = j.at("generated").get<std::string>();
        const json& jc = j.at("config");
        r.config.alpha = parse_rat(jc.at("alpha").get<std::string>());
        r.config.beta = parse_rat(jc.at("beta").get<std::string>());
        r.config.max_degree = jc.at("max_degree").get<int>();
        r.config.samples = jc.at("samples").get<int>();
        r.config.seeds.clear();
        for (const json& s : jc.at("seeds"))
            r.config.seeds.push_back(parse_rat(s.get<std::string>()));
        r.config.format = jc.at("format").get<std::string>();
        for (const json& c : j.at("checks")) {
            CheckResult cr;
            cr.id = c.at("id").get<std::string>();
            cr.claim = c.at("claim").get<std::string>();
            cr.status = c.at("status").get<std::string>();
            cr.witness = c.at("witness").get<std::string>();
            cr.elapsed = c.at("elapsed").get<double>();
            r.results.push_back(std::move(cr));
        }
        return r;
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed report: ") + e.what());
    }
}

std::string report_markdown(const Report& r) {
    std::ostringstream os;
    os << "# Verification report\n\n";
    os << "Generated " << r.generated << "; alpha = "
       << rat_str(r.config.alpha) << ", beta = " << rat_str(r.config.beta)
       << ", max degree " << r.config.max_degree << ", " << r.config.samples
       << " sample points.\n\n";
    os << "| check | status | detail | seconds |\n";
    os << "|---|---|---|---|\n";
    for (const CheckResult& c : r.results) {
        std::string w = c.witness;
        for (char& ch : w)
            if (ch == '|') ch = '/';
        char sec[32];
        std::snprintf(sec, sizeof sec, "%.2f", c.elapsed);
        os << "| " << c.id << " | " << c.status << " | " << w << " | " << sec
           << " |\n";
    }
    os << "\n" << (r.all_passed() ? "All checks passed." : "FAILURES present.")
       << "\n";
    return os.str();
}

std::string report_render(const Report& r) {
    if (r.config.format == "md") return report_markdown(r);
    return report_to_json(r).dump(2) + "\n";
}

}  // namespace skl
