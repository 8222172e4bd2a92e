#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "skl/rational.hpp"

namespace skl {

/// Run configuration shared by the CLI and the verification registry.
struct Config {
    Rat alpha = Rat(2);
    Rat beta = Rat(3);
    int max_degree = 4;  // 2..5
    int samples = 5;     // >= 1
    std::vector<Rat> seeds = {Rat(1), Rat(2), Rat(3), Rat(1, 2), Rat(4)};
    std::string format = "json";  // json | md
};

/// Throws ConfigError on out-of-range fields.
void validate_config(const Config& c);

struct CheckResult {
    std::string id;
    std::string claim;
    std::string status;  // pass | fail
    std::string witness;
    double elapsed = 0.0;

    bool operator==(const CheckResult&) const = default;
};

struct Check {
    std::string id;
    std::string group;  // CLI subcommand owning the check
    std::string claim;
    std::function<std::pair<bool, std::string>(const Config&)> fn;
};

const std::vector<Check>& check_registry();

/// All checks whose group matches, or the whole registry for "all".
std::vector<const Check*> checks_in_group(const std::string& group);

/// Runs the checks over a small worker pool; results are returned in
/// registry order and exceptions become failed results carrying the
/// message as witness.
std::vector<CheckResult> run_checks(const std::vector<const Check*>& checks,
                                    const Config& cfg, int workers = 4);

}  // namespace skl
