#pragma once

// End-to-end acceptance checks shared by the `verify-all` command and the acceptance test.

#include <cstdint>
#include <string>
#include <vector>

#include "hardy/json_io.hpp"

namespace hardy::acceptance {

struct Options {
    bool quick = false;            // smaller schedules and case counts, same pass thresholds
    std::uint64_t seed = 20240917;  // random suites
};

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double time_limit = 0.0;  // 0 when the criterion has no runtime budget
    io::json measured;
};

/// Runs criterion `id` in 1..9.
Criterion run(int id, const Options& opt = {});
std::vector<Criterion> run_all(const Options& opt = {});

io::json to_json(const Criterion& c);

}  // namespace hardy::acceptance
