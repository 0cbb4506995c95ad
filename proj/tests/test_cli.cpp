#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hardy/cli.hpp"
#include "hardy/error.hpp"
#include "hardy/json_io.hpp"
#include "hardy/oned.hpp"

using namespace hardy;
using io::json;

namespace {

struct Run {
    int status;
    std::string out, err;
};

Run call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const json& content) {
    const auto path = std::filesystem::temp_directory_path() / ("hardy_test_" + name);
    std::ofstream(path) << content.dump();
    return path.string();
}

}  // namespace

TEST_CASE("domain JSON round trip") {
    for (const auto& dom : {DomainSpec::ball(2.0), DomainSpec::core_cutoff(0.3), DomainSpec::half_disk(),
                            DomainSpec::cusp_domain(CuspProfile::quadratic()),
                            DomainSpec::cusp_domain(CuspProfile::constant(0.7))}) {
        const json j = io::domain_to_json(dom);
        const auto back = io::domain_from_json(j);
        CHECK(io::domain_to_json(back) == j);
        CHECK(classify(back).regime == classify(dom).regime);
    }
    CHECK_THROWS_AS(io::domain_from_json(json{{"kind", "Torus"}}), ConstructionError);
    CHECK_THROWS_AS(io::domain_from_json(json{{"kind", "BallWithCoreCutoff"}, {"params", json::object()}}),
                    ConstructionError);
}

TEST_CASE("FNV-1a reference values") {
    CHECK(io::fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(io::fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    const json cfg{{"x", 1}};
    CHECK(io::meta_block(cfg)["config_hash"] == io::meta_block(cfg)["config_hash"]);
    CHECK(io::meta_block(cfg)["config_hash"] != io::meta_block(json{{"x", 2}})["config_hash"]);
}

TEST_CASE("ea prints E(a) and a residual") {
    const auto r = call({"ea", "--a", "0.5"});
    REQUIRE(r.status == 0);
    const auto j = json::parse(r.out);
    CHECK(j["E"].get<double>() == doctest::Approx(Ea_value(0.5)).epsilon(1e-12));
    CHECK(j["residual"].get<double>() < 1e-6);
    CHECK(j["meta"]["version"] == HARDY_VERSION);
    CHECK(r.out == call({"ea", "--a", "0.5"}).out);
}

TEST_CASE("ea sweep rows are ordered by parameter") {
    const auto r = call({"ea", "sweep", "--from", "0.2", "--to", "1.0", "--points", "5", "--M", "256"});
    REQUIRE(r.status == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line.rfind("# tool=hardy", 0) == 0);
    std::getline(lines, line);
    CHECK(line == "a,E,residual");
    double prev_a = -1.0, prev_E = 0.0;
    int rows = 0;
    while (std::getline(lines, line)) {
        double a, E, res;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &a, &E, &res) == 3);
        CHECK(a > prev_a);
        CHECK(E > prev_E);
        prev_a = a;
        prev_E = E;
        ++rows;
    }
    CHECK(rows == 5);
}

TEST_CASE("domain classify") {
    const auto path = temp_file("ball.json", {{"kind", "Ball"}, {"R", 1.0}, {"params", json::object()}});
    const auto r = call({"domain", "classify", "--domain", path});
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["classification"]["regime"] == "OriginInterior");
}

TEST_CASE("constant on the ball") {
    const auto path = temp_file("ball2.json", {{"kind", "Ball"}, {"R", 1.0}});
    const auto r = call({"constant", "--domain", path, "--schedule", "4,8,16,32", "--h", "0.03"});
    REQUIRE(r.status == 0);
    const auto j = json::parse(r.out);
    CHECK(j["estimate"].get<double>() == doctest::Approx(0.25).epsilon(0.04));
    CHECK(j["per_n"].size() == 4);
    CHECK(j.contains("collar_report"));
}

TEST_CASE("config file supplies options") {
    const auto cfg = temp_file("cfg.json", {{"command", "ea"}, {"options", {{"a", 1.0}, {"M", 512}}}});
    const auto r = call({"--config", cfg});
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["a"].get<double>() == 1.0);
    const auto over = call({"ea", "--a", "0.5", "--config", cfg});
    REQUIRE(over.status == 0);
    CHECK(json::parse(over.out)["a"].get<double>() == 0.5);
}

TEST_CASE("exit codes") {
    CHECK(call({"ea", "--bogus"}).status == 2);
    CHECK(call({}).status == 2);
    CHECK(call({"upperbound", "--family", "nope"}).status == 2);
    const auto bad = call({"ea", "--a", "2.0"});
    CHECK(bad.status == 2);
    CHECK(json::parse(bad.out)["error"] == "DomainRangeError");
    CHECK(call({"domain", "classify", "--domain", "/nonexistent.json"}).status == 2);
}

TEST_CASE("upperbound CSV") {
    const auto r = call({"upperbound", "--family", "psi_beta", "--schedule", "3,5,7"});
    REQUIRE(r.status == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    std::getline(lines, line);
    CHECK(line == "param,ratio,error_estimate");
    double prev = INFINITY;
    while (std::getline(lines, line)) {
        double param, ratio, e;
        REQUIRE(std::sscanf(line.c_str(), "%lf,%lf,%lf", &param, &ratio, &e) == 3);
        CHECK(ratio == doctest::Approx(param / 2).epsilon(1e-10));
        CHECK(ratio < prev);
        prev = ratio;
    }
}
