// Prints one PASS/FAIL line per acceptance criterion; exits non-zero if any fails.

#include <cstdio>
#include <cstring>

#include "hardy/acceptance.hpp"

int main(int argc, char** argv) {
    hardy::acceptance::Options opt;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) opt.quick = true;
    int failed = 0;
    for (int id = 1; id <= 9; ++id) {
        const auto c = hardy::acceptance::run(id, opt);
        std::printf("criterion %d: %s  %s  (%.2f s", id, c.pass ? "PASS" : "FAIL", c.name.c_str(), c.seconds);
        if (c.time_limit > 0.0) std::printf(", budget %.0f s", c.time_limit);
        std::printf(")\n    %s\n", c.measured.dump().c_str());
        std::fflush(stdout);
        failed += c.pass ? 0 : 1;
    }
    std::printf("%d of 9 criteria passed\n", 9 - failed);
    return failed == 0 ? 0 : 1;
}
