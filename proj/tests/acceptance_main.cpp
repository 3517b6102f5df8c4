// Acceptance gate: one line per criterion, exit 0 iff every criterion passes.
#include <cstdio>

#include "loewner/acceptance.hpp"

int main() {
    const auto results = loewner::acceptance::run_all();
    int failed = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failed;
        std::printf("[%s] criterion %2d: %s - %s\n", r.pass ? "PASS" : "FAIL",
                    r.index, r.name.c_str(), r.detail.c_str());
    }
    std::printf("acceptance: %zu criteria, %d failed\n", results.size(), failed);
    return failed == 0 ? 0 : 1;
}
