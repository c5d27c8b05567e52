#include "gridmagic/acceptance.hpp"

#include <cstdio>

int main() {
    bool all = true;
    gridmagic::run_acceptance([&](const gridmagic::CriterionResult& r) {
        std::printf("[%2d] %-30s %s  %8.2fs  %s\n", r.id, r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.seconds, r.detail.c_str());
        std::fflush(stdout);
        all = all && r.pass;
    });
    return all ? 0 : 1;
}
