#pragma once

#include <functional>
#include <string>
#include <vector>

namespace gridmagic {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

// Runs the self-test criteria (all 15, or the subset in `only`), invoking
// `report` after each one. Exceptions inside a criterion mark it failed with
// the message as detail.
std::vector<CriterionResult> run_acceptance(
    const std::function<void(const CriterionResult&)>& report = {},
    const std::vector<int>& only = {});

}  // namespace gridmagic
