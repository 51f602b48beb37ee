#pragma once

#include <string>
#include <vector>

namespace qh {

// The acceptance batteries. Every battery is deterministic: exhaustive grids, or fixed
// deterministic point sets where a space is too large to enumerate.
struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
    long long checks = 0;
    double seconds = 0;
};

constexpr int criterion_count = 11;
std::string criterion_title(int id);
CriterionResult run_criterion(int id);

// Suites group criteria by module: formulas, cyclic, dynkin, extdynkin.
const std::vector<std::string>& verify_suites();
std::vector<int> suite_criteria(const std::string& suite);  // throws PreconditionError if unknown

}  // namespace qh
