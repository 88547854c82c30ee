#pragma once
#include <ostream>
#include <string>
#include <vector>

#include "screenlab/config.hpp"

namespace screenlab {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0.0;
    std::vector<std::string> notes;
};

// Sweeps (and commitment sweeps) for both noise families on the config grid:
// fig1-{normal,laplace}.{csv,svg}, fig2-{normal,laplace}.csv. Returns the files written.
std::vector<std::string> write_repro_artifacts(const RunConfig& cfg, const std::string& dir, unsigned workers = 0);

// Runs every criterion; progress lines go to log when non-null.
std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, std::ostream* log = nullptr);

// "PASS [id] title" followed by indented notes.
void print_criterion(std::ostream& out, const CriterionResult& r, bool with_notes = true);

}  // namespace screenlab
