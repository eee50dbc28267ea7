// Threshold/budget sweep harness: synthesizes seeded citation profiles,
// merges them at each compatibility threshold, and measures how much each
// splitting operation can raise the h-index per budget k.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hsplit/instance.hpp"
#include "hsplit/solvers.hpp"

namespace hsplit {

struct ExperimentConfig {
    int profiles = 20;
    int articles = 24;   // titled owned articles per profile
    int external = 30;   // external citing articles
    double arc_density = 0.08;
    std::uint64_t seed = 1;
    std::vector<std::string> thresholds = {"0.3", "0.5", "0.7"};
    int k_lo = 0;
    int k_hi = 3;
};

struct ExperimentRow {
    int profile_id = 0;
    std::string threshold;
    Measure measure = Measure::sum;
    Operation operation = Operation::atomizing;
    Variant variant = Variant::conservative;
    int k = 0;
    int base_h = 0;   // h-index of the merged profile
    int max_h = 0;    // best reachable h-index within the budget
    int delta_h = 0;  // max_h - base_h
};

// Runs the full sweep: every profile x threshold x {sum, union} x
// {conservative atomizing, conservative extracting, cautious extracting,
// conservative dividing} x k.  Rows come back sorted and are identical for
// identical configs.  Dividing cells whose merged parts exceed the
// enumeration cap are skipped.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config,
                                          const SolverLimits& limits = {});

// Rebuilds the exact instance a row solved (for oracle spot checks).
ProblemInstance cell_instance(const ExperimentConfig& config,
                              const ExperimentRow& row);

// profile_id,threshold,measure,operation,variant,k,base_h,max_h,delta_h
void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);

}  // namespace hsplit
