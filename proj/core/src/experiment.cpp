#include "hsplit/experiment.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <tuple>

#include "hsplit/measures.hpp"
#include "hsplit/profile_gen.hpp"

namespace hsplit {

namespace {

const char* kTitleWords[] = {"graph",   "citation", "index",  "merge",
                             "split",   "network",  "rank",   "profile",
                             "cluster", "search"};
constexpr int kTitleWordCount = 10;

std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

bool coin(std::mt19937_64& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // 2^53
    return (rng() >> 11) < threshold;
}

struct Synthetic {
    std::vector<TitledArticle> titled;  // in generation order a1..aN
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> arcs;
};

// Pure function of (config, profile_id): rebuilding a profile for a spot
// check must reproduce the sweep's instance bit for bit.
Synthetic synthesize(const ExperimentConfig& config, int profile_id) {
    std::mt19937_64 rng(
        mix(config.seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(
                                                       profile_id))));
    Synthetic s;
    for (int i = 1; i <= config.articles; ++i) {
        std::string id = "a" + std::to_string(i);
        int words = 2 + static_cast<int>(rng() % 4);
        std::string title;
        for (int w = 0; w < words; ++w) {
            if (w) title += ' ';
            title += kTitleWords[rng() % kTitleWordCount];
        }
        s.titled.push_back({id, std::move(title)});
        s.ids.push_back(std::move(id));
    }
    for (int i = 1; i <= config.external; ++i)
        s.ids.push_back("x" + std::to_string(i));

    std::vector<int> order(s.ids.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[rng() % i]);
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (coin(rng, config.arc_density))
                s.arcs.emplace_back(s.ids[order[i]], s.ids[order[j]]);
    return s;
}

struct BuiltProfile {
    CitationGraph graph;
    Profile profile;
};

BuiltProfile build_profile(const ExperimentConfig& config, int profile_id,
                           const std::string& threshold) {
    Synthetic s = synthesize(config, profile_id);
    Rational t = Rational::parse(threshold);
    UndirectedGraph compat = compatibility_graph(s.titled, t);
    std::vector<std::vector<std::string>> parts;
    for (const auto& clique : greedy_merge(compat)) {
        std::vector<std::string> part;
        for (int v : clique) part.push_back(s.titled[v - 1].id);
        parts.push_back(std::move(part));
    }
    std::vector<std::string> owned;
    for (const auto& a : s.titled) owned.push_back(a.id);
    CitationGraph graph(s.ids, s.arcs);
    Profile profile(graph, owned, parts);
    return {std::move(graph), std::move(profile)};
}

struct Cell {
    Operation operation;
    Variant variant;
};

constexpr Cell kCells[] = {
    {Operation::atomizing, Variant::conservative},
    {Operation::extracting, Variant::conservative},
    {Operation::extracting, Variant::cautious},
    {Operation::dividing, Variant::conservative},
};

constexpr Measure kMeasures[] = {Measure::sum, Measure::union_};

auto row_key(const ExperimentRow& r) {
    return std::make_tuple(r.profile_id, r.threshold, static_cast<int>(r.measure),
                           static_cast<int>(r.operation),
                           static_cast<int>(r.variant), r.k);
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentConfig& config,
                                          const SolverLimits& limits) {
    std::vector<ExperimentRow> rows;
    for (int pid = 1; pid <= config.profiles; ++pid) {
        for (const std::string& t : config.thresholds) {
            BuiltProfile built = build_profile(config, pid, t);
            int max_part = 0;
            for (int i = 0; i < built.profile.parts.part_count(); ++i)
                max_part = std::max(
                    max_part,
                    static_cast<int>(built.profile.parts.part(i).size()));
            for (Measure measure : kMeasures) {
                int base_h = h_index(built.graph, built.profile.parts, measure);
                for (const Cell& cell : kCells) {
                    if (cell.operation == Operation::dividing &&
                        max_part > limits.max_partition_elements)
                        continue;
                    for (int k = config.k_lo; k <= config.k_hi; ++k) {
                        ProblemInstance inst = ProblemInstance::make(
                            built.graph, built.profile, cell.operation,
                            cell.variant, measure, 0, k);
                        SolveResult res = solve(inst, limits);
                        ExperimentRow row;
                        row.profile_id = pid;
                        row.threshold = t;
                        row.measure = measure;
                        row.operation = cell.operation;
                        row.variant = cell.variant;
                        row.k = k;
                        row.base_h = base_h;
                        row.max_h = res.achieved_h;
                        row.delta_h = res.achieved_h - base_h;
                        rows.push_back(std::move(row));
                    }
                }
            }
        }
    }
    std::sort(rows.begin(), rows.end(),
              [](const ExperimentRow& a, const ExperimentRow& b) {
                  return row_key(a) < row_key(b);
              });
    return rows;
}

ProblemInstance cell_instance(const ExperimentConfig& config,
                              const ExperimentRow& row) {
    BuiltProfile built = build_profile(config, row.profile_id, row.threshold);
    return ProblemInstance::make(std::move(built.graph), std::move(built.profile),
                                 row.operation, row.variant, row.measure, 0,
                                 row.k);
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
    out << "profile_id,threshold,measure,operation,variant,k,base_h,max_h,"
           "delta_h\n";
    for (const auto& r : rows) {
        out << r.profile_id << ',' << r.threshold << ',' << to_string(r.measure)
            << ',' << to_string(r.operation) << ',' << to_string(r.variant)
            << ',' << r.k << ',' << r.base_h << ',' << r.max_h << ','
            << r.delta_h << '\n';
    }
}

}  // namespace hsplit
