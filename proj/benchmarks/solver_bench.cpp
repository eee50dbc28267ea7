#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "hsplit/instance.hpp"
#include "hsplit/measures.hpp"
#include "hsplit/oracle.hpp"
#include "hsplit/profile_gen.hpp"
#include "hsplit/solvers.hpp"

namespace {

using namespace hsplit;

// Deterministic profile with `parts4` merged parts of four articles each and
// one distinct citer per citation; arc count tracks article count linearly.
ProblemInstance linear_instance(int parts4, Operation op, Variant variant,
                                Measure measure, std::optional<int> k) {
    int owned = parts4 * 4;
    int citers = owned;  // one potential citer per owned article
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> arcs;
    for (int i = 0; i < citers; ++i) ids.push_back("x" + std::to_string(i));
    std::vector<std::vector<std::string>> parts;
    for (int p = 0; p < parts4; ++p) {
        std::vector<std::string> part;
        for (int j = 0; j < 4; ++j) {
            int v = p * 4 + j;
            std::string id = "w" + std::to_string(v);
            ids.push_back(id);
            // Member j of each part receives j+1 citations.
            for (int c = 0; c <= j; ++c)
                arcs.emplace_back("x" + std::to_string((v + c) % citers), id);
            part.push_back(std::move(id));
        }
        parts.push_back(std::move(part));
    }
    std::vector<std::string> owned_ids;
    for (const auto& part : parts)
        owned_ids.insert(owned_ids.end(), part.begin(), part.end());
    CitationGraph g(std::move(ids), arcs);
    Profile profile(g, owned_ids, parts);
    return ProblemInstance::make(std::move(g), std::move(profile), op, variant,
                                 measure, 0, k);
}

void BM_AtomizePlain(benchmark::State& state) {
    auto inst = linear_instance(static_cast<int>(state.range(0)),
                                Operation::atomizing, Variant::plain,
                                Measure::union_, std::nullopt);
    for (auto _ : state)
        benchmark::DoNotOptimize(atomize_solve(inst).achieved_h);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AtomizePlain)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_ExtractCautious(benchmark::State& state) {
    auto inst = linear_instance(static_cast<int>(state.range(0)),
                                Operation::extracting, Variant::cautious,
                                Measure::union_, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_cautious_solve(inst).achieved_h);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ExtractCautious)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_DivideConservative(benchmark::State& state) {
    auto inst = linear_instance(static_cast<int>(state.range(0)),
                                Operation::dividing, Variant::conservative,
                                Measure::sum, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(divide_conservative_solve(inst).achieved_h);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DivideConservative)->Range(16, 256);

void BM_OracleSmall(benchmark::State& state) {
    GeneratedProfile gp = random_profile(8, 6, 0.3, 0.6, 7);
    CitationGraph g(gp.ids, gp.arcs);
    Profile profile(g, gp.owned, gp.parts);
    auto inst = ProblemInstance::make(std::move(g), std::move(profile),
                                      Operation::dividing, Variant::plain,
                                      Measure::union_, 0, std::nullopt);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle_solve(inst).achieved_h);
}
BENCHMARK(BM_OracleSmall);

void BM_HIndexFusion(benchmark::State& state) {
    GeneratedProfile gp = random_profile(64, 64, 0.05, 0.5, 11);
    CitationGraph g(gp.ids, gp.arcs);
    Profile profile(g, gp.owned, gp.parts);
    for (auto _ : state)
        benchmark::DoNotOptimize(h_index(g, profile.parts, Measure::fusion));
}
BENCHMARK(BM_HIndexFusion);

}  // namespace

BENCHMARK_MAIN();
