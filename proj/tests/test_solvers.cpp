// Exact polynomial/FPT solvers: worked examples on the reference profiles,
// structural edge cases, and exhaustive oracle-equivalence properties.
#include <doctest.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "hsplit/errors.hpp"
#include "hsplit/measures.hpp"
#include "hsplit/oracle.hpp"
#include "hsplit/solvers.hpp"
#include "hsplit/validate.hpp"
#include "testutil.hpp"

using namespace hsplit;

namespace {

// Asserts that a solver result matches oracle_solve on the same instance and
// that any witness is structurally valid and attains achieved_h.
void check_against_oracle(const ProblemInstance& inst, const SolveResult& got) {
    SolveResult want = oracle_solve(inst);
    REQUIRE(got.feasible == want.feasible);
    REQUIRE(got.achieved_h == want.achieved_h);
    REQUIRE(got.refinement.has_value() == got.feasible);
    if (got.refinement) {
        auto rep = validate_refinement(inst, got.refinement->parts);
        REQUIRE(rep.valid_for(inst.operation, inst.variant, inst.k));
        REQUIRE(h_index(inst.graph, got.refinement->parts, inst.measure) ==
                got.achieved_h);
        REQUIRE(got.operations_used == rep.operations_used);
        REQUIRE(got.parts_changed == rep.parts_changed);
    }
}

// Two symmetric pair-parts, each splitting into two singletons with three
// distinct citers; optionally one extra singleton part with three citers.
testutil::Fixture symmetric_pairs(bool extra_singleton) {
    std::vector<std::string> ids = {"a1", "a2", "b1", "b2"};
    std::vector<std::string> owned = ids;
    std::vector<std::pair<std::string, std::string>> arcs;
    int x = 0;
    for (const auto& v : std::vector<std::string>{"a1", "a2", "b1", "b2"})
        for (int i = 0; i < 3; ++i)
            arcs.emplace_back("x" + std::to_string(++x), v);
    if (extra_singleton) {
        ids.push_back("c1");
        owned.push_back("c1");
        for (int i = 0; i < 3; ++i)
            arcs.emplace_back("x" + std::to_string(++x), "c1");
    }
    for (int i = 1; i <= x; ++i) ids.push_back("x" + std::to_string(i));
    CitationGraph g(ids, arcs);
    Profile p(g, owned, {{"a1", "a2"}, {"b1", "b2"}});
    return {std::move(g), std::move(p)};
}

// Six pair-parts in a citation cycle: both members of part i+1 cite part i.
// Every part sees two reachable citers but only one citing part, so the
// independent-set shortcut of the fusion solver fires at h = 2.
testutil::Fixture fusion_cycle(int parts) {
    std::vector<std::string> ids, owned;
    std::vector<std::vector<std::string>> part_ids;
    std::vector<std::pair<std::string, std::string>> arcs;
    for (int i = 1; i <= parts; ++i) {
        std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
        ids.push_back(a);
        ids.push_back(b);
        owned.push_back(a);
        owned.push_back(b);
        part_ids.push_back({a, b});
    }
    for (int i = 1; i <= parts; ++i) {
        int next = i % parts + 1;
        arcs.emplace_back("a" + std::to_string(next), "a" + std::to_string(i));
        arcs.emplace_back("b" + std::to_string(next), "b" + std::to_string(i));
    }
    CitationGraph g(ids, arcs);
    Profile p(g, owned, part_ids);
    return {std::move(g), std::move(p)};
}

}  // namespace

TEST_SUITE("solvers") {

// ---------------------------------------------------------------------------
// Tag guards
// ---------------------------------------------------------------------------

TEST_CASE("solvers reject mismatched instance tags") {
    auto wrong_op = testutil::instance_of(testutil::fig1(), Operation::dividing,
                                          Variant::plain, Measure::sum, 1);
    CHECK_THROWS_AS(atomize_solve(wrong_op), std::invalid_argument);
    CHECK_THROWS_AS(extract_solve(wrong_op), std::invalid_argument);
    CHECK_THROWS_AS(atomize_fusion_solve(wrong_op), std::invalid_argument);

    auto wrong_measure = testutil::instance_of(
        testutil::fig1(), Operation::atomizing, Variant::plain, Measure::fusion, 1);
    CHECK_THROWS_AS(atomize_solve(wrong_measure), std::invalid_argument);

    auto wrong_variant = testutil::instance_of(
        testutil::fig1(), Operation::extracting, Variant::cautious,
        Measure::union_, 1, 1);
    CHECK_THROWS_AS(extract_solve(wrong_variant), std::invalid_argument);
    CHECK_THROWS_AS(extract_conservative_solve(wrong_variant),
                    std::invalid_argument);
    CHECK_THROWS_AS(divide_conservative_solve(wrong_variant),
                    std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Plain atomizing
// ---------------------------------------------------------------------------

TEST_CASE("plain atomizing on the second profile: keep or split both cap at 1") {
    auto one = atomize_solve(testutil::instance_of(
        testutil::fig2(), Operation::atomizing, Variant::plain,
        Measure::union_, 1));
    CHECK(one.feasible);
    CHECK(one.achieved_h == 1);

    auto two = atomize_solve(testutil::instance_of(
        testutil::fig2(), Operation::atomizing, Variant::plain,
        Measure::union_, 2));
    CHECK_FALSE(two.feasible);
    CHECK(two.achieved_h == 1);
    CHECK_FALSE(two.refinement.has_value());
}

TEST_CASE("plain atomizing leaves zero-gain parts merged") {
    // Splitting {v4,v5} trades one >=2 part for one >=2 singleton, so the
    // witness keeps the original partition (already at h-index 2).
    auto f = testutil::fig1();
    auto inst = testutil::instance_of(std::move(f), Operation::atomizing,
                                      Variant::plain, Measure::union_, 2);
    auto res = atomize_solve(inst);
    CHECK(res.feasible);
    CHECK(res.achieved_h == 2);
    REQUIRE(res.refinement.has_value());
    CHECK(res.refinement->parts == inst.profile.parts);
    CHECK(res.operations_used == 0);
    CHECK(res.parts_changed == 0);
    check_against_oracle(inst, res);
}

TEST_CASE("plain atomizing splits parts with positive gain") {
    // Two pair-parts whose members each hold three citations: atomizing both
    // doubles the number of >=3 parts.
    auto inst = testutil::instance_of(symmetric_pairs(false),
                                      Operation::atomizing, Variant::plain,
                                      Measure::union_, 3);
    const CitationGraph& g = inst.graph;
    auto res = atomize_solve(inst);
    CHECK(res.feasible);
    CHECK(res.achieved_h == 3);
    REQUIRE(res.refinement.has_value());
    CHECK(res.refinement->parts == Partition({{g.index_of("a1")},
                                              {g.index_of("a2")},
                                              {g.index_of("b1")},
                                              {g.index_of("b2")}}));
    check_against_oracle(inst, res);
}

TEST_CASE("identity suffices when the profile already reaches h") {
    auto inst = testutil::instance_of(testutil::fig1(), Operation::atomizing,
                                      Variant::plain, Measure::sum, 2);
    auto res = atomize_solve(inst);
    CHECK(res.feasible);
    CHECK(res.achieved_h >= 2);
    check_against_oracle(inst, res);
}

// ---------------------------------------------------------------------------
// Conservative atomizing
// ---------------------------------------------------------------------------

TEST_CASE("conservative atomizing on the first profile") {
    auto zero = atomize_conservative_solve(testutil::instance_of(
        testutil::fig1(), Operation::atomizing, Variant::conservative,
        Measure::union_, 2, 0));
    CHECK(zero.feasible);  // base h-index is already 2
    CHECK(zero.operations_used == 0);

    auto three = atomize_conservative_solve(testutil::instance_of(
        testutil::fig1(), Operation::atomizing, Variant::conservative,
        Measure::union_, 3, 3));
    CHECK_FALSE(three.feasible);  // only four citing articles exist
    CHECK(three.achieved_h == 2);
}

TEST_CASE("conservative atomizing greedily picks the best parts") {
    // Two symmetric parts, each worth one extra >=3 part when atomized;
    // with k=1 the greedy takes the first and that already reaches h=3.
    auto plain_inst = testutil::instance_of(symmetric_pairs(false),
                                            Operation::atomizing,
                                            Variant::conservative,
                                            Measure::union_, 3, 1);
    auto res = atomize_conservative_solve(plain_inst);
    CHECK(res.feasible);
    CHECK(res.achieved_h == 3);
    const CitationGraph& g = plain_inst.graph;
    REQUIRE(res.refinement.has_value());
    CHECK(res.refinement->parts ==
          Partition({{g.index_of("a1")},
                     {g.index_of("a2")},
                     {g.index_of("b1"), g.index_of("b2")}}));
    check_against_oracle(plain_inst, res);

    // k=0 leaves two parts, capping the h-index at 2.
    auto blocked = atomize_conservative_solve(testutil::instance_of(
        symmetric_pairs(false), Operation::atomizing, Variant::conservative,
        Measure::union_, 3, 0));
    CHECK_FALSE(blocked.feasible);
    CHECK(blocked.achieved_h == 2);

    // An extra >=3 singleton part makes the base profile feasible already,
    // and the budget can only help.
    auto extra = testutil::instance_of(symmetric_pairs(true),
                                       Operation::atomizing,
                                       Variant::conservative, Measure::union_,
                                       3, 1);
    auto res2 = atomize_conservative_solve(extra);
    CHECK(res2.feasible);
    CHECK(res2.achieved_h == 3);
    check_against_oracle(extra, res2);
}

// ---------------------------------------------------------------------------
// Extracting
// ---------------------------------------------------------------------------

TEST_CASE("plain extracting peels the double-cited article") {
    auto f = testutil::fig2();
    int r1 = f.graph.index_of("r1"), r2 = f.graph.index_of("r2");
    int r3 = f.graph.index_of("r3"), r4 = f.graph.index_of("r4");
    auto inst = testutil::instance_of(std::move(f), Operation::extracting,
                                      Variant::plain, Measure::union_, 2);
    auto res = extract_solve(inst);
    CHECK(res.feasible);
    CHECK(res.achieved_h == 2);
    REQUIRE(res.refinement.has_value());
    // Only r4 has two citers of its own; remainder {r1,r2,r3} keeps two.
    CHECK(res.refinement->parts == Partition({{r1, r2, r3}, {r4}}));
    CHECK(res.operations_used == 1);
    check_against_oracle(inst, res);
}

TEST_CASE("cautious extracting respects the operation budget") {
    auto zero = extract_cautious_solve(testutil::instance_of(
        testutil::fig2(), Operation::extracting, Variant::cautious,
        Measure::union_, 2, 0));
    CHECK_FALSE(zero.feasible);  // untouched, the single part gives h-index 1
    CHECK(zero.achieved_h == 1);

    auto one = extract_cautious_solve(testutil::instance_of(
        testutil::fig2(), Operation::extracting, Variant::cautious,
        Measure::union_, 2, 1));
    CHECK(one.feasible);
    CHECK(one.operations_used <= 1);
    check_against_oracle(testutil::instance_of(testutil::fig2(),
                                               Operation::extracting,
                                               Variant::cautious,
                                               Measure::union_, 2, 1),
                         one);
}

TEST_CASE("conservative extracting spends its budget on whole parts") {
    auto inst = testutil::instance_of(testutil::fig2(), Operation::extracting,
                                      Variant::conservative, Measure::union_,
                                      2, 1);
    auto res = extract_conservative_solve(inst);
    CHECK(res.feasible);  // all extractions lie in the single part
    CHECK(res.parts_changed <= 1);
    check_against_oracle(inst, res);
}

// ---------------------------------------------------------------------------
// merge_subroutine
// ---------------------------------------------------------------------------

TEST_CASE("merge subroutine decides small article sets") {
    auto f = testutil::fig2();
    std::vector<int> articles = f.profile.owned;

    CHECK(merge_subroutine(f.graph, articles, 2, Measure::union_));
    CHECK_FALSE(merge_subroutine(f.graph, articles, 3, Measure::union_));
    CHECK(merge_subroutine(f.graph, articles, 2, Measure::sum));
    CHECK(merge_subroutine(f.graph, articles, 2, Measure::fusion));

    // A single article forms one part at most, so h caps at 1 even though
    // r4 has two citers.
    int r4 = f.graph.index_of("r4");
    CHECK(merge_subroutine(f.graph, {r4}, 1, Measure::union_));
    CHECK_FALSE(merge_subroutine(f.graph, {r4}, 2, Measure::union_));

    // The empty set has no parts: only h = 0 is reachable.
    CHECK(merge_subroutine(f.graph, {}, 0, Measure::union_));
    CHECK_FALSE(merge_subroutine(f.graph, {}, 1, Measure::union_));
}

TEST_CASE("merge subroutine enforces its size bound") {
    std::vector<std::string> ids;
    for (int i = 1; i <= 13; ++i) ids.push_back("m" + std::to_string(i));
    CitationGraph g(ids, {});
    std::vector<int> all;
    for (int v = 0; v < g.article_count(); ++v) all.push_back(v);
    CHECK_THROWS_AS(merge_subroutine(g, all, 0, Measure::union_), BoundExceeded);

    SolverLimits tight;
    tight.max_partition_elements = 3;
    std::vector<int> four(all.begin(), all.begin() + 4);
    CHECK_THROWS_AS(merge_subroutine(g, four, 0, Measure::union_, tight),
                    BoundExceeded);
    CHECK(merge_subroutine(g, four, 0, Measure::union_));  // default bound ok
}

// ---------------------------------------------------------------------------
// Dividing
// ---------------------------------------------------------------------------

TEST_CASE("conservative dividing reaches 2 on the second profile with k=1") {
    auto inst = testutil::instance_of(testutil::fig2(), Operation::dividing,
                                      Variant::conservative, Measure::union_,
                                      2, 1);
    auto res = divide_conservative_solve(inst);
    CHECK(res.feasible);
    CHECK(res.achieved_h == 2);
    CHECK(res.parts_changed == 1);
    check_against_oracle(inst, res);
}

TEST_CASE("plain dividing runs as conservative with a full budget") {
    auto inst = testutil::instance_of(testutil::fig2(), Operation::dividing,
                                      Variant::plain, Measure::union_, 2);
    auto res = divide_conservative_solve(inst);
    CHECK(res.feasible);
    CHECK(res.achieved_h == 2);
    check_against_oracle(inst, res);
}

TEST_CASE("dividing with h=0 is always feasible") {
    auto inst = testutil::instance_of(testutil::fig1(), Operation::dividing,
                                      Variant::conservative, Measure::sum, 0, 0);
    auto res = divide_conservative_solve(inst);
    CHECK(res.feasible);
    REQUIRE(res.refinement.has_value());
    // k=0 pins the witness to the original partition.
    CHECK(res.refinement->parts == inst.profile.parts);
}

TEST_CASE("dividing rejects parts above the enumeration bound") {
    std::vector<std::string> ids;
    std::vector<std::vector<std::string>> part(1);
    for (int i = 10; i <= 22; ++i) {  // 13 articles in one part
        ids.push_back("w" + std::to_string(i));
        part[0].push_back(ids.back());
    }
    CitationGraph g(ids, {});
    Profile p(g, ids, part);
    auto inst = ProblemInstance::make(std::move(g), std::move(p),
                                      Operation::dividing, Variant::plain,
                                      Measure::union_, 1, std::nullopt);
    CHECK_THROWS_AS(divide_conservative_solve(inst), BoundExceeded);
}

// ---------------------------------------------------------------------------
// Fusion atomizing
// ---------------------------------------------------------------------------

TEST_CASE("fusion solver accepts profiles that already reach h") {
    // Two parts, each cited by two distinct external articles.
    CitationGraph g({"p1", "p2", "q1", "q2", "x1", "x2", "x3", "x4"},
                    {{"x1", "p1"}, {"x2", "p2"}, {"x3", "q1"}, {"x4", "q2"}});
    Profile p(g, {"p1", "p2", "q1", "q2"}, {{"p1", "p2"}, {"q1", "q2"}});
    auto inst = ProblemInstance::make(std::move(g), std::move(p),
                                      Operation::atomizing, Variant::plain,
                                      Measure::fusion, 2, std::nullopt);
    auto res = atomize_fusion_solve(inst);
    CHECK(res.feasible);
    CHECK(res.achieved_h == 2);
    REQUIRE(res.refinement.has_value());
    CHECK(res.refinement->parts == inst.profile.parts);  // nothing to split
    check_against_oracle(inst, res);
}

TEST_CASE("fusion solver on the first profile") {
    // Atomizing {v2,v3} gives {v6} two part-level citations, and atomizing
    // {v4,v5} gives {v5} citations from v1 and the atom {v4}.
    auto inst = testutil::instance_of(testutil::fig1(), Operation::atomizing,
                                      Variant::plain, Measure::fusion, 2);
    auto res = atomize_fusion_solve(inst);
    CHECK(res.feasible);
    CHECK(res.achieved_h == 2);
    check_against_oracle(inst, res);
}

TEST_CASE("fusion solver takes the independent-set shortcut on a citation cycle") {
    // Six undecided parts is exactly the 2h^2 - h threshold for h = 2.
    auto f = fusion_cycle(6);
    auto inst = ProblemInstance::make(std::move(f.graph), std::move(f.profile),
                                      Operation::atomizing, Variant::plain,
                                      Measure::fusion, 2, std::nullopt);
    auto res = atomize_fusion_solve(inst);
    CHECK(res.feasible);
    CHECK(res.achieved_h == 2);
    REQUIRE(res.refinement.has_value());
    // Kept parts must be pairwise non-adjacent in the citation relation, and
    // atomizing the rest hands each kept part two part-level citations.
    check_against_oracle(inst, res);

    auto too_high = ProblemInstance::make(inst.graph, inst.profile,
                                          Operation::atomizing, Variant::plain,
                                          Measure::fusion, 3, std::nullopt);
    auto res3 = atomize_fusion_solve(too_high);
    CHECK_FALSE(res3.feasible);
    CHECK(res3.achieved_h == 2);
}

TEST_CASE("fusion solver brute-forces small undecided sets") {
    // Three pair-parts citing in a triangle never reach h = 2: any kept part
    // is cited by at most one other part or its atoms.
    auto f = fusion_cycle(3);
    auto inst = ProblemInstance::make(std::move(f.graph), std::move(f.profile),
                                      Operation::atomizing, Variant::plain,
                                      Measure::fusion, 2, std::nullopt);
    auto res = atomize_fusion_solve(inst);
    CHECK_FALSE(res.feasible);
    CHECK(res.achieved_h == 1);
    check_against_oracle(inst, res);

    SolverLimits tight;
    tight.max_subset_parts = 2;
    CHECK_THROWS_AS(atomize_fusion_solve(inst, tight), BoundExceeded);
}

// ---------------------------------------------------------------------------
// Dispatcher
// ---------------------------------------------------------------------------

TEST_CASE("solve routes hard combinations to the oracle") {
    auto mk = [](Operation op, Variant v, Measure m, std::optional<int> k) {
        return testutil::instance_of(testutil::fig1(), op, v, m, 1, k);
    };
    CHECK_FALSE(solve_uses_oracle(mk(Operation::atomizing, Variant::plain,
                                     Measure::fusion, std::nullopt)));
    CHECK(solve_uses_oracle(mk(Operation::atomizing, Variant::conservative,
                               Measure::fusion, 1)));
    CHECK(solve_uses_oracle(mk(Operation::extracting, Variant::plain,
                               Measure::fusion, std::nullopt)));
    CHECK(solve_uses_oracle(mk(Operation::dividing, Variant::cautious,
                               Measure::sum, 1)));
    CHECK_FALSE(solve_uses_oracle(mk(Operation::dividing, Variant::conservative,
                                     Measure::sum, 1)));
    CHECK_FALSE(solve_uses_oracle(mk(Operation::extracting, Variant::cautious,
                                     Measure::union_, 1)));
    // Cautious atomizing normalizes to conservative before dispatch.
    CHECK_FALSE(solve_uses_oracle(mk(Operation::atomizing, Variant::cautious,
                                     Measure::sum, 1)));
}

TEST_CASE("solve agrees with the oracle on every routed family") {
    auto cautious_divide = testutil::instance_of(
        testutil::fig2(), Operation::dividing, Variant::cautious,
        Measure::union_, 2, 1);
    check_against_oracle(cautious_divide, solve(cautious_divide));

    auto fusion_extract = testutil::instance_of(
        testutil::fig2(), Operation::extracting, Variant::plain,
        Measure::fusion, 2);
    check_against_oracle(fusion_extract, solve(fusion_extract));
}

// ---------------------------------------------------------------------------
// Edge cases
// ---------------------------------------------------------------------------

TEST_CASE("an empty profile reaches exactly h = 0") {
    CitationGraph g({"x1"}, {});
    Profile p(g, {}, {});
    auto zero = ProblemInstance::make(g, p, Operation::atomizing,
                                      Variant::plain, Measure::sum, 0,
                                      std::nullopt);
    auto res = atomize_solve(zero);
    CHECK(res.feasible);
    CHECK(res.achieved_h == 0);
    REQUIRE(res.refinement.has_value());
    CHECK(res.refinement->parts.part_count() == 0);

    auto one = ProblemInstance::make(g, p, Operation::extracting,
                                     Variant::plain, Measure::sum, 1,
                                     std::nullopt);
    auto res1 = extract_solve(one);
    CHECK_FALSE(res1.feasible);
    CHECK(res1.achieved_h == 0);
}

TEST_CASE("h = 0 never spends operations") {
    for (auto op : {Operation::atomizing, Operation::extracting,
                    Operation::dividing}) {
        auto inst = testutil::instance_of(testutil::fig2(), op,
                                          Variant::conservative, Measure::sum,
                                          0, 0);
        auto res = solve(inst);
        CAPTURE(to_string(op));
        CHECK(res.feasible);
        CHECK(res.operations_used == 0);
        CHECK(res.parts_changed == 0);
    }
}

TEST_CASE("solver witnesses are deterministic") {
    auto run = [] {
        auto inst = testutil::instance_of(testutil::fig2(),
                                          Operation::extracting,
                                          Variant::plain, Measure::union_, 1);
        auto res = extract_solve(inst);
        REQUIRE(res.refinement.has_value());
        return res.refinement->parts;
    };
    CHECK(run() == run());
}

// ---------------------------------------------------------------------------
// Oracle equivalence properties (>= 200 seeds per solver)
// ---------------------------------------------------------------------------

namespace {

struct SolverCase {
    const char* name;
    Operation op;
    Variant variant;
    bool needs_k;
    std::vector<Measure> measures;
    SolveResult (*run)(const ProblemInstance&);
};

}  // namespace

TEST_CASE("every specialized solver matches the oracle on random instances") {
    const SolverCase cases[] = {
        {"atomize_solve", Operation::atomizing, Variant::plain, false,
         {Measure::sum, Measure::union_},
         [](const ProblemInstance& i) { return atomize_solve(i); }},
        {"atomize_conservative_solve", Operation::atomizing,
         Variant::conservative, true, {Measure::sum, Measure::union_},
         [](const ProblemInstance& i) { return atomize_conservative_solve(i); }},
        {"extract_solve", Operation::extracting, Variant::plain, false,
         {Measure::sum, Measure::union_},
         [](const ProblemInstance& i) { return extract_solve(i); }},
        {"extract_cautious_solve", Operation::extracting, Variant::cautious,
         true, {Measure::sum, Measure::union_},
         [](const ProblemInstance& i) { return extract_cautious_solve(i); }},
        {"extract_conservative_solve", Operation::extracting,
         Variant::conservative, true, {Measure::sum, Measure::union_},
         [](const ProblemInstance& i) { return extract_conservative_solve(i); }},
        {"divide_plain", Operation::dividing, Variant::plain, false,
         {Measure::sum, Measure::union_},
         [](const ProblemInstance& i) { return divide_conservative_solve(i); }},
        {"divide_conservative_solve", Operation::dividing,
         Variant::conservative, true, {Measure::sum, Measure::union_},
         [](const ProblemInstance& i) { return divide_conservative_solve(i); }},
        {"atomize_fusion_solve", Operation::atomizing, Variant::plain, false,
         {Measure::fusion},
         [](const ProblemInstance& i) { return atomize_fusion_solve(i); }},
    };

    for (const auto& sc : cases) {
        int seeds = 0;
        for (std::uint64_t seed = 0; seeds < 200; ++seed) {
            for (Measure m : sc.measures) {
                CAPTURE(sc.name);
                CAPTURE(seed);
                CAPTURE(to_string(m));
                std::optional<int> k;
                if (sc.needs_k) k = static_cast<int>(seed % 4);
                int h = static_cast<int>((seed / 2) % 5);
                auto inst = testutil::random_instance(seed * 31 + 7, sc.op,
                                                      sc.variant, m, h, k);
                check_against_oracle(inst, sc.run(inst));
                ++seeds;
            }
        }
    }
}

TEST_CASE("the dispatcher matches the oracle across all tag combinations") {
    const Operation ops[] = {Operation::atomizing, Operation::extracting,
                             Operation::dividing};
    const Variant variants[] = {Variant::plain, Variant::conservative,
                                Variant::cautious};
    const Measure measures[] = {Measure::sum, Measure::union_, Measure::fusion};
    int cases = 0;
    for (std::uint64_t seed = 0; seed < 8; ++seed)
        for (auto op : ops)
            for (auto variant : variants)
                for (auto m : measures) {
                    CAPTURE(seed);
                    CAPTURE(to_string(op));
                    CAPTURE(to_string(variant));
                    CAPTURE(to_string(m));
                    std::optional<int> k;
                    if (variant != Variant::plain) k = static_cast<int>(seed % 3);
                    int h = static_cast<int>(seed % 4);
                    auto inst = testutil::random_instance(seed * 17 + 3, op,
                                                          variant, m, h, k);
                    check_against_oracle(inst, solve(inst));
                    ++cases;
                }
    CHECK(cases >= 200);
}

TEST_CASE("splitting power grows from atomizing to extracting to dividing") {
    // Plain refinement families nest, so the best reachable h-index is
    // monotone across operations.  Checked through the dispatcher for sum and
    // union and through the oracle for fusion.
    int cases = 0;
    for (std::uint64_t seed = 500; seed < 550; ++seed) {
        for (Measure m : {Measure::sum, Measure::union_, Measure::fusion}) {
            CAPTURE(seed);
            CAPTURE(to_string(m));
            auto value_of = [&](Operation op) {
                auto inst = testutil::random_instance(seed, op, Variant::plain,
                                                      m, 0, std::nullopt);
                return solve(inst).achieved_h;
            };
            int a = value_of(Operation::atomizing);
            int e = value_of(Operation::extracting);
            int d = value_of(Operation::dividing);
            REQUIRE(a <= e);
            REQUIRE(e <= d);
            ++cases;
        }
    }
    CHECK(cases >= 100);
}

}  // TEST_SUITE("solvers")
