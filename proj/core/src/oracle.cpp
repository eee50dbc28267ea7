#include "hsplit/oracle.hpp"

#include <algorithm>
#include <limits>

#include "hsplit/enumeration.hpp"
#include "hsplit/errors.hpp"
#include "hsplit/measures.hpp"

namespace hsplit {

namespace {

using Blocks = std::vector<std::vector<int>>;
// yield(blocks, cost) where cost is the budget consumed by this choice.
using Yield = std::function<bool(const Blocks&, int)>;

// Budget cost of one per-part choice: conservative charges changed parts,
// cautious charges splitting operations, plain charges nothing.
int choice_cost(Variant variant, int ops, bool changed) {
    if (variant == Variant::conservative) return changed ? 1 : 0;
    if (variant == Variant::cautious) return ops;
    return 0;
}

// Streams the distinct ways of splitting one part under `op`, keeping the
// untouched part first.  budget caps the cost of emitted choices.
bool for_each_choice(const std::vector<int>& part, Operation op, Variant variant,
                     int budget, const Yield& yield) {
    const int s = static_cast<int>(part.size());

    if (op == Operation::dividing) {
        int max_blocks = s;
        if (variant == Variant::cautious) max_blocks = std::min(s, budget + 1);
        if (variant == Variant::conservative && budget == 0) max_blocks = 1;
        return for_each_set_partition(s, max_blocks, [&](const Blocks& local) {
            Blocks blocks;
            blocks.reserve(local.size());
            for (const auto& b : local) {
                std::vector<int> mapped;
                mapped.reserve(b.size());
                for (int i : b) mapped.push_back(part[i]);
                blocks.push_back(std::move(mapped));
            }
            int ops = static_cast<int>(blocks.size()) - 1;
            return yield(blocks, choice_cost(variant, ops, ops > 0));
        });
    }

    Blocks keep{part};
    if (!yield(keep, 0)) return false;
    if (s < 2) return true;

    auto emit_split = [&](const std::vector<char>& extracted, int e) {
        // e extracted singletons plus the remainder (empty e means unused).
        Blocks blocks;
        std::vector<int> rest;
        for (int i = 0; i < s; ++i) {
            if (extracted[i])
                blocks.push_back({part[i]});
            else
                rest.push_back(part[i]);
        }
        if (!rest.empty()) blocks.push_back(std::move(rest));
        int ops = static_cast<int>(blocks.size()) - 1;
        (void)e;
        return yield(blocks, choice_cost(variant, ops, true));
    };

    int atomize_cost = choice_cost(variant, s - 1, true);
    if (op == Operation::atomizing) {
        if (atomize_cost > budget) return true;
        std::vector<char> all(s, 1);
        return emit_split(all, s);
    }

    // Extracting: peel e singletons, 1 <= e <= s-2, leaving one remainder;
    // peeling s-1 leaves a singleton remainder, identical to atomizing.
    int max_e = s - 2;
    if (variant == Variant::cautious) max_e = std::min(max_e, budget);
    std::vector<char> extracted(s, 0);
    for (int e = 1; e <= max_e; ++e) {
        if (choice_cost(variant, e, true) > budget) break;
        // Lexicographic combinations of e positions out of s.
        std::vector<int> comb(e);
        for (int i = 0; i < e; ++i) comb[i] = i;
        while (true) {
            std::fill(extracted.begin(), extracted.end(), 0);
            for (int i : comb) extracted[i] = 1;
            if (!emit_split(extracted, e)) return false;
            int i = e - 1;
            while (i >= 0 && comb[i] == s - e + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < e; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    if (atomize_cost <= budget) {
        std::vector<char> all(s, 1);
        return emit_split(all, s);
    }
    return true;
}

struct Enumerator {
    const Profile& profile;
    Operation op;
    Variant variant;
    uint64_t limit;
    const std::function<bool(const Partition&)>& visit;

    Blocks acc;
    uint64_t produced = 0;

    bool run(int part_idx, int budget) {
        if (part_idx == profile.parts.part_count()) {
            if (++produced > limit)
                throw BoundExceeded("refinement enumeration", produced, limit);
            return visit(Partition(acc));
        }
        return for_each_choice(
            profile.parts.part(part_idx), op, variant, budget,
            [&](const Blocks& blocks, int cost) {
                if (cost > budget) return true;
                size_t before = acc.size();
                acc.insert(acc.end(), blocks.begin(), blocks.end());
                bool cont = run(part_idx + 1, budget - cost);
                acc.resize(before);
                return cont;
            });
    }
};

}  // namespace

bool enumerate_refinements(const Profile& profile, Operation op, Variant variant,
                           std::optional<int> k, const OracleLimits& limits,
                           const std::function<bool(const Partition&)>& visit) {
    if (op == Operation::atomizing && variant == Variant::cautious)
        variant = Variant::conservative;
    int budget = std::numeric_limits<int>::max();
    if (variant != Variant::plain) {
        if (!k.has_value())
            throw std::invalid_argument("enumerate_refinements: missing k");
        budget = *k;
    }
    Enumerator e{profile, op, variant, limits.max_refinements, visit};
    return e.run(0, budget);
}

uint64_t count_refinements(const Profile& profile, Operation op, Variant variant,
                           std::optional<int> k, const OracleLimits& limits) {
    uint64_t n = 0;
    enumerate_refinements(profile, op, variant, k, limits, [&](const Partition&) {
        ++n;
        return true;
    });
    return n;
}

SolveResult oracle_solve(const ProblemInstance& inst, const OracleLimits& limits) {
    int best_h = -1;
    std::optional<Partition> best;
    enumerate_refinements(
        inst.profile, inst.operation, inst.variant, inst.k, limits,
        [&](const Partition& r) {
            int h = h_index(inst.graph, r, inst.measure);
            if (h > best_h || (h == best_h && (!best || r < *best))) {
                best_h = h;
                best = r;
            }
            return true;
        });

    SolveResult res;
    res.achieved_h = std::max(best_h, 0);
    res.feasible = best_h >= inst.h;
    if (res.feasible && best) {
        Refinement ref = Refinement::of(inst.profile, *best);
        res.parts_changed = ref.parts_changed(inst.profile);
        res.operations_used = ref.operations_used(inst.profile);
        res.refinement = std::move(ref);
    }
    return res;
}

}  // namespace hsplit
