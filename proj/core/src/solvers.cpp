#include "hsplit/solvers.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hsplit/enumeration.hpp"
#include "hsplit/errors.hpp"
#include "hsplit/measures.hpp"
#include "hsplit/validate.hpp"

namespace hsplit {

namespace {

constexpr int kUnbounded = std::numeric_limits<int>::max();

void require_tags(const ProblemInstance& inst, const char* who, Operation op,
                  std::initializer_list<Variant> variants,
                  std::initializer_list<Measure> measures) {
    auto fail = [&](const char* what) {
        throw std::invalid_argument(std::string(who) + ": unsupported " + what);
    };
    if (inst.operation != op) fail("operation");
    if (std::find(variants.begin(), variants.end(), inst.variant) == variants.end())
        fail("variant");
    if (std::find(measures.begin(), measures.end(), inst.measure) == measures.end())
        fail("measure");
}

// Reusable scratch for distinct-citer counting.  `mark` carries an epoch
// stamp, `count` live per-citer reference counts (zeroed between uses via
// touch lists), so every pass stays linear in the arcs it looks at.
struct CiterScratch {
    std::vector<int> mark;
    std::vector<int> count;
    int epoch = 0;
    explicit CiterScratch(int n) : mark(n, -1), count(n, 0) {}
    int fresh() { return ++epoch; }
};

// Citation count of a part under sum or union.
int part_value(const CitationGraph& g, const std::vector<int>& part,
               Measure measure, CiterScratch& scratch) {
    if (measure == Measure::sum) {
        int total = 0;
        for (int v : part) total += g.indegree(v);
        return total;
    }
    int e = scratch.fresh();
    int distinct = 0;
    for (int v : part)
        for (int u : g.citers(v))
            if (scratch.mark[u] != e) {
                scratch.mark[u] = e;
                ++distinct;
            }
    return distinct;
}

std::vector<int> all_part_values(const CitationGraph& g, const Partition& parts,
                                 Measure measure, CiterScratch& scratch) {
    std::vector<int> vals(parts.part_count());
    for (int i = 0; i < parts.part_count(); ++i)
        vals[i] = part_value(g, parts.part(i), measure, scratch);
    return vals;
}

// Picks up to `budget` positive gains, largest first (counting sort over the
// gain value); ties broken by part index.  Returns chosen part indices.
std::vector<int> pick_top_gains(const std::vector<int>& gain, int budget,
                                int* total_gain) {
    int max_gain = 0;
    for (int gv : gain) max_gain = std::max(max_gain, gv);
    std::vector<std::vector<int>> bucket(max_gain + 1);
    for (int i = 0; i < static_cast<int>(gain.size()); ++i)
        if (gain[i] >= 1) bucket[gain[i]].push_back(i);
    std::vector<int> chosen;
    *total_gain = 0;
    for (int gv = max_gain; gv >= 1; --gv) {
        for (int i : bucket[gv]) {
            if (static_cast<int>(chosen.size()) >= budget) return chosen;
            chosen.push_back(i);
            *total_gain += gv;
        }
    }
    return chosen;
}

// ---- atomizing (sum / union) ----

// Best atomizing refinement for target h with at most `budget` parts
// changed.  A part is worth atomizing when it holds more reached singletons
// than the single reached count it contributes merged.  With `build` false
// only the count is produced; the search loop never needs the partition.
Partition atomize_probe(const ProblemInstance& inst, int h, int budget,
                        CiterScratch& scratch, int* count, bool build) {
    const Partition& parts = inst.profile.parts;
    const CitationGraph& g = inst.graph;
    int p = parts.part_count();
    std::vector<int> gain(p, 0);
    int base = 0;
    for (int i = 0; i < p; ++i) {
        const auto& part = parts.part(i);
        int kept = part_value(g, part, inst.measure, scratch) >= h ? 1 : 0;
        base += kept;
        if (part.size() >= 2) {
            int reached = 0;
            for (int v : part)
                if (g.indegree(v) >= h) ++reached;
            gain[i] = reached - kept;
        }
    }
    int total = 0;
    std::vector<int> chosen = pick_top_gains(gain, budget, &total);
    *count = base + total;
    if (!build) return Partition();

    std::vector<char> atomized(p, 0);
    for (int i : chosen) atomized[i] = 1;
    std::vector<std::vector<int>> blocks;
    for (int i = 0; i < p; ++i) {
        if (atomized[i])
            for (int v : parts.part(i)) blocks.push_back({v});
        else
            blocks.push_back(parts.part(i));
    }
    return Partition(std::move(blocks));
}

// ---- extracting (sum / union) ----

// Greedy extraction pass over one part.  Members are visited in ascending
// order; a member leaves when its own citations reach h and (when guarded)
// the remainder keeps h.  The citer-count array makes each remainder probe
// cost O(indegree of the member).
std::vector<int> extract_pass(const CitationGraph& g, const std::vector<int>& part,
                              int h, Measure measure, bool guard, int budget,
                              CiterScratch& scratch, int* remainder_value) {
    std::vector<int> extracted;
    if (measure == Measure::sum) {
        long long remaining = 0;
        for (int v : part) remaining += g.indegree(v);
        for (int v : part) {
            if (static_cast<int>(extracted.size()) >= budget) break;
            int d = g.indegree(v);
            if (d < h) continue;
            if (guard && remaining - d < h) continue;
            extracted.push_back(v);
            remaining -= d;
        }
        *remainder_value = static_cast<int>(remaining);
        return extracted;
    }
    std::vector<int> touched;
    int union_size = 0;
    for (int v : part)
        for (int u : g.citers(v)) {
            if (scratch.count[u]++ == 0) {
                touched.push_back(u);
                ++union_size;
            }
        }
    for (int v : part) {
        if (static_cast<int>(extracted.size()) >= budget) break;
        if (g.indegree(v) < h) continue;
        int lost = 0;
        for (int u : g.citers(v))
            if (scratch.count[u] == 1) ++lost;
        if (guard && union_size - lost < h) continue;
        extracted.push_back(v);
        for (int u : g.citers(v))
            if (--scratch.count[u] == 0) --union_size;
    }
    *remainder_value = union_size;
    for (int u : touched) scratch.count[u] = 0;
    return extracted;
}

std::vector<std::vector<int>> extraction_blocks(const std::vector<int>& part,
                                                const std::vector<int>& extracted) {
    std::vector<std::vector<int>> blocks;
    std::vector<int> rest;
    size_t j = 0;
    for (int v : part) {
        if (j < extracted.size() && extracted[j] == v) {
            blocks.push_back({v});
            ++j;
        } else {
            rest.push_back(v);
        }
    }
    if (!rest.empty()) blocks.push_back(std::move(rest));
    return blocks;
}

// Best extracting refinement for target h.  Plain extracts every reached
// singleton; cautious spends a global operation budget with the remainder
// guard; conservative applies full extraction sets in the k best parts.
// With `build` false only the count is produced.
Partition extract_probe(const ProblemInstance& inst, int h, Variant variant,
                        CiterScratch& scratch, int* count, bool build) {
    const Partition& parts = inst.profile.parts;
    const CitationGraph& g = inst.graph;
    int p = parts.part_count();
    std::vector<std::vector<int>> blocks;
    *count = 0;

    if (variant == Variant::plain) {
        for (int i = 0; i < p; ++i) {
            const auto& part = parts.part(i);
            int rest_value = 0;
            std::vector<int> ex = extract_pass(g, part, h, inst.measure,
                                               /*guard=*/false, kUnbounded,
                                               scratch, &rest_value);
            *count += static_cast<int>(ex.size());
            if (ex.size() < part.size() && rest_value >= h) ++*count;
            if (build) {
                auto bl = extraction_blocks(part, ex);
                blocks.insert(blocks.end(), bl.begin(), bl.end());
            }
        }
        return Partition(std::move(blocks));
    }

    if (variant == Variant::cautious) {
        int budget = *inst.k;
        for (int i = 0; i < p; ++i) {
            const auto& part = parts.part(i);
            int rest_value = 0;
            std::vector<int> ex = extract_pass(g, part, h, inst.measure,
                                               /*guard=*/true, budget, scratch,
                                               &rest_value);
            budget -= static_cast<int>(ex.size());
            *count += static_cast<int>(ex.size());
            if (ex.empty())
                *count += part_value(g, part, inst.measure, scratch) >= h ? 1 : 0;
            else
                ++*count;  // guarded remainder still reaches h
            if (build) {
                auto bl = extraction_blocks(part, ex);
                blocks.insert(blocks.end(), bl.begin(), bl.end());
            }
        }
        return Partition(std::move(blocks));
    }

    // conservative
    std::vector<std::vector<int>> sets(p);
    std::vector<int> gain(p, 0);
    int base = 0;
    for (int i = 0; i < p; ++i) {
        const auto& part = parts.part(i);
        int rest_value = 0;
        sets[i] = extract_pass(g, part, h, inst.measure, /*guard=*/true,
                               kUnbounded, scratch, &rest_value);
        gain[i] = static_cast<int>(sets[i].size());
        base += part_value(g, part, inst.measure, scratch) >= h ? 1 : 0;
    }
    int total = 0;
    std::vector<int> chosen = pick_top_gains(gain, *inst.k, &total);
    *count = base + total;
    if (!build) return Partition();
    std::vector<char> apply(p, 0);
    for (int i : chosen) apply[i] = 1;
    for (int i = 0; i < p; ++i) {
        auto bl = extraction_blocks(parts.part(i), apply[i] ? sets[i]
                                                            : std::vector<int>{});
        blocks.insert(blocks.end(), bl.begin(), bl.end());
    }
    return Partition(std::move(blocks));
}

// ---- shared max-h search ----

// Feasibility of the decision problem is monotone in the target (a witness
// for h also witnesses every smaller target), so the largest reachable
// h-index is found by binary search over targets.
template <typename FeasibleFn, typename WitnessFn>
SolveResult max_h_search(const ProblemInstance& inst, FeasibleFn feasible,
                         WitnessFn witness) {
    int lo = 0;
    int hi = static_cast<int>(inst.profile.owned.size()) + 1;
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (feasible(mid))
            lo = mid;
        else
            hi = mid;
    }
    SolveResult res;
    res.achieved_h = lo;
    res.feasible = lo >= inst.h;
    if (res.feasible) {
        Refinement ref = Refinement::of(inst.profile, witness(lo));
        res.parts_changed = ref.parts_changed(inst.profile);
        res.operations_used = ref.operations_used(inst.profile);
        res.refinement = std::move(ref);
    }
    return res;
}

}  // namespace

SolveResult atomize_solve(const ProblemInstance& inst) {
    require_tags(inst, "atomize_solve", Operation::atomizing, {Variant::plain},
                 {Measure::sum, Measure::union_});
    CiterScratch scratch(inst.graph.article_count());
    auto probe = [&](int h, int* count, bool build) {
        if (h == 0) {
            *count = inst.profile.parts.part_count();
            return build ? inst.profile.parts : Partition();
        }
        int budget = inst.profile.parts.part_count();
        return atomize_probe(inst, h, budget, scratch, count, build);
    };
    int c = 0;
    return max_h_search(
        inst, [&](int h) { probe(h, &c, /*build=*/false); return c >= h; },
        [&](int h) { return probe(h, &c, /*build=*/true); });
}

SolveResult atomize_conservative_solve(const ProblemInstance& inst) {
    require_tags(inst, "atomize_conservative_solve", Operation::atomizing,
                 {Variant::conservative}, {Measure::sum, Measure::union_});
    CiterScratch scratch(inst.graph.article_count());
    auto probe = [&](int h, int* count, bool build) {
        if (h == 0) {
            *count = inst.profile.parts.part_count();
            return build ? inst.profile.parts : Partition();
        }
        return atomize_probe(inst, h, *inst.k, scratch, count, build);
    };
    int c = 0;
    return max_h_search(
        inst, [&](int h) { probe(h, &c, /*build=*/false); return c >= h; },
        [&](int h) { return probe(h, &c, /*build=*/true); });
}

namespace {

SolveResult extract_common(const ProblemInstance& inst, Variant variant) {
    CiterScratch scratch(inst.graph.article_count());
    auto probe = [&](int h, int* count, bool build) {
        if (h == 0) {
            *count = inst.profile.parts.part_count();
            return build ? inst.profile.parts : Partition();
        }
        return extract_probe(inst, h, variant, scratch, count, build);
    };
    int c = 0;
    return max_h_search(
        inst, [&](int h) { probe(h, &c, /*build=*/false); return c >= h; },
        [&](int h) { return probe(h, &c, /*build=*/true); });
}

}  // namespace

SolveResult extract_solve(const ProblemInstance& inst) {
    require_tags(inst, "extract_solve", Operation::extracting, {Variant::plain},
                 {Measure::sum, Measure::union_});
    return extract_common(inst, Variant::plain);
}

SolveResult extract_cautious_solve(const ProblemInstance& inst) {
    require_tags(inst, "extract_cautious_solve", Operation::extracting,
                 {Variant::cautious}, {Measure::sum, Measure::union_});
    return extract_common(inst, Variant::cautious);
}

SolveResult extract_conservative_solve(const ProblemInstance& inst) {
    require_tags(inst, "extract_conservative_solve", Operation::extracting,
                 {Variant::conservative}, {Measure::sum, Measure::union_});
    return extract_common(inst, Variant::conservative);
}

// ---- merge subroutine ----

bool merge_subroutine(const CitationGraph& g, const std::vector<int>& articles,
                      int h, Measure measure, const SolverLimits& limits) {
    if (h < 0) throw std::invalid_argument("merge_subroutine: negative h");
    int n = static_cast<int>(articles.size());
    if (n > limits.max_partition_elements)
        throw BoundExceeded("merge subroutine set-partition enumeration", n,
                            limits.max_partition_elements);
    if (h == 0) return true;
    std::vector<int> sorted = articles;
    std::sort(sorted.begin(), sorted.end());

    CiterScratch scratch(g.article_count());
    bool found = false;
    for_each_set_partition(n, n, [&](const std::vector<std::vector<int>>& local) {
        std::vector<std::vector<int>> blocks;
        blocks.reserve(local.size());
        for (const auto& b : local) {
            std::vector<int> mapped;
            mapped.reserve(b.size());
            for (int i : b) mapped.push_back(sorted[i]);
            blocks.push_back(std::move(mapped));
        }
        int hx;
        if (measure != Measure::fusion) {
            std::vector<int> vals;
            vals.reserve(blocks.size());
            for (const auto& b : blocks)
                vals.push_back(part_value(g, b, measure, scratch));
            hx = h_index_of_counts(vals);
        } else {
            hx = h_index(g, Partition(blocks), Measure::fusion);
        }
        if (hx >= h) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

// ---- dividing (sum / union) ----

SolveResult divide_conservative_solve(const ProblemInstance& inst,
                                      const SolverLimits& limits) {
    require_tags(inst, "divide_conservative_solve", Operation::dividing,
                 {Variant::plain, Variant::conservative},
                 {Measure::sum, Measure::union_});
    const Partition& parts = inst.profile.parts;
    const CitationGraph& g = inst.graph;
    int p = parts.part_count();
    int H = static_cast<int>(inst.profile.owned.size());
    int budget = inst.variant == Variant::plain ? p : *inst.k;
    CiterScratch scratch(g.article_count());

    std::vector<int> values = all_part_values(g, parts, inst.measure, scratch);

    // table[i][t]: most blocks with value >= t over all set partitions of
    // part i (t capped at H; targets never exceed the owned count).
    std::vector<std::vector<int>> table(p);
    std::vector<int> hist(H + 2, 0);
    for (int i = 0; i < p; ++i) {
        const auto& part = parts.part(i);
        int s = static_cast<int>(part.size());
        table[i].assign(H + 1, 0);
        if (s == 1) {
            for (int t = 0; t <= H; ++t)
                table[i][t] = values[i] >= t ? 1 : 0;
            continue;
        }
        if (s > limits.max_partition_elements)
            throw BoundExceeded("dividing set-partition enumeration", s,
                                limits.max_partition_elements);
        for_each_set_partition(s, s, [&](const std::vector<std::vector<int>>& local) {
            std::fill(hist.begin(), hist.end(), 0);
            for (const auto& b : local) {
                std::vector<int> mapped;
                mapped.reserve(b.size());
                for (int j : b) mapped.push_back(part[j]);
                ++hist[std::min(part_value(g, mapped, inst.measure, scratch), H + 1)];
            }
            int ge = 0;
            for (int t = H + 1; t >= 0; --t) {
                ge += hist[t];
                if (t <= H && ge > table[i][t]) table[i][t] = ge;
            }
            return true;
        });
    }

    auto plan = [&](int h, std::vector<int>* chosen_out) {
        int base = 0;
        std::vector<int> gain(p, 0);
        for (int i = 0; i < p; ++i) {
            int kept = values[i] >= h ? 1 : 0;
            base += kept;
            gain[i] = table[i][h] - kept;
        }
        int total = 0;
        std::vector<int> chosen = pick_top_gains(gain, budget, &total);
        if (chosen_out) *chosen_out = std::move(chosen);
        return base + total;
    };

    auto witness = [&](int h) {
        if (h == 0) return parts;
        std::vector<int> chosen;
        plan(h, &chosen);
        std::vector<char> split(p, 0);
        for (int i : chosen) split[i] = 1;
        std::vector<std::vector<int>> blocks;
        for (int i = 0; i < p; ++i) {
            const auto& part = parts.part(i);
            if (!split[i]) {
                blocks.push_back(part);
                continue;
            }
            // First set partition attaining table[i][h], in enumeration order.
            int want = table[i][h];
            int s = static_cast<int>(part.size());
            for_each_set_partition(s, s, [&](const std::vector<std::vector<int>>& local) {
                int ge = 0;
                std::vector<std::vector<int>> mapped;
                for (const auto& b : local) {
                    std::vector<int> mb;
                    mb.reserve(b.size());
                    for (int j : b) mb.push_back(part[j]);
                    if (part_value(g, mb, inst.measure, scratch) >= h) ++ge;
                    mapped.push_back(std::move(mb));
                }
                if (ge == want) {
                    blocks.insert(blocks.end(), mapped.begin(), mapped.end());
                    return false;
                }
                return true;
            });
        }
        return Partition(std::move(blocks));
    };

    return max_h_search(
        inst, [&](int h) { return h == 0 || plan(h, nullptr) >= h; }, witness);
}

// ---- atomizing under fusion ----

namespace {

// Distinct citers a part can ever reach: everyone outside the part itself.
int reachable_citers(const CitationGraph& g, const std::vector<int>& part,
                     CiterScratch& scratch) {
    int e = scratch.fresh();
    for (int v : part) scratch.mark[v] = e;
    int distinct = 0;
    for (int v : part)
        for (int u : g.citers(v))
            if (scratch.mark[u] != e) {
                scratch.mark[u] = e;
                ++distinct;
            }
    return distinct;
}

int count_reaching(const std::vector<int>& counts, int h) {
    int c = 0;
    for (int v : counts)
        if (v >= h) ++c;
    return c;
}

// Minimum-degree greedy independent set: repeatedly keep a live vertex of
// smallest degree (smallest index on ties) and drop its neighbours.  Each
// round removes at most min-degree + 1 vertices, which is what makes the
// caller's size guarantee go through.
std::vector<int> greedy_independent_set(
    int n, const std::vector<std::vector<int>>& adj, int want) {
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = static_cast<int>(adj[v].size());
    std::vector<char> dead(n, 0);
    std::vector<int> chosen;
    while (static_cast<int>(chosen.size()) < want) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!dead[v] && (best < 0 || degree[v] < degree[best])) best = v;
        if (best < 0) break;
        chosen.push_back(best);
        dead[best] = 1;
        for (int u : adj[best]) {
            if (dead[u]) continue;
            dead[u] = 1;
            for (int w : adj[u])
                if (!dead[w]) --degree[w];
        }
    }
    return chosen;
}

}  // namespace

SolveResult atomize_fusion_solve(const ProblemInstance& inst,
                                 const SolverLimits& limits) {
    require_tags(inst, "atomize_fusion_solve", Operation::atomizing,
                 {Variant::plain}, {Measure::fusion});
    const CitationGraph& g = inst.graph;
    const Profile& profile = inst.profile;
    CiterScratch scratch(g.article_count());

    // Feasibility at one target; returns a witness or nullopt.
    auto probe = [&](int h) -> std::optional<Partition> {
        if (h == 0) return profile.parts;
        std::vector<int> counts = part_citations(g, profile.parts, Measure::fusion);
        if (count_reaching(counts, h) >= h) return profile.parts;

        // Parts that cannot reach h citations no matter what the rest does
        // are atomized up front; that never hurts the other parts.
        std::vector<std::vector<int>> blocks2;
        for (int i = 0; i < profile.parts.part_count(); ++i) {
            const auto& part = profile.parts.part(i);
            if (part.size() >= 2 && reachable_citers(g, part, scratch) < h)
                for (int v : part) blocks2.push_back({v});
            else
                blocks2.push_back(part);
        }
        Partition p2(std::move(blocks2));
        std::vector<int> counts2 = part_citations(g, p2, Measure::fusion);
        if (count_reaching(counts2, h) >= h) return p2;

        // Undecided parts: could reach h with enough atomizing elsewhere,
        // but do not reach it yet.
        std::vector<int> undecided;
        for (int i = 0; i < p2.part_count(); ++i)
            if (counts2[i] < h && reachable_citers(g, p2.part(i), scratch) >= h)
                undecided.push_back(i);

        long threshold = 2L * h * h - h;
        if (static_cast<long>(undecided.size()) >= threshold) {
            // Every undecided part is cited by fewer than h parts, so the
            // conflict graph is sparse enough to hold an independent set of
            // size h; keeping exactly those parts and atomizing everything
            // else hands each of them all of its reachable citers.
            std::vector<int> block_slot(g.article_count(), -1);
            for (int idx = 0; idx < static_cast<int>(undecided.size()); ++idx)
                for (int v : p2.part(undecided[idx])) block_slot[v] = idx;
            std::vector<std::pair<int, int>> conflict;
            for (int idx = 0; idx < static_cast<int>(undecided.size()); ++idx)
                for (int v : p2.part(undecided[idx]))
                    for (int u : g.citers(v)) {
                        int o = block_slot[u];
                        if (o >= 0 && o != idx)
                            conflict.emplace_back(std::min(o, idx), std::max(o, idx));
                    }
            std::sort(conflict.begin(), conflict.end());
            conflict.erase(std::unique(conflict.begin(), conflict.end()),
                           conflict.end());
            std::vector<std::vector<int>> adj(undecided.size());
            for (auto [a, b] : conflict) {
                adj[a].push_back(b);
                adj[b].push_back(a);
            }
            std::vector<int> is = greedy_independent_set(
                static_cast<int>(undecided.size()), adj, h);
            if (static_cast<int>(is.size()) < h)
                throw std::logic_error("independent set below guaranteed size");
            std::vector<char> keep(p2.part_count(), 0);
            for (int idx : is) keep[undecided[idx]] = 1;
            std::vector<std::vector<int>> blocks;
            for (int i = 0; i < p2.part_count(); ++i) {
                if (keep[i] || p2.part(i).size() == 1)
                    blocks.push_back(p2.part(i));
                else
                    for (int v : p2.part(i)) blocks.push_back({v});
            }
            Partition witness(std::move(blocks));
            if (h_index(g, witness, Measure::fusion) < h)
                throw std::logic_error("independent-set witness misses target");
            return witness;
        }

        // Brute force over atomize-subsets of the remaining merged parts.
        std::vector<int> eligible;
        for (int i = 0; i < p2.part_count(); ++i)
            if (p2.part(i).size() >= 2) eligible.push_back(i);
        int e = static_cast<int>(eligible.size());
        if (e > limits.max_subset_parts)
            throw BoundExceeded("atomize-subset enumeration", e,
                                limits.max_subset_parts);
        for (uint64_t mask = 0; mask < (uint64_t{1} << e); ++mask) {
            std::vector<std::vector<int>> out;
            std::vector<char> atomized(p2.part_count(), 0);
            for (int bit = 0; bit < e; ++bit)
                if (mask & (uint64_t{1} << bit)) atomized[eligible[bit]] = 1;
            for (int i = 0; i < p2.part_count(); ++i) {
                if (atomized[i])
                    for (int v : p2.part(i)) out.push_back({v});
                else
                    out.push_back(p2.part(i));
            }
            Partition cand(std::move(out));
            if (h_index(g, cand, Measure::fusion) >= h) return cand;
        }
        return std::nullopt;
    };

    std::optional<Partition> witness_lo = probe(0);
    int lo = 0;
    int hi = static_cast<int>(profile.owned.size()) + 1;
    while (hi - lo > 1) {
        int mid = lo + (hi - lo) / 2;
        if (auto w = probe(mid)) {
            lo = mid;
            witness_lo = std::move(w);
        } else {
            hi = mid;
        }
    }
    SolveResult res;
    res.achieved_h = lo;
    res.feasible = lo >= inst.h;
    if (res.feasible) {
        Refinement ref = Refinement::of(profile, std::move(*witness_lo));
        res.parts_changed = ref.parts_changed(profile);
        res.operations_used = ref.operations_used(profile);
        res.refinement = std::move(ref);
    }
    return res;
}

bool solve_uses_oracle(const ProblemInstance& inst) {
    if (inst.measure == Measure::fusion)
        return !(inst.operation == Operation::atomizing &&
                 inst.variant == Variant::plain);
    return inst.operation == Operation::dividing && inst.variant == Variant::cautious;
}

SolveResult solve(const ProblemInstance& inst, const SolverLimits& limits,
                  const OracleLimits& oracle_limits) {
    if (solve_uses_oracle(inst)) return oracle_solve(inst, oracle_limits);
    if (inst.measure == Measure::fusion) return atomize_fusion_solve(inst, limits);
    switch (inst.operation) {
        case Operation::atomizing:
            return inst.variant == Variant::plain
                       ? atomize_solve(inst)
                       : atomize_conservative_solve(inst);
        case Operation::extracting:
            if (inst.variant == Variant::plain) return extract_solve(inst);
            if (inst.variant == Variant::cautious) return extract_cautious_solve(inst);
            return extract_conservative_solve(inst);
        case Operation::dividing:
            return divide_conservative_solve(inst, limits);
    }
    throw std::invalid_argument("solve: unknown operation");
}

}  // namespace hsplit
