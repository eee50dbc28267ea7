#include "hsplit/validate.hpp"

#include <algorithm>

namespace hsplit {

bool ValidationReport::valid_for(Operation op, Variant variant,
                                 std::optional<int> k) const {
    if (!partitions_owned || !refines) return false;
    if (op == Operation::atomizing && !atomizing_ok) return false;
    if (op == Operation::extracting && !extracting_ok) return false;
    if (variant == Variant::conservative)
        return k.has_value() && parts_changed <= *k;
    if (variant == Variant::cautious) {
        if (!k.has_value()) return false;
        // One atomizing operation splits a whole part into atoms, so for
        // atomizing the operation count is the number of changed parts and
        // caution coincides with conservativity.
        int ops = op == Operation::atomizing ? parts_changed : operations_used;
        return ops <= *k;
    }
    return true;
}

ValidationReport validate_refinement(const Profile& profile, const Partition& r) {
    ValidationReport rep;
    rep.partitions_owned = (r.elements() == profile.owned);
    if (!rep.partitions_owned)
        rep.violations.push_back("does not partition the owned set");

    rep.refines = rep.partitions_owned;
    for (int i = 0; rep.refines && i < r.part_count(); ++i) {
        const auto& part = r.part(i);
        int o = profile.parts.part_of(part.front());
        for (int v : part) {
            if (profile.parts.part_of(v) != o) {
                rep.refines = false;
                rep.violations.push_back("a part crosses an original part boundary");
                break;
            }
        }
    }

    rep.atomizing_ok = rep.refines;
    rep.extracting_ok = rep.refines;
    if (rep.refines) {
        // Count, per original part, refinement parts that are non-singleton
        // strict subsets.  Atomizing allows none; extracting allows one.
        std::vector<int> strict_nonsingleton(profile.parts.part_count(), 0);
        for (int i = 0; i < r.part_count(); ++i) {
            const auto& part = r.part(i);
            if (part.size() < 2) continue;
            int o = profile.parts.part_of(part.front());
            if (part == profile.parts.part(o)) continue;
            ++strict_nonsingleton[o];
        }
        for (int c : strict_nonsingleton) {
            if (c >= 1) rep.atomizing_ok = false;
            if (c >= 2) rep.extracting_ok = false;
        }
        if (!rep.atomizing_ok)
            rep.violations.push_back("a part is neither a singleton nor an original part");
        if (!rep.extracting_ok)
            rep.violations.push_back(
                "an original part has two non-singleton strict subparts");

        Refinement ref = Refinement::of(profile, r);
        rep.parts_changed = ref.parts_changed(profile);
        rep.operations_used = ref.operations_used(profile);
    }
    return rep;
}

}  // namespace hsplit
