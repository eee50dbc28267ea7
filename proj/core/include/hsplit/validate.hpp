#ifndef HSPLIT_VALIDATE_HPP
#define HSPLIT_VALIDATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hsplit/instance.hpp"

namespace hsplit {

// Structural check of a candidate refinement against a profile.  Measure
// values are not involved; this only inspects part shapes and budgets.
struct ValidationReport {
    bool partitions_owned = false;   // candidate partitions the owned set
    bool refines = false;            // every part lies inside one original part
    bool atomizing_ok = false;       // parts are singletons or original parts
    bool extracting_ok = false;      // <=1 non-singleton strict subpart per original
    int parts_changed = 0;           // |P \ R|
    int operations_used = 0;         // |R| - |P|
    std::vector<std::string> violations;

    // Verdict for a concrete problem selection.  k is ignored for plain.
    bool valid_for(Operation op, Variant variant, std::optional<int> k) const;
};

ValidationReport validate_refinement(const Profile& profile, const Partition& r);

inline ValidationReport validate_refinement(const ProblemInstance& inst,
                                            const Partition& r) {
    return validate_refinement(inst.profile, r);
}

}  // namespace hsplit

#endif
