#ifndef HSPLIT_PARTITION_HPP
#define HSPLIT_PARTITION_HPP

#include <vector>

#include "hsplit/graph.hpp"

namespace hsplit {

// A partition of a set of article indices, held in canonical form:
// members of each part ascending, parts ordered by smallest member.
class Partition {
public:
    Partition() = default;
    // Canonicalizes; throws ParseError if parts are empty or overlap.
    explicit Partition(std::vector<std::vector<int>> parts);

    int part_count() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& part(int i) const { return parts_[i]; }
    const std::vector<std::vector<int>>& parts() const { return parts_; }

    // Index of the part containing v, or -1.
    int part_of(int v) const;
    // All covered elements, ascending.
    std::vector<int> elements() const;
    int element_count() const;

    // Index of an identical part, or -1.
    int find_part(const std::vector<int>& part) const;

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    // Lexicographic on the canonical form; total order used to pick
    // deterministic witnesses among ties.
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

private:
    std::vector<std::vector<int>> parts_;
};

// Owned articles of a profile together with their merged-article partition.
struct Profile {
    // Validates that owned ids exist in g, parts cover only owned articles,
    // and adds implicit singleton parts for owned articles not mentioned.
    Profile(const CitationGraph& g, const std::vector<std::string>& owned_ids,
            const std::vector<std::vector<std::string>>& part_ids);
    Profile(std::vector<int> owned_sorted, Partition parts);
    Profile() = default;

    std::vector<int> owned;  // ascending
    Partition parts;         // partition of owned
};

// A refinement of a profile's partition: every part maps into exactly one
// original part (its origin).
struct Refinement {
    Partition parts;
    std::vector<int> origin;  // origin[i]: index into profile.parts

    // Throws ParseError if r does not partition profile's owned set or some
    // part crosses an original part boundary.
    static Refinement of(const Profile& profile, Partition r);

    // Number of original parts not present in the refinement (|P \ R|).
    int parts_changed(const Profile& profile) const;
    // Growth in part count (|R| - |P|): splitting operations performed.
    int operations_used(const Profile& profile) const;
};

}  // namespace hsplit

#endif
