#include "hsplit/partition.hpp"

#include <algorithm>

#include "hsplit/errors.hpp"

namespace hsplit {

Partition::Partition(std::vector<std::vector<int>> parts) : parts_(std::move(parts)) {
    for (auto& p : parts_) {
        if (p.empty()) throw ParseError("empty part");
        std::sort(p.begin(), p.end());
    }
    std::sort(parts_.begin(), parts_.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<int> all = elements();
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw ParseError("overlapping parts");
}

int Partition::part_of(int v) const {
    for (int i = 0; i < part_count(); ++i) {
        const auto& p = parts_[i];
        if (std::binary_search(p.begin(), p.end(), v)) return i;
    }
    return -1;
}

std::vector<int> Partition::elements() const {
    std::vector<int> all;
    for (const auto& p : parts_) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return all;
}

int Partition::element_count() const {
    int n = 0;
    for (const auto& p : parts_) n += static_cast<int>(p.size());
    return n;
}

int Partition::find_part(const std::vector<int>& part) const {
    for (int i = 0; i < part_count(); ++i)
        if (parts_[i] == part) return i;
    return -1;
}

Profile::Profile(const CitationGraph& g, const std::vector<std::string>& owned_ids,
                 const std::vector<std::vector<std::string>>& part_ids) {
    for (const auto& id : owned_ids) {
        int v = g.index_of(id);
        if (v < 0) throw ParseError("owned article '" + id + "' not declared");
        owned.push_back(v);
    }
    std::sort(owned.begin(), owned.end());
    if (std::adjacent_find(owned.begin(), owned.end()) != owned.end())
        throw ParseError("duplicate own line");

    std::vector<std::vector<int>> parts_idx;
    std::vector<char> in_part(g.article_count(), 0);
    for (const auto& pid : part_ids) {
        std::vector<int> p;
        for (const auto& id : pid) {
            int v = g.index_of(id);
            if (v < 0) throw ParseError("part member '" + id + "' not declared");
            if (!std::binary_search(owned.begin(), owned.end(), v))
                throw ParseError("part member '" + id + "' not owned");
            p.push_back(v);
        }
        for (int v : p) in_part[v] = 1;
        parts_idx.push_back(std::move(p));
    }
    // Owned articles not mentioned in any part line are singleton parts.
    for (int v : owned)
        if (!in_part[v]) parts_idx.push_back({v});
    parts = Partition(std::move(parts_idx));
    if (parts.element_count() != static_cast<int>(owned.size()))
        throw ParseError("parts do not partition the owned set");
}

Profile::Profile(std::vector<int> owned_sorted, Partition p)
    : owned(std::move(owned_sorted)), parts(std::move(p)) {
    if (parts.elements() != owned)
        throw ParseError("parts do not partition the owned set");
}

Refinement Refinement::of(const Profile& profile, Partition r) {
    if (r.elements() != profile.owned)
        throw ParseError("refinement does not partition the owned set");
    // Rank-indexed origin lookup; scanning the original parts per member
    // would make this quadratic on profiles with thousands of parts.
    const std::vector<int>& owned = profile.owned;
    std::vector<int> owner(owned.size(), -1);
    for (int i = 0; i < profile.parts.part_count(); ++i)
        for (int v : profile.parts.part(i)) {
            auto it = std::lower_bound(owned.begin(), owned.end(), v);
            owner[it - owned.begin()] = i;
        }
    auto origin_of = [&](int v) {
        auto it = std::lower_bound(owned.begin(), owned.end(), v);
        return owner[it - owned.begin()];
    };
    std::vector<int> origin;
    origin.reserve(r.part_count());
    for (int i = 0; i < r.part_count(); ++i) {
        const auto& part = r.part(i);
        int o = origin_of(part.front());
        for (int v : part) {
            if (origin_of(v) != o)
                throw ParseError("part crosses an original part boundary");
        }
        origin.push_back(o);
    }
    Refinement out;
    out.parts = std::move(r);
    out.origin = std::move(origin);
    return out;
}

int Refinement::parts_changed(const Profile& profile) const {
    // An original part survives intact exactly when a single refinement part
    // originates from it: that part must then hold all of its members.
    std::vector<int> pieces(profile.parts.part_count(), 0);
    for (int o : origin) ++pieces[o];
    int changed = 0;
    for (int c : pieces)
        if (c != 1) ++changed;
    return changed;
}

int Refinement::operations_used(const Profile& profile) const {
    return parts.part_count() - profile.parts.part_count();
}

}  // namespace hsplit
