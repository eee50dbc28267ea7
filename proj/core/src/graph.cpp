#include "hsplit/graph.hpp"

#include <algorithm>
#include <cctype>

#include "hsplit/errors.hpp"

namespace hsplit {

namespace {

bool valid_token(const std::string& s) {
    if (s.empty()) return false;
    for (unsigned char c : s) {
        if (std::isspace(c)) return false;
    }
    return true;
}

}  // namespace

CitationGraph::CitationGraph(
    std::vector<std::string> ids,
    const std::vector<std::pair<std::string, std::string>>& arcs) {
    for (const auto& id : ids) {
        if (!valid_token(id))
            throw ParseError("invalid article id '" + id + "'");
    }
    std::sort(ids.begin(), ids.end());
    for (size_t i = 1; i < ids.size(); ++i) {
        if (ids[i] == ids[i - 1])
            throw ParseError("duplicate article id '" + ids[i] + "'");
    }
    ids_ = std::move(ids);
    index_.reserve(ids_.size());
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i) index_[ids_[i]] = i;

    citers_.assign(ids_.size(), {});
    cites_.assign(ids_.size(), {});
    for (const auto& [src, dst] : arcs) {
        int u = index_of(src);
        int v = index_of(dst);
        if (u < 0) throw ParseError("arc endpoint '" + src + "' not declared");
        if (v < 0) throw ParseError("arc endpoint '" + dst + "' not declared");
        if (u == v) throw ParseError("self-citation on '" + src + "'");
        cites_[u].push_back(v);
        citers_[v].push_back(u);
    }
    for (auto& out : cites_) std::sort(out.begin(), out.end());
    for (int v = 0; v < article_count(); ++v) {
        auto& in = citers_[v];
        std::sort(in.begin(), in.end());
        if (std::adjacent_find(in.begin(), in.end()) != in.end())
            throw ParseError("duplicate arc into '" + ids_[v] + "'");
        arc_count_ += static_cast<int>(in.size());
    }
}

int CitationGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? -1 : it->second;
}

}  // namespace hsplit
