#include "hsplit/profile_gen.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <random>
#include <sstream>

#include "hsplit/errors.hpp"

namespace hsplit {

std::vector<TitledArticle> parse_titles(std::istream& in) {
    std::vector<TitledArticle> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos || tab == 0)
            throw ParseError("titles line " + std::to_string(lineno) +
                             ": expected <id><TAB><title>");
        out.push_back({line.substr(0, tab), line.substr(tab + 1)});
    }
    return out;
}

std::vector<std::string> title_words(const std::string& title) {
    std::vector<std::string> words;
    std::string cur;
    for (char c : title) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            cur.push_back(static_cast<char>(
                std::tolower(static_cast<unsigned char>(c))));
        } else if (!cur.empty()) {
            words.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) words.push_back(std::move(cur));
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

Rational Rational::parse(const std::string& text) {
    auto bad = [&] {
        throw ParseError("invalid threshold '" + text +
                         "': expected a decimal in [0,1]");
    };
    if (text.empty()) bad();
    std::string digits;
    long long den = 1;
    bool seen_dot = false, seen_digit = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_dot) bad();
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            seen_digit = true;
            if (digits.size() >= 18)
                throw ParseError("threshold '" + text + "' has too many digits");
            digits.push_back(c);
            if (seen_dot) den *= 10;
        } else {
            bad();
        }
    }
    if (!seen_digit) bad();
    Rational r;
    r.den = den;
    r.num = 0;
    for (char c : digits) r.num = r.num * 10 + (c - '0');
    if (r.num > r.den) bad();  // threshold above 1
    return r;
}

UndirectedGraph compatibility_graph(const std::vector<TitledArticle>& articles,
                                    Rational t) {
    int n = static_cast<int>(articles.size());
    std::vector<std::vector<std::string>> words(n);
    for (int i = 0; i < n; ++i) words[i] = title_words(articles[i].title);

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            long long inter = 0;
            size_t a = 0, b = 0;
            while (a < words[i].size() && b < words[j].size()) {
                int cmp = words[i][a].compare(words[j][b]);
                if (cmp == 0) {
                    ++inter;
                    ++a;
                    ++b;
                } else if (cmp < 0) {
                    ++a;
                } else {
                    ++b;
                }
            }
            long long uni = static_cast<long long>(words[i].size()) +
                            static_cast<long long>(words[j].size()) - inter;
            if (inter * t.den >= t.num * uni) edges.emplace_back(i + 1, j + 1);
        }
    }
    return UndirectedGraph::make(n, std::move(edges));
}

std::vector<std::vector<int>> greedy_merge(const UndirectedGraph& g) {
    int n = g.vertex_count;
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    auto adjacent = [&](int u, int v) {
        return std::binary_search(adj[u].begin(), adj[u].end(), v);
    };

    std::vector<char> alive(n + 1, 1);
    std::vector<std::vector<int>> parts;
    for (;;) {
        int seed = 0, best_deg = 0;
        for (int v = 1; v <= n; ++v) {
            if (!alive[v]) continue;
            int deg = 0;
            for (int u : adj[v])
                if (alive[u]) ++deg;
            if (deg > best_deg) {
                best_deg = deg;
                seed = v;
            }
        }
        if (best_deg == 0) break;
        std::vector<int> clique{seed};
        for (;;) {
            int next = 0;
            for (int v = 1; v <= n && next == 0; ++v) {
                if (!alive[v] ||
                    std::find(clique.begin(), clique.end(), v) != clique.end())
                    continue;
                bool all = true;
                for (int u : clique)
                    if (!adjacent(u, v)) {
                        all = false;
                        break;
                    }
                if (all) next = v;
            }
            if (next == 0) break;
            clique.push_back(next);
        }
        std::sort(clique.begin(), clique.end());
        for (int v : clique) alive[v] = 0;
        parts.push_back(std::move(clique));
    }
    for (int v = 1; v <= n; ++v)
        if (alive[v]) parts.push_back({v});
    return parts;
}

namespace {

// Seeded coin with probability p; avoids std::uniform_* so output is stable
// across standard-library implementations.
bool coin(std::mt19937_64& rng, double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // 2^53
    return (rng() >> 11) < threshold;
}

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t bound) {
    return rng() % bound;
}

}  // namespace

GeneratedProfile random_profile(int n_articles, int n_external,
                                double arc_density, double merge_rate,
                                std::uint64_t seed) {
    if (n_articles < 0 || n_external < 0)
        throw std::invalid_argument("random_profile: negative counts");
    GeneratedProfile out;
    for (int i = 1; i <= n_articles; ++i) {
        out.ids.push_back("w" + std::to_string(i));
        out.owned.push_back(out.ids.back());
    }
    for (int i = 1; i <= n_external; ++i)
        out.ids.push_back("x" + std::to_string(i));

    std::mt19937_64 rng(seed);

    // Arcs respect a shuffled order, so the graph is acyclic by construction.
    std::vector<int> order(out.ids.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    for (size_t i = order.size(); i > 1; --i)
        std::swap(order[i - 1], order[pick(rng, i)]);
    for (size_t i = 0; i < order.size(); ++i)
        for (size_t j = i + 1; j < order.size(); ++j)
            if (coin(rng, arc_density))
                out.arcs.emplace_back(out.ids[order[i]], out.ids[order[j]]);

    std::vector<std::vector<std::string>> parts;
    for (const std::string& id : out.owned) {
        if (!parts.empty() && coin(rng, merge_rate))
            parts[pick(rng, parts.size())].push_back(id);
        else
            parts.push_back({id});
    }
    for (auto& part : parts)
        if (part.size() >= 2) out.parts.push_back(std::move(part));
    return out;
}

}  // namespace hsplit
