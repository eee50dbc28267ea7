#include "hsplit/reductions.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <sstream>

#include "hsplit/errors.hpp"

namespace hsplit {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> toks;
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_positive(const std::string& tok, const std::string& what) {
    try {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v <= 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid " + what + " '" + tok + "'");
    }
}

}  // namespace

UndirectedGraph UndirectedGraph::make(int vertex_count,
                                      std::vector<std::pair<int, int>> edges) {
    if (vertex_count < 0) throw ParseError("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
            throw ParseError("edge endpoint out of range: " + std::to_string(u) +
                             " " + std::to_string(v));
        if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw ParseError("duplicate edge " + std::to_string(dup->first) + " " +
                         std::to_string(dup->second));
    UndirectedGraph g;
    g.vertex_count = vertex_count;
    g.edges = std::move(edges);
    return g;
}

UndirectedGraph parse_undirected(std::istream& in) {
    std::vector<std::pair<int, int>> edges;
    int declared = -1;
    int max_seen = 0;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw ParseError("graph line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c" || toks[0][0] == '#') continue;
        if (toks[0] == "p") {
            if (toks.size() != 4 || toks[1] != "edge")
                fail("expected 'p edge <vertices> <edges>'");
            declared = parse_positive(toks[2], "vertex count");
            continue;
        }
        if (toks[0] == "e") {
            if (toks.size() != 3) fail("expected 'e <u> <v>'");
            toks.erase(toks.begin());
        } else if (toks[0] == "vertices") {
            if (toks.size() != 2) fail("expected 'vertices <n>'");
            declared = parse_positive(toks[1], "vertex count");
            continue;
        }
        if (toks.size() != 2) fail("expected '<u> <v>'");
        int u = parse_positive(toks[0], "vertex");
        int v = parse_positive(toks[1], "vertex");
        max_seen = std::max({max_seen, u, v});
        edges.emplace_back(u, v);
    }
    return UndirectedGraph::make(declared >= 0 ? declared : max_seen,
                                 std::move(edges));
}

int BinPacking::total_size() const {
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

int BinPacking::slack() const { return bins * capacity - total_size(); }

BinPacking parse_bin_packing(std::istream& in) {
    BinPacking bp;
    bool have_sizes = false, have_bins = false, have_capacity = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("bin-packing line " + std::to_string(lineno) + ": " +
                             msg);
        };
        if (toks[0] == "sizes") {
            if (have_sizes) fail("duplicate sizes line");
            if (toks.size() < 2) fail("sizes line needs at least one item");
            for (size_t i = 1; i < toks.size(); ++i)
                bp.sizes.push_back(parse_positive(toks[i], "item size"));
            have_sizes = true;
        } else if (toks[0] == "bins") {
            if (have_bins || toks.size() != 2) fail("expected 'bins <count>'");
            bp.bins = parse_positive(toks[1], "bin count");
            have_bins = true;
        } else if (toks[0] == "capacity") {
            if (have_capacity || toks.size() != 2)
                fail("expected 'capacity <B>'");
            bp.capacity = parse_positive(toks[1], "capacity");
            have_capacity = true;
        } else {
            fail("unknown directive '" + toks[0] + "'");
        }
    }
    if (!have_sizes) throw ParseError("bin-packing input: missing sizes line");
    if (!have_bins) throw ParseError("bin-packing input: missing bins line");
    if (!have_capacity)
        throw ParseError("bin-packing input: missing capacity line");
    return bp;
}

CnfFormula parse_cnf(std::istream& in) {
    CnfFormula f;
    bool have_header = false;
    int declared_clauses = 0;
    std::vector<int> current;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = tokens_of(line);
        if (toks.empty() || toks[0] == "c" || toks[0][0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("cnf line " + std::to_string(lineno) + ": " + msg);
        };
        if (toks[0] == "p") {
            if (have_header || toks.size() != 4 || toks[1] != "cnf")
                fail("expected one 'p cnf <vars> <clauses>' header");
            f.variable_count = parse_positive(toks[2], "variable count");
            declared_clauses = parse_positive(toks[3], "clause count");
            have_header = true;
            continue;
        }
        if (!have_header) fail("clause before 'p cnf' header");
        for (const auto& tok : toks) {
            int lit;
            try {
                size_t pos = 0;
                lit = std::stoi(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                fail("invalid literal '" + tok + "'");
                return f;  // unreachable
            }
            if (lit == 0) {
                if (current.empty()) fail("empty clause");
                if (current.size() > 3)
                    fail("clause has more than three literals");
                while (current.size() < 3) current.push_back(current.back());
                f.clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                if (std::abs(lit) > f.variable_count)
                    fail("literal '" + tok + "' out of range");
                current.push_back(lit);
            }
        }
    }
    if (!have_header) throw ParseError("cnf input: missing 'p cnf' header");
    if (!current.empty()) throw ParseError("cnf input: unterminated clause");
    if (static_cast<int>(f.clauses.size()) != declared_clauses)
        throw ParseError("cnf input: header declares " +
                         std::to_string(declared_clauses) + " clauses, found " +
                         std::to_string(f.clauses.size()));
    return f;
}

ReductionResult reduce_bin_packing(const BinPacking& bp) {
    for (int s : bp.sizes)
        if (s <= 0) throw Error("bin packing reduction: item sizes must be positive");
    if (bp.bins <= 0 || bp.capacity <= 0)
        throw Error("bin packing reduction: bins and capacity must be positive");
    int total = bp.total_size();
    int slack = bp.slack();
    if (slack < 0)
        throw Error("bin packing reduction: total item size " +
                    std::to_string(total) + " exceeds bins * capacity " +
                    std::to_string(bp.bins * bp.capacity));

    std::vector<std::string> warnings;
    if (bp.capacity >= total)
        warnings.push_back("capacity " + std::to_string(bp.capacity) +
                           " is at least the total item size " +
                           std::to_string(total) +
                           "; the packing is trivially feasible");
    if (bp.bins >= bp.capacity)
        warnings.push_back(
            "bin count " + std::to_string(bp.bins) +
            " is at least the capacity " + std::to_string(bp.capacity) +
            "; fewer blocks than bins can already reach the target h-index, "
            "so feasibility may not require a full packing");

    int helpers = std::max(0, bp.capacity - bp.bins);
    int items = static_cast<int>(bp.sizes.size());
    // Citers x1..x<total> normally suffice; degenerate (warned) parameters
    // can demand more for the helper articles or fillers.
    int x_count = std::max({total, helpers > 0 ? bp.capacity : 0,
                            slack > 0 ? 1 : 0});

    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> arcs;
    auto x = [](int i) { return "x" + std::to_string(i); };
    for (int i = 1; i <= x_count; ++i) ids.push_back(x(i));

    std::vector<std::string> merged_part;
    for (int i = 1; i <= items; ++i) {
        std::string a = "a" + std::to_string(i);
        ids.push_back(a);
        merged_part.push_back(a);
        for (int j = 1; j <= bp.sizes[i - 1]; ++j) arcs.emplace_back(x(j), a);
    }
    for (int i = 1; i <= slack; ++i) {
        std::string u = "u" + std::to_string(i);
        ids.push_back(u);
        merged_part.push_back(u);
        arcs.emplace_back(x(1), u);
    }
    std::vector<std::string> owned = merged_part;
    for (int i = 1; i <= helpers; ++i) {
        std::string hid = "h" + std::to_string(i);
        ids.push_back(hid);
        owned.push_back(hid);
        for (int j = 1; j <= bp.capacity; ++j) arcs.emplace_back(x(j), hid);
    }

    CitationGraph graph(std::move(ids), arcs);
    Profile profile(graph, owned, {merged_part});
    ProblemInstance inst = ProblemInstance::make(
        std::move(graph), std::move(profile), Operation::dividing,
        Variant::cautious, Measure::sum, bp.capacity, bp.bins - 1);
    return {std::move(inst), std::move(warnings)};
}

ReductionResult reduce_three_sat(const CnfFormula& f) {
    int n = f.variable_count;
    int m = static_cast<int>(f.clauses.size());
    int width = n + m;
    if (width <= 3)
        throw Error("3-SAT reduction requires variables + clauses > 3, got " +
                    std::to_string(width));
    for (const auto& clause : f.clauses)
        for (int lit : clause)
            if (lit == 0 || std::abs(lit) > n)
                throw Error("3-SAT reduction: literal out of range");

    auto xf = [&](int var, int l) {
        return "XF" + std::to_string(var) + "_" + std::to_string(l);
    };
    auto xt = [&](int var, int l) {
        return "XT" + std::to_string(var) + "_" + std::to_string(l);
    };

    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> arcs;
    std::vector<std::vector<std::string>> parts;
    for (int i = 1; i <= n; ++i) {
        std::vector<std::string> fpart, tpart;
        for (int l = 1; l <= 2 * width; ++l) {
            fpart.push_back(xf(i, l));
            tpart.push_back(xt(i, l));
        }
        ids.insert(ids.end(), fpart.begin(), fpart.end());
        ids.insert(ids.end(), tpart.begin(), tpart.end());
        // Opposite-side citations at doubling indices keep the graph acyclic.
        for (int l = 1; l <= width; ++l) {
            arcs.emplace_back(xf(i, l), xt(i, 2 * l));
            arcs.emplace_back(xt(i, l), xf(i, 2 * l));
        }
        parts.push_back(std::move(fpart));
        parts.push_back(std::move(tpart));
    }
    for (int j = 1; j <= m; ++j) {
        std::string c = "C" + std::to_string(j);
        ids.push_back(c);
        for (int lit : f.clauses[j - 1]) {
            int var = std::abs(lit);
            for (int l = 1; l <= width; ++l)
                arcs.emplace_back(lit > 0 ? xt(var, l) : xf(var, l), c);
        }
    }
    // Repeated literals in a clause would emit the same arc twice.
    std::sort(arcs.begin(), arcs.end());
    arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

    std::vector<std::string> owned = ids;
    CitationGraph graph(std::move(ids), arcs);
    Profile profile(graph, owned, parts);
    ProblemInstance inst = ProblemInstance::make(
        std::move(graph), std::move(profile), Operation::atomizing,
        Variant::plain, Measure::fusion, width, std::nullopt);
    return {std::move(inst), {}};
}

ReductionResult reduce_clique(const UndirectedGraph& g, int k,
                              Operation target) {
    if (k < 1) throw Error("clique reduction requires k >= 1");
    int pairs = k * (k - 1) / 2;
    int r = (pairs + 1) / 2;  // ceil(pairs / 2)

    std::vector<std::string> warnings;
    if (k < 4)
        warnings.push_back("clique size " + std::to_string(k) +
                           " is below 4; the generated instance is degenerate "
                           "and may not reflect clique existence");

    auto rv = [&](int v, int l) {
        return "R" + std::to_string(v) + "_" + std::to_string(l);
    };
    std::vector<std::string> ids;
    std::vector<std::pair<std::string, std::string>> arcs;
    std::vector<std::vector<std::string>> parts;
    for (int v = 1; v <= g.vertex_count; ++v) {
        std::vector<std::string> part;
        for (int l = 1; l <= r; ++l) part.push_back(rv(v, l));
        ids.insert(ids.end(), part.begin(), part.end());
        if (!part.empty()) parts.push_back(std::move(part));
    }
    for (auto [v, w] : g.edges) {
        std::string e = "e_" + std::to_string(v) + "_" + std::to_string(w);
        ids.push_back(e);
        for (int l = 1; l <= r; ++l) {
            arcs.emplace_back(rv(v, l), e);
            arcs.emplace_back(rv(w, l), e);
        }
    }

    Variant variant = Variant::conservative;
    int budget = k;
    if (target != Operation::atomizing) {
        // Atomizing one vertex part costs r - 1 splits, so the equivalent
        // operation-count budget covers k of them.
        variant = Variant::cautious;
        budget = k * std::max(0, r - 1);
    }

    std::vector<std::string> owned = ids;
    CitationGraph graph(std::move(ids), arcs);
    Profile profile(graph, owned, parts);
    ProblemInstance inst =
        ProblemInstance::make(std::move(graph), std::move(profile), target,
                              variant, Measure::fusion, pairs, budget);
    return {std::move(inst), std::move(warnings)};
}

}  // namespace hsplit
