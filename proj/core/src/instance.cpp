#include "hsplit/instance.hpp"

#include <fstream>
#include <sstream>

#include "hsplit/errors.hpp"

namespace hsplit {

const char* to_string(Operation op) {
    switch (op) {
        case Operation::atomizing: return "atomizing";
        case Operation::extracting: return "extracting";
        case Operation::dividing: return "dividing";
    }
    return "?";
}

const char* to_string(Variant variant) {
    switch (variant) {
        case Variant::plain: return "plain";
        case Variant::conservative: return "conservative";
        case Variant::cautious: return "cautious";
    }
    return "?";
}

const char* to_string(Measure measure) {
    switch (measure) {
        case Measure::sum: return "sum";
        case Measure::union_: return "union";
        case Measure::fusion: return "fusion";
    }
    return "?";
}

ProblemInstance ProblemInstance::make(CitationGraph graph, Profile profile,
                                      Operation op, Variant variant,
                                      Measure measure, int h,
                                      std::optional<int> k) {
    if (h < 0) throw ParseError("h must be non-negative");
    if (variant == Variant::plain) {
        if (k.has_value()) throw ParseError("k given for plain variant");
    } else {
        if (!k.has_value())
            throw ParseError("missing k for non-plain variant");
        if (*k < 0) throw ParseError("k must be non-negative");
    }
    // Atomizing performs one operation per changed part, so the cautious
    // and conservative budgets coincide; normalize to conservative.
    if (op == Operation::atomizing && variant == Variant::cautious)
        variant = Variant::conservative;
    ProblemInstance inst;
    inst.graph = std::move(graph);
    inst.profile = std::move(profile);
    inst.operation = op;
    inst.variant = variant;
    inst.measure = measure;
    inst.h = h;
    inst.k = k;
    return inst;
}

int ProblemInstance::max_part_size() const {
    int s = 0;
    for (const auto& p : profile.parts.parts())
        s = std::max(s, static_cast<int>(p.size()));
    return s;
}

namespace {

Operation parse_operation(const std::string& s) {
    if (s == "atomizing") return Operation::atomizing;
    if (s == "extracting") return Operation::extracting;
    if (s == "dividing") return Operation::dividing;
    throw ParseError("unknown problem '" + s + "'");
}

Variant parse_variant(const std::string& s) {
    if (s == "plain") return Variant::plain;
    if (s == "conservative") return Variant::conservative;
    if (s == "cautious") return Variant::cautious;
    throw ParseError("unknown variant '" + s + "'");
}

Measure parse_measure(const std::string& s) {
    if (s == "sum") return Measure::sum;
    if (s == "union") return Measure::union_;
    if (s == "fusion") return Measure::fusion;
    throw ParseError("unknown measure '" + s + "'");
}

int parse_int(const std::string& s, const char* what) {
    try {
        size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw ParseError("");
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("invalid ") + what + " value '" + s + "'");
    }
}

}  // namespace

ProblemInstance parse_instance(std::istream& in) {
    std::vector<std::string> articles;
    std::vector<std::pair<std::string, std::string>> arcs;
    std::vector<std::string> owned;
    std::vector<std::vector<std::string>> parts;
    std::optional<Operation> op;
    std::optional<Variant> variant;
    std::optional<Measure> measure;
    std::optional<int> h, k;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') continue;
        auto fail = [&](const std::string& msg) {
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        };
        auto next = [&]() {
            std::string tok;
            if (!(ls >> tok)) fail("missing token after '" + key + "'");
            return tok;
        };
        auto expect_end = [&]() {
            std::string extra;
            if (ls >> extra) fail("unexpected token '" + extra + "'");
        };
        try {
            if (key == "article") {
                articles.push_back(next());
                expect_end();
            } else if (key == "cite") {
                std::string src = next(), dst = next();
                arcs.emplace_back(src, dst);
                expect_end();
            } else if (key == "own") {
                owned.push_back(next());
                expect_end();
            } else if (key == "part") {
                std::vector<std::string> p;
                std::string tok;
                while (ls >> tok) p.push_back(tok);
                if (p.empty()) fail("empty part line");
                parts.push_back(std::move(p));
            } else if (key == "problem") {
                if (op) fail("duplicate problem line");
                op = parse_operation(next());
                expect_end();
            } else if (key == "variant") {
                if (variant) fail("duplicate variant line");
                variant = parse_variant(next());
                expect_end();
            } else if (key == "measure") {
                if (measure) fail("duplicate measure line");
                measure = parse_measure(next());
                expect_end();
            } else if (key == "h") {
                if (h) fail("duplicate h line");
                h = parse_int(next(), "h");
                expect_end();
            } else if (key == "k") {
                if (k) fail("duplicate k line");
                k = parse_int(next(), "k");
                expect_end();
            } else {
                fail("unknown directive '" + key + "'");
            }
        } catch (const ParseError& e) {
            std::string msg = e.what();
            if (msg.rfind("line ", 0) == 0) throw;
            throw ParseError("line " + std::to_string(lineno) + ": " + msg);
        }
    }
    if (!op) throw ParseError("missing problem line");
    if (!measure) throw ParseError("missing measure line");
    if (!h) throw ParseError("missing h line");

    CitationGraph g(std::move(articles), arcs);
    Profile profile(g, owned, parts);
    return ProblemInstance::make(std::move(g), std::move(profile), *op,
                                 variant.value_or(Variant::plain), *measure, *h, k);
}

ProblemInstance parse_instance_text(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

ProblemInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_instance(in);
}

std::string serialize_instance(const ProblemInstance& inst) {
    const CitationGraph& g = inst.graph;
    std::ostringstream out;
    for (int v = 0; v < g.article_count(); ++v)
        out << "article " << g.id(v) << "\n";
    for (int u = 0; u < g.article_count(); ++u)
        for (int v : g.cited_by(u)) out << "cite " << g.id(u) << " " << g.id(v) << "\n";
    for (int v : inst.profile.owned) out << "own " << g.id(v) << "\n";
    for (const auto& p : inst.profile.parts.parts()) {
        if (p.size() < 2) continue;
        out << "part";
        for (int v : p) out << " " << g.id(v);
        out << "\n";
    }
    out << "problem " << to_string(inst.operation) << "\n";
    out << "variant " << to_string(inst.variant) << "\n";
    out << "measure " << to_string(inst.measure) << "\n";
    out << "h " << inst.h << "\n";
    if (inst.k) out << "k " << *inst.k << "\n";
    return out.str();
}

std::string format_refinement(const CitationGraph& g, const Partition& r, int hindex) {
    std::ostringstream out;
    out << "hindex " << hindex << "\n";
    for (const auto& p : r.parts()) {
        out << "part";
        for (int v : p) out << " " << g.id(v);
        out << "\n";
    }
    return out.str();
}

}  // namespace hsplit
