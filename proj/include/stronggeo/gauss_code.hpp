#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "stronggeo/errors.hpp"
#include "stronggeo/rational.hpp"

namespace stronggeo {

enum class Strand : char { over = 'O', under = 'U' };

struct GaussEntry {
    int id = 0;
    Strand strand = Strand::over;
    Sign sign = Sign::positive;

    bool operator==(const GaussEntry&) const = default;
};

enum class DiagramKind { knot, knotoid, graphoid };

struct GraphoidVertex {
    std::string name;
    std::vector<std::string> rotation;  // incident edge names, counterclockwise

    bool operator==(const GraphoidVertex&) const = default;
};

struct GraphoidEdge {
    std::string name;
    std::string from;
    std::string to;
    std::vector<GaussEntry> entries;  // crossings in order from tail to head

    bool operator==(const GraphoidEdge&) const = default;
};

// Gauss diagram of a knot (cyclic entry sequence), knotoid (linear sequence
// between two legs) or graphoid (per-edge sequences plus vertex rotations).
// Chords are implicitly oriented from the O occurrence to the U occurrence.
// Degree-one vertices of a graphoid are its distinguished endpoints.
struct GaussDiagram {
    DiagramKind kind = DiagramKind::knot;
    std::vector<GaussEntry> entries;        // knot / knotoid
    std::vector<GraphoidVertex> vertices;   // graphoid
    std::vector<GraphoidEdge> edges;        // graphoid

    bool operator==(const GaussDiagram&) const = default;
};

namespace detail {

inline bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
    return true;
}

inline GaussEntry parse_entry(const std::string& tok, int line, int col) {
    if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U') || (tok[1] != '+' && tok[1] != '-'))
        throw SyntaxError(line, col, "entry like O+3 or U-1, got '" + tok + "'");
    for (std::size_t i = 2; i < tok.size(); ++i)
        if (tok[i] < '0' || tok[i] > '9')
            throw SyntaxError(line, col, "crossing id digits, got '" + tok + "'");
    GaussEntry e;
    e.strand = tok[0] == 'O' ? Strand::over : Strand::under;
    e.sign = tok[1] == '+' ? Sign::positive : Sign::negative;
    e.id = std::stoi(tok.substr(2));
    if (e.id <= 0) throw SyntaxError(line, col, "positive crossing id");
    return e;
}

struct Token {
    std::string text;
    int column;
};

inline std::vector<Token> tokenize(const std::string& s, int first_col = 1) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        if (i >= s.size()) break;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
        out.push_back(Token{s.substr(i, j - i), first_col + static_cast<int>(i)});
        i = j;
    }
    return out;
}

inline void check_occurrences(const std::vector<GaussEntry>& all) {
    std::map<int, std::vector<GaussEntry>> by_id;
    for (const GaussEntry& e : all) by_id[e.id].push_back(e);
    for (const auto& [id, occ] : by_id) {
        if (occ.size() != 2)
            throw ValidationError(id, "appears " + std::to_string(occ.size()) + " times, need exactly 2");
        if (occ[0].strand == occ[1].strand)
            throw ValidationError(id, std::string("needs one O and one U occurrence, got two ") +
                                          (occ[0].strand == Strand::over ? "O" : "U"));
        if (occ[0].sign != occ[1].sign) throw ValidationError(id, "signs of the two occurrences differ");
    }
}

}  // namespace detail

inline void validate(const GaussDiagram& g) {
    if (g.kind != DiagramKind::graphoid) {
        detail::check_occurrences(g.entries);
        return;
    }
    std::set<std::string> vnames;
    for (const auto& v : g.vertices) {
        if (!detail::valid_name(v.name)) throw ValidationError("bad vertex name '" + v.name + "'");
        if (!vnames.insert(v.name).second) throw ValidationError("duplicate vertex '" + v.name + "'");
    }
    std::set<std::string> enames;
    std::vector<GaussEntry> all;
    for (const auto& e : g.edges) {
        if (!detail::valid_name(e.name)) throw ValidationError("bad edge name '" + e.name + "'");
        if (!enames.insert(e.name).second) throw ValidationError("duplicate edge '" + e.name + "'");
        if (!vnames.count(e.from) || !vnames.count(e.to))
            throw ValidationError("edge '" + e.name + "' references a missing vertex");
        if (e.from == e.to) throw ValidationError("edge '" + e.name + "' is a loop");
        for (const GaussEntry& en : e.entries) all.push_back(en);
    }
    detail::check_occurrences(all);
    // every rotation lists exactly the incident edges, each once
    std::map<std::string, std::multiset<std::string>> incident;
    for (const auto& e : g.edges) {
        incident[e.from].insert(e.name);
        incident[e.to].insert(e.name);
    }
    for (const auto& v : g.vertices) {
        std::multiset<std::string> rot(v.rotation.begin(), v.rotation.end());
        if (rot != incident[v.name])
            throw ValidationError("rotation at '" + v.name + "' does not list the incident edges");
        if (rot.empty()) throw ValidationError("vertex '" + v.name + "' is isolated");
    }
}

inline GaussDiagram parse_gauss(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    GaussDiagram g;
    bool started = false;
    bool seen_edge = false;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<detail::Token> toks = detail::tokenize(line);
        if (toks.empty()) continue;
        if (!started) {
            const std::string& head = toks[0].text;
            if (head == "knot:" || head == "knotoid:") {
                g.kind = head == "knot:" ? DiagramKind::knot : DiagramKind::knotoid;
                for (std::size_t i = 1; i < toks.size(); ++i)
                    g.entries.push_back(detail::parse_entry(toks[i].text, lineno, toks[i].column));
                started = true;
                continue;
            }
            if (head == "graphoid") {
                if (toks.size() != 1) throw SyntaxError(lineno, toks[1].column, "end of line after 'graphoid'");
                g.kind = DiagramKind::graphoid;
                started = true;
                continue;
            }
            throw SyntaxError(lineno, toks[0].column, "'knot:', 'knotoid:' or 'graphoid'");
        }
        if (g.kind != DiagramKind::graphoid)
            throw SyntaxError(lineno, toks[0].column, "single-line knot/knotoid code");
        const std::string& head = toks[0].text;
        if (head == "vertex") {
            if (seen_edge) throw SyntaxError(lineno, toks[0].column, "vertex lines before edge lines");
            if (toks.size() < 2 || toks[1].text.empty() || toks[1].text.back() != ':')
                throw SyntaxError(lineno, toks.size() < 2 ? 1 : toks[1].column, "'vertex NAME:'");
            GraphoidVertex v;
            v.name = toks[1].text.substr(0, toks[1].text.size() - 1);
            if (!detail::valid_name(v.name))
                throw SyntaxError(lineno, toks[1].column, "vertex name [a-z0-9_]+");
            for (std::size_t i = 2; i < toks.size(); ++i) {
                if (!detail::valid_name(toks[i].text))
                    throw SyntaxError(lineno, toks[i].column, "edge name [a-z0-9_]+");
                v.rotation.push_back(toks[i].text);
            }
            g.vertices.push_back(std::move(v));
            continue;
        }
        if (head == "edge") {
            seen_edge = true;
            // edge NAME = FROM->TO: ENTRY...
            if (toks.size() < 4 || toks[2].text != "=")
                throw SyntaxError(lineno, toks[0].column, "'edge NAME = FROM->TO: ...'");
            GraphoidEdge e;
            e.name = toks[1].text;
            if (!detail::valid_name(e.name))
                throw SyntaxError(lineno, toks[1].column, "edge name [a-z0-9_]+");
            const std::string& arrow = toks[3].text;
            std::size_t pos = arrow.find("->");
            if (pos == std::string::npos || arrow.back() != ':')
                throw SyntaxError(lineno, toks[3].column, "'FROM->TO:'");
            e.from = arrow.substr(0, pos);
            e.to = arrow.substr(pos + 2, arrow.size() - pos - 3);
            if (!detail::valid_name(e.from) || !detail::valid_name(e.to))
                throw SyntaxError(lineno, toks[3].column, "vertex names [a-z0-9_]+");
            for (std::size_t i = 4; i < toks.size(); ++i)
                e.entries.push_back(detail::parse_entry(toks[i].text, lineno, toks[i].column));
            g.edges.push_back(std::move(e));
            continue;
        }
        throw SyntaxError(lineno, toks[0].column, "'vertex' or 'edge' line");
    }
    if (!started) throw SyntaxError(lineno + 1, 1, "a diagram header line");
    validate(g);
    return g;
}

inline std::string serialize_entry(const GaussEntry& e) {
    std::string s;
    s += e.strand == Strand::over ? 'O' : 'U';
    s += e.sign == Sign::positive ? '+' : '-';
    s += std::to_string(e.id);
    return s;
}

inline std::string serialize_gauss(const GaussDiagram& g) {
    std::string out;
    if (g.kind != DiagramKind::graphoid) {
        out = g.kind == DiagramKind::knot ? "knot:" : "knotoid:";
        for (const GaussEntry& e : g.entries) out += " " + serialize_entry(e);
        out += "\n";
        return out;
    }
    out = "graphoid\n";
    for (const auto& v : g.vertices) {
        out += "vertex " + v.name + ":";
        for (const std::string& e : v.rotation) out += " " + e;
        out += "\n";
    }
    for (const auto& e : g.edges) {
        out += "edge " + e.name + " = " + e.from + "->" + e.to + ":";
        for (const GaussEntry& en : e.entries) out += " " + serialize_entry(en);
        out += "\n";
    }
    return out;
}

namespace detail {

inline std::vector<GaussEntry> relabel_first_appearance(const std::vector<GaussEntry>& seq) {
    std::map<int, int> fresh;
    std::vector<GaussEntry> out;
    out.reserve(seq.size());
    for (const GaussEntry& e : seq) {
        auto [it, inserted] = fresh.emplace(e.id, static_cast<int>(fresh.size()) + 1);
        GaussEntry n = e;
        n.id = it->second;
        out.push_back(n);
    }
    return out;
}

}  // namespace detail

// Knotoids are already canonical (the legs are distinguished). Knots take
// the lexicographically least serialization over basepoint rotations with
// ids renamed by first appearance. Graphoids rename ids by a walk over
// edges in name order and rotate each vertex rotation to start at its least
// incident edge name; vertices and edges are emitted in name order.
inline GaussDiagram canonical_form(const GaussDiagram& g) {
    validate(g);
    if (g.kind == DiagramKind::knotoid) return g;
    if (g.kind == DiagramKind::knot) {
        const std::size_t m = g.entries.size();
        if (m == 0) return g;
        GaussDiagram best;
        std::string best_text;
        for (std::size_t r = 0; r < m; ++r) {
            std::vector<GaussEntry> rot;
            rot.reserve(m);
            for (std::size_t i = 0; i < m; ++i) rot.push_back(g.entries[(r + i) % m]);
            GaussDiagram cand{DiagramKind::knot, detail::relabel_first_appearance(rot), {}, {}};
            std::string text = serialize_gauss(cand);
            if (best_text.empty() || text < best_text) {
                best_text = std::move(text);
                best = std::move(cand);
            }
        }
        return best;
    }
    GaussDiagram out;
    out.kind = DiagramKind::graphoid;
    std::vector<GraphoidEdge> edges = g.edges;
    std::sort(edges.begin(), edges.end(),
              [](const GraphoidEdge& a, const GraphoidEdge& b) { return a.name < b.name; });
    std::map<int, int> fresh;
    for (auto& e : edges)
        for (auto& en : e.entries) {
            auto [it, inserted] = fresh.emplace(en.id, static_cast<int>(fresh.size()) + 1);
            en.id = it->second;
        }
    std::vector<GraphoidVertex> vertices = g.vertices;
    std::sort(vertices.begin(), vertices.end(),
              [](const GraphoidVertex& a, const GraphoidVertex& b) { return a.name < b.name; });
    for (auto& v : vertices) {
        if (v.rotation.empty()) continue;
        std::size_t least = 0;
        for (std::size_t i = 1; i < v.rotation.size(); ++i)
            if (v.rotation[i] < v.rotation[least]) least = i;
        std::rotate(v.rotation.begin(), v.rotation.begin() + static_cast<std::ptrdiff_t>(least),
                    v.rotation.end());
    }
    out.vertices = std::move(vertices);
    out.edges = std::move(edges);
    return out;
}

inline bool diagrams_equal(const GaussDiagram& a, const GaussDiagram& b) {
    if (a.kind != b.kind) throw KindMismatch("cannot compare diagrams of different kinds");
    return serialize_gauss(canonical_form(a)) == serialize_gauss(canonical_form(b));
}

}  // namespace stronggeo
