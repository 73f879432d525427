#pragma once

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "otwalk/constraints.hpp"
#include "otwalk/embedding.hpp"
#include "otwalk/error.hpp"
#include "otwalk/geometry.hpp"

namespace otwalk {

// A not-necessarily-simple vertex sequence with one prescribed turn (left or
// right) at each inner vertex.
struct DirectionalWalk {
    std::vector<std::string> sequence;
    std::vector<Orientation> turns;

    std::size_t length() const { return sequence.size(); }
};

inline void validate_walk(const DirectionalWalk& w) {
    std::size_t t = w.sequence.size();
    std::size_t expected = t >= 2 ? t - 2 : 0;
    if (w.turns.size() != expected) {
        throw Failure("length-mismatch", "walk of length " + std::to_string(t) + " needs " +
                                             std::to_string(expected) + " turns, got " +
                                             std::to_string(w.turns.size()));
    }
    for (std::size_t i = 0; i + 1 < t; ++i) {
        if (w.sequence[i] == w.sequence[i + 1]) {
            throw Failure("consecutive-duplicate",
                          "vertex '" + w.sequence[i] + "' repeats consecutively");
        }
    }
    for (Orientation d : w.turns) {
        if (d != Orientation::left && d != Orientation::right) {
            throw Failure("unknown-direction", "turns must be left or right");
        }
    }
}

inline DirectionalWalk make_walk(std::vector<std::string> sequence, const std::string& turns) {
    DirectionalWalk w;
    w.sequence = std::move(sequence);
    w.turns.reserve(turns.size());
    for (char c : turns) {
        if (c != 'l' && c != 'L' && c != 'r' && c != 'R') {
            throw Failure("unknown-direction", std::string("turn character '") + c + "'");
        }
        w.turns.push_back(orientation_from_char(c));
    }
    validate_walk(w);
    return w;
}

// Inline notation: "u v^l y^r w^l x^l y^l u^l w^r v" — every vertex except the
// first and last carries its incoming turn as a ^l / ^r suffix.
inline DirectionalWalk parse_walk_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    DirectionalWalk w;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        const std::string& tok = tokens[i];
        auto caret = tok.find('^');
        bool inner = i + 1 < tokens.size() && i > 0;
        if (!inner) {
            if (caret != std::string::npos) {
                throw Failure("length-mismatch", "first/last vertex cannot carry a turn: " + tok);
            }
            w.sequence.push_back(tok);
            continue;
        }
        if (caret == std::string::npos || caret + 2 != tok.size() || caret == 0) {
            throw Failure("length-mismatch", "inner vertex must be name^l or name^r: " + tok);
        }
        char d = tok[caret + 1];
        if (d != 'l' && d != 'L' && d != 'r' && d != 'R') {
            throw Failure("unknown-direction", std::string("turn character '") + d + "'");
        }
        w.sequence.push_back(tok.substr(0, caret));
        w.turns.push_back(orientation_from_char(d));
    }
    validate_walk(w);
    return w;
}

inline std::string format_walk_text(const DirectionalWalk& w) {
    std::string out;
    for (std::size_t i = 0; i < w.sequence.size(); ++i) {
        if (i) out += ' ';
        out += w.sequence[i];
        if (i > 0 && i + 1 < w.sequence.size()) {
            out += '^';
            out += static_cast<char>(to_char(w.turns[i - 1]) + ('l' - 'L'));
        }
    }
    return out;
}

using EdgeKey = std::pair<std::string, std::string>;  // sorted unordered pair

inline EdgeKey edge_key(const std::string& a, const std::string& b) {
    return a < b ? EdgeKey{a, b} : EdgeKey{b, a};
}

inline std::vector<std::string> walk_vertices(const DirectionalWalk& w) {
    std::set<std::string> names(w.sequence.begin(), w.sequence.end());
    return {names.begin(), names.end()};
}

inline std::map<EdgeKey, int> walk_edge_multiset(const DirectionalWalk& w) {
    std::map<EdgeKey, int> edges;
    for (std::size_t i = 0; i + 1 < w.sequence.size(); ++i) {
        ++edges[edge_key(w.sequence[i], w.sequence[i + 1])];
    }
    return edges;
}

struct WalkStats {
    std::size_t length{};
    std::size_t vertex_count{};
    std::size_t edge_count{};       // with multiplicity, = length - 1
    std::size_t repeated_edges{};   // unordered pairs traversed more than once
    int max_multiplicity{};
};

inline WalkStats walk_stats(const DirectionalWalk& w) {
    WalkStats s;
    s.length = w.sequence.size();
    s.vertex_count = walk_vertices(w).size();
    s.edge_count = s.length >= 1 ? s.length - 1 : 0;
    for (const auto& [edge, mult] : walk_edge_multiset(w)) {
        if (mult > 1) ++s.repeated_edges;
        s.max_multiplicity = std::max(s.max_multiplicity, mult);
    }
    return s;
}

// The walk's partial order type: constraint (u_i, u_{i+1}, u_{i+2}) -> d(i)
// for every inner position, canonicalized (so reversed re-traversals of an
// edge surface as an inconsistency witness).
inline CanonicalizeResult walk_constraints(const DirectionalWalk& w) {
    std::vector<Constraint> raw;
    for (std::size_t i = 0; i + 2 < w.sequence.size(); ++i) {
        if (w.sequence[i] == w.sequence[i + 2]) {
            throw Failure("degenerate-triple", "u_" + std::to_string(i + 1) + " and u_" +
                                                   std::to_string(i + 3) + " coincide");
        }
        raw.push_back({{w.sequence[i], w.sequence[i + 1], w.sequence[i + 2]}, w.turns[i]});
    }
    return canonicalize(walk_vertices(w), raw);
}

// Checks the turn prescriptions directly against the embedding, position by
// position. Unlike walk_constraints this needs no consistency precondition:
// an inconsistent walk simply reports violations under every embedding.
inline Report verify_walk_realization(const DirectionalWalk& w, const Embedding& emb) {
    Report report;
    for (std::size_t i = 0; i + 2 < w.sequence.size(); ++i) {
        Orientation actual =
            orient(embedding_at(emb, w.sequence[i]), embedding_at(emb, w.sequence[i + 1]),
                   embedding_at(emb, w.sequence[i + 2]));
        if (actual != w.turns[i]) {
            report.push_back(
                {{w.sequence[i], w.sequence[i + 1], w.sequence[i + 2]}, w.turns[i], actual});
        }
    }
    return report;
}

}  // namespace otwalk
