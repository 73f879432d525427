#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "otwalk/embedding.hpp"
#include "otwalk/error.hpp"
#include "otwalk/geometry.hpp"

namespace otwalk {

using Triple = std::array<std::string, 3>;

struct Constraint {
    Triple triple;
    Orientation value{Orientation::collinear};
};

struct Violation {
    Triple triple;
    Orientation prescribed{Orientation::collinear};
    Orientation actual{Orientation::collinear};
};

using Report = std::vector<Violation>;

// Parity of the permutation taking `from` to `to` (same three distinct names):
// 0 if even, 1 if odd.
inline int permutation_parity(const Triple& from, const Triple& to) {
    std::array<int, 3> perm{};
    for (int i = 0; i < 3; ++i) {
        auto it = std::find(from.begin(), from.end(), to[i]);
        if (it == from.end()) {
            throw Failure("invalid-argument", "triples are not permutations of each other");
        }
        perm[i] = static_cast<int>(it - from.begin());
    }
    int inversions = (perm[0] > perm[1]) + (perm[0] > perm[2]) + (perm[1] > perm[2]);
    return inversions & 1;
}

// The prescribed value re-expressed when the same triple is listed in `to`
// order: even permutations preserve the value, odd ones negate it.
inline Orientation value_in_order(const Triple& from, Orientation value, const Triple& to) {
    return permutation_parity(from, to) ? negate(value) : value;
}

// Partial order type: one canonical entry per unordered triple, keyed by the
// sorted name order with the value adjusted by the alternating algebra.
struct ConstraintSet {
    std::vector<std::string> universe;
    std::map<Triple, Orientation> constraints;

    std::optional<Orientation> lookup(const Triple& query) const {
        Triple key = query;
        std::sort(key.begin(), key.end());
        auto it = constraints.find(key);
        if (it == constraints.end()) return std::nullopt;
        return value_in_order(key, it->second, query);
    }
};

struct InconsistencyWitness {
    Constraint first;
    Constraint second;
};

using CanonicalizeResult = std::variant<ConstraintSet, InconsistencyWitness>;

inline CanonicalizeResult canonicalize(const std::vector<std::string>& universe,
                                       const std::vector<Constraint>& raw) {
    std::set<std::string> known(universe.begin(), universe.end());
    ConstraintSet cs;
    cs.universe = universe;
    // Remember the first raw prescription per unordered triple for witnesses.
    std::map<Triple, Constraint> origin;
    for (const auto& c : raw) {
        if (c.triple[0] == c.triple[1] || c.triple[0] == c.triple[2] ||
            c.triple[1] == c.triple[2]) {
            throw Failure("repeated-vertex-in-triple", "constraint triple members must be distinct");
        }
        for (const auto& name : c.triple) {
            if (!known.count(name)) {
                throw Failure("unknown-vertex", "constraint names '" + name + "' outside universe");
            }
        }
        Triple key = c.triple;
        std::sort(key.begin(), key.end());
        Orientation canonical = value_in_order(c.triple, c.value, key);
        auto [it, inserted] = cs.constraints.emplace(key, canonical);
        if (inserted) {
            origin.emplace(key, c);
        } else if (it->second != canonical) {
            return InconsistencyWitness{origin.at(key), c};
        }
    }
    return cs;
}

// Universe inferred from the mentioned names, sorted.
inline CanonicalizeResult canonicalize(const std::vector<Constraint>& raw) {
    std::set<std::string> names;
    for (const auto& c : raw) names.insert(c.triple.begin(), c.triple.end());
    return canonicalize(std::vector<std::string>(names.begin(), names.end()), raw);
}

inline Report verify(const ConstraintSet& cs, const Embedding& emb) {
    Report report;
    for (const auto& [triple, value] : cs.constraints) {
        Orientation actual = orient(embedding_at(emb, triple[0]), embedding_at(emb, triple[1]),
                                    embedding_at(emb, triple[2]));
        if (actual != value) report.push_back({triple, value, actual});
    }
    return report;
}

struct Hypergraph {
    std::vector<std::string> vertices;
    std::set<Triple> edges;  // each triple sorted
};

inline Hypergraph hypergraph_of(const ConstraintSet& cs) {
    Hypergraph h;
    h.vertices = cs.universe;
    for (const auto& [triple, value] : cs.constraints) h.edges.insert(triple);
    return h;
}

struct DegeneracyCertificate {
    std::vector<std::string> ordering;          // placement order; peeled vertices go last
    std::map<std::string, int> back_degree;     // edges in which the vertex is last
};

// Greedy peeling: repeatedly remove the lowest-named vertex lying in at most k
// remaining edges. Succeeds exactly on k-degenerate hypergraphs; the returned
// ordering is the reverse removal order.
inline std::optional<DegeneracyCertificate> degeneracy_order(const Hypergraph& h, int k) {
    std::map<std::string, std::set<Triple>> incident;
    for (const auto& v : h.vertices) incident[v];
    for (const auto& e : h.edges) {
        for (const auto& v : e) {
            if (!incident.count(v)) return std::nullopt;  // edge outside vertex set
            incident[v].insert(e);
        }
    }
    DegeneracyCertificate cert;
    std::vector<std::string> removal;
    while (!incident.empty()) {
        auto pick = incident.end();
        for (auto it = incident.begin(); it != incident.end(); ++it) {
            if (static_cast<int>(it->second.size()) <= k) {
                pick = it;
                break;  // map order = lowest name first
            }
        }
        if (pick == incident.end()) return std::nullopt;
        cert.back_degree[pick->first] = static_cast<int>(pick->second.size());
        removal.push_back(pick->first);
        std::set<Triple> gone = pick->second;
        incident.erase(pick);
        for (const auto& e : gone) {
            for (const auto& v : e) {
                auto it = incident.find(v);
                if (it != incident.end()) it->second.erase(e);
            }
        }
    }
    cert.ordering.assign(removal.rbegin(), removal.rend());
    return cert;
}

}  // namespace otwalk
