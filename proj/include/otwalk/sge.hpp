#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "otwalk/embedding.hpp"
#include "otwalk/error.hpp"
#include "otwalk/geometry.hpp"
#include "otwalk/walk.hpp"

namespace otwalk {

// A named simple graph over the collection's shared vertex set; vertices not
// touched by any edge are still part of the drawing as isolated points.
struct Graph {
    std::string name;
    std::set<EdgeKey> edges;
};

struct GraphCollection {
    std::vector<std::string> vertices;
    std::vector<Graph> graphs;
};

inline void validate_collection(const GraphCollection& coll) {
    std::set<std::string> known(coll.vertices.begin(), coll.vertices.end());
    if (known.size() != coll.vertices.size()) {
        throw Failure("invalid-argument", "duplicate vertex names in collection");
    }
    for (const auto& g : coll.graphs) {
        for (const auto& [a, b] : g.edges) {
            if (a == b) {
                throw Failure("invalid-argument", "self-loop in graph '" + g.name + "'");
            }
            if (!known.count(a) || !known.count(b)) {
                throw Failure("unknown-vertex",
                              "edge endpoint outside vertex set in graph '" + g.name + "'");
            }
        }
    }
}

struct GraphReport {
    std::string graph;
    std::vector<std::pair<EdgeKey, EdgeKey>> edge_crossings;        // proper or overlapping
    std::vector<std::pair<std::string, EdgeKey>> vertex_on_edge;    // vertex in edge interior
    std::vector<std::pair<std::string, std::string>> coincident;    // coincident vertex pair

    bool empty() const {
        return edge_crossings.empty() && vertex_on_edge.empty() && coincident.empty();
    }
};

struct CrossingReport {
    std::vector<GraphReport> per_graph;

    bool empty() const {
        for (const auto& r : per_graph) {
            if (!r.empty()) return false;
        }
        return true;
    }
    std::size_t total() const {
        std::size_t n = 0;
        for (const auto& r : per_graph) {
            n += r.edge_crossings.size() + r.vertex_on_edge.size() + r.coincident.size();
        }
        return n;
    }
};

// Exact crossing-freeness of one straight-line drawing: no two vertices
// coincide, no vertex sits in the relative interior of an edge, and edges
// meet at most in a single shared endpoint.
inline GraphReport verify_straightline_planar(const std::vector<std::string>& vertices,
                                              const Graph& g, const Embedding& emb) {
    GraphReport report;
    report.graph = g.name;

    std::map<std::pair<Rational, Rational>, std::string> where;
    for (const auto& v : vertices) {
        const Point& p = embedding_at(emb, v);
        auto [it, fresh] = where.emplace(std::make_pair(p.x, p.y), v);
        if (!fresh) report.coincident.emplace_back(it->second, v);
    }

    std::vector<EdgeKey> edges(g.edges.begin(), g.edges.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Point& a = embedding_at(emb, edges[i].first);
        const Point& b = embedding_at(emb, edges[i].second);
        if (a == b) continue;  // already reported as coincident vertices
        for (const auto& v : vertices) {
            if (v == edges[i].first || v == edges[i].second) continue;
            const Point& p = embedding_at(emb, v);
            if (p == a || p == b) continue;  // coincidence, reported above
            if (orient_sign(a, b, p) == 0 && detail::within_collinear(a, b, p)) {
                report.vertex_on_edge.emplace_back(v, edges[i]);
            }
        }
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const Point& c = embedding_at(emb, edges[j].first);
            const Point& d = embedding_at(emb, edges[j].second);
            if (c == d) continue;
            SegmentRelation rel = segments_cross(a, b, c, d);
            if (rel == SegmentRelation::proper_crossing ||
                rel == SegmentRelation::endpoint_in_interior ||
                rel == SegmentRelation::improper_overlap) {
                report.edge_crossings.emplace_back(edges[i], edges[j]);
            }
        }
    }
    return report;
}

// Per-graph union; crossings between edges of different graphs are fine.
inline CrossingReport verify_simultaneous(const GraphCollection& coll, const Embedding& emb) {
    CrossingReport report;
    for (const auto& g : coll.graphs) {
        report.per_graph.push_back(verify_straightline_planar(coll.vertices, g, emb));
    }
    return report;
}

struct SharingProfile {
    std::map<EdgeKey, int> public_edges;  // edge -> number of graphs containing it
    bool edge_disjoint{true};
    bool sunflower{true};
};

inline SharingProfile sharing_profile(const GraphCollection& coll) {
    std::map<EdgeKey, int> mult;
    for (const auto& g : coll.graphs) {
        for (const auto& e : g.edges) ++mult[e];
    }
    SharingProfile prof;
    for (const auto& [edge, count] : mult) {
        if (count < 2) continue;
        prof.public_edges.emplace(edge, count);
        prof.edge_disjoint = false;
        if (count != static_cast<int>(coll.graphs.size())) prof.sunflower = false;
    }
    return prof;
}

}  // namespace otwalk
