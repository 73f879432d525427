#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "otwalk/constraints.hpp"
#include "otwalk/embedding.hpp"
#include "otwalk/error.hpp"
#include "otwalk/geometry.hpp"

namespace otwalk {
namespace detail {

inline Point rot90(const Point& v) { return Point{-v.y, v.x}; }

inline Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }

inline Rational cross_vec(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

// Strict side requirement for a new point: orient(p, q, point) must equal
// left when side = +1, right when side = -1.
struct SideConstraint {
    Point p, q;
    int side;
};

// Intersection of two non-parallel lines through (p1,q1) and (p2,q2).
inline Point line_intersection(const Point& p1, const Point& q1, const Point& p2,
                               const Point& q2) {
    Point e1 = q1 - p1, e2 = q2 - p2;
    Rational denom = cross_vec(e1, e2);
    Rational alpha = cross_vec(p2 - p1, e2) / denom;
    return p1 + alpha * e1;
}

}  // namespace detail

// Constructive realization of a 2-degenerate partial order type with strict
// turns only: vertices are placed one at a time in a degeneracy order, each
// new point chosen in the open wedge cut out by its (at most two) active
// half-plane constraints, while keeping all pairwise x-coordinates and all
// pairwise slopes distinct. Every candidate is checked exactly before use.
inline Embedding embed_degenerate(const ConstraintSet& cs) {
    for (const auto& [triple, value] : cs.constraints) {
        if (value == Orientation::collinear) {
            throw Failure("c-constraint-unsupported",
                          "collinear prescriptions admit no open placement region");
        }
    }
    Hypergraph h = hypergraph_of(cs);
    auto cert = degeneracy_order(h, 2);
    if (!cert) {
        throw Failure("not-2-degenerate", "no peeling order with back-degree at most 2 exists");
    }

    Embedding emb;
    std::set<Rational> used_x;
    std::set<Rational> used_slopes;

    auto try_place = [&](const std::string& name, const Point& cand,
                         const std::vector<detail::SideConstraint>& active) -> bool {
        for (const auto& sc : active) {
            if (orient_sign(sc.p, sc.q, cand) != sc.side) return false;
        }
        if (used_x.count(cand.x)) return false;
        std::set<Rational> fresh;
        for (const auto& [other, pt] : emb) {
            Rational slope = (cand.y - pt.y) / (cand.x - pt.x);
            if (used_slopes.count(slope) || !fresh.insert(slope).second) return false;
        }
        for (const auto& s : fresh) used_slopes.insert(s);
        used_x.insert(cand.x);
        emb.emplace(name, cand);
        return true;
    };

    for (const auto& name : cert->ordering) {
        // Constraints whose other two vertices are already placed.
        std::vector<detail::SideConstraint> active;
        for (const auto& [triple, value] : cs.constraints) {
            if (std::find(triple.begin(), triple.end(), name) == triple.end()) continue;
            Triple rest;
            int m = 0;
            bool ready = true;
            for (const auto& member : triple) {
                if (member == name) continue;
                if (!emb.count(member)) {
                    ready = false;
                    break;
                }
                rest[m++] = member;
            }
            if (!ready) continue;
            Orientation v = value_in_order(triple, value, Triple{rest[0], rest[1], name});
            active.push_back({emb.at(rest[0]), emb.at(rest[1]),
                              v == Orientation::left ? 1 : -1});
        }
        if (active.size() > 2) {
            throw Failure("not-2-degenerate", "ordering admitted a back-degree above 2");
        }

        if (emb.empty()) {
            emb.emplace(name, Point{Rational(0), Rational(0)});
            used_x.insert(Rational(0));
            continue;
        }

        // Ray apex and the direction family d(t); every t in the schedule keeps
        // the constraints strictly satisfied, so t and the step size only have
        // to dodge the finitely many slope/x coincidences.
        Point apex{Rational(0), Rational(0)};
        Point g1{Rational(1), Rational(0)}, g2{Rational(0), Rational(1)};
        std::vector<Rational> ts;
        if (active.empty()) {
            Rational mx = emb.begin()->second.x;
            for (const auto& [other, pt] : emb) mx = std::max(mx, pt.x);
            apex = Point{mx + 1, Rational(0)};
            for (int k = 0; k < 8; ++k) {
                ts.push_back(Rational(1) / (k + 1));
                ts.push_back(Rational(k + 2));
            }
        } else if (active.size() == 1) {
            const auto& sc = active[0];
            apex = Point{(sc.p.x + sc.q.x) / 2, (sc.p.y + sc.q.y) / 2};
            Point e = sc.q - sc.p;
            g1 = Rational(sc.side) * detail::rot90(e);
            g2 = e;
            for (int k = 0; k < 8; ++k) {
                ts.push_back(Rational(1) / (k + 1));
                ts.push_back(Rational(-(k + 1)));
            }
        } else {
            const auto& c1 = active[0];
            const auto& c2 = active[1];
            apex = detail::line_intersection(c1.p, c1.q, c2.p, c2.q);
            Point e1 = c1.q - c1.p, e2 = c2.q - c2.p;
            g1 = Rational(c1.side) * detail::rot90(e1);
            g2 = Rational(c2.side) * detail::rot90(e2);
            Rational gg = Rational(c1.side * c2.side) * detail::dot(e1, e2);
            if (sign_of(gg) >= 0) {
                for (int k = 0; k < 8; ++k) {
                    ts.push_back(Rational(1) / (k + 1));
                    ts.push_back(Rational(k + 2));
                }
            } else {
                // Cauchy-Schwarz: the valid t interval is nonempty because the
                // two boundary lines are non-parallel.
                Rational lo = -gg / detail::dot(e2, e2);
                Rational hi = detail::dot(e1, e1) / -gg;
                Rational span = hi - lo;
                ts.push_back(lo + span / 2);
                for (int k = 2; k < 9; ++k) {
                    ts.push_back(lo + span / (1 << k));
                    ts.push_back(hi - span / (1 << k));
                }
            }
        }

        bool placed = false;
        for (const auto& t : ts) {
            Point d = g1 + t * g2;
            Rational delta(1);
            for (int k = 0; k <= 48 && !placed; ++k) {
                placed = try_place(name, apex + delta * d, active);
                delta /= 2;
            }
            if (placed) break;
        }
        if (!placed) {
            throw Failure("placement-failure",
                          "no wedge point with fresh x and slopes for '" + name + "'");
        }
    }
    return emb;
}

}  // namespace otwalk
