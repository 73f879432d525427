#pragma once

#include <map>
#include <string>
#include <vector>

#include "otwalk/error.hpp"
#include "otwalk/geometry.hpp"

namespace otwalk {

// A straight-line placement: vertex name -> exact point. Ordered so that
// iteration (and thus every derived computation) is deterministic.
using Embedding = std::map<std::string, Point>;

inline const Point& embedding_at(const Embedding& emb, const std::string& name) {
    auto it = emb.find(name);
    if (it == emb.end()) {
        throw Failure("missing-vertex", "embedding has no point for '" + name + "'");
    }
    return it->second;
}

inline std::vector<std::string> embedding_names(const Embedding& emb) {
    std::vector<std::string> names;
    names.reserve(emb.size());
    for (const auto& [name, point] : emb) names.push_back(name);
    return names;
}

inline bool points_distinct(const Embedding& emb) {
    std::map<std::pair<Rational, Rational>, int> seen;
    for (const auto& [name, p] : emb) {
        if (++seen[{p.x, p.y}] > 1) return false;
    }
    return true;
}

// Largest numerator/denominator bit length over all coordinates; a rough
// measure of how heavy the exact arithmetic has become.
inline std::size_t coordinate_bits(const Embedding& emb) {
    std::size_t bits = 0;
    for (const auto& [name, p] : emb) {
        for (const Rational* q : {&p.x, &p.y}) {
            bits = std::max(bits, msb_bits(rational_num(*q)));
            bits = std::max(bits, msb_bits(rational_den(*q)));
        }
    }
    return bits;
}

// Apply an affine map to every point.
inline Embedding transform(const Embedding& emb, const AffineMap& map) {
    Embedding out;
    for (const auto& [name, p] : emb) out.emplace(name, map.apply(p));
    return out;
}

}  // namespace otwalk
