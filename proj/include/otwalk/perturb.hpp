#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "otwalk/embedding.hpp"
#include "otwalk/error.hpp"
#include "otwalk/geometry.hpp"

namespace otwalk {

using EmbeddingPredicate = std::function<bool(const Embedding&)>;

namespace detail {

// Unit-ish displacement direction for the j-th point (sorted-name order):
// (1, j+1) divided by a dyadic floor approximation of its Euclidean length.
// Slopes are pairwise distinct, so no two points share a direction, and the
// floor normalization keeps the l-infinity norm at most 1.
inline Point perturb_direction(std::size_t j) {
    BigInt a = BigInt(j) + 1;
    Rational len = dyadic_sqrt(1 + a * a, 16);
    return Point{Rational(1) / len, Rational(a) / len};
}

inline bool all_points_distinct(const std::vector<Point>& pts) {
    std::set<std::pair<Rational, Rational>> seen;
    for (const auto& p : pts) {
        if (!seen.insert({p.x, p.y}).second) return false;
    }
    return true;
}

// Orientation of every triple i<j<k, flattened in lexicographic order.
inline std::vector<std::int8_t> triple_signs(const std::vector<Point>& pts) {
    std::size_t n = pts.size();
    std::vector<std::int8_t> signs;
    signs.reserve(n < 3 ? 0 : n * (n - 1) * (n - 2) / 6);
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                signs.push_back(static_cast<std::int8_t>(orient_sign(pts[i], pts[j], pts[k])));
    return signs;
}

// Every input-non-collinear triple must keep its orientation; input-collinear
// triples must separate unless the caller tolerates them.
inline bool triples_acceptable(const std::vector<Point>& pts,
                               const std::vector<std::int8_t>& base, bool allow_collinear) {
    std::size_t n = pts.size();
    std::size_t idx = 0;
    for (std::size_t i = 0; i + 2 < n; ++i)
        for (std::size_t j = i + 1; j + 1 < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                int now = orient_sign(pts[i], pts[j], pts[k]);
                std::int8_t was = base[idx++];
                if (was != 0) {
                    if (now != was) return false;
                } else if (now == 0 && !allow_collinear) {
                    return false;
                }
            }
    return true;
}

}  // namespace detail

// Deterministic symbolic-free perturbation: tries the input unchanged, then
// displaces point j along perturb_direction(j) by eps0 * 2^-k for k = 0..64,
// accepting the first candidate that (a) satisfies must_hold, (b) has pairwise
// distinct points, and (c) keeps every previously strict orientation while
// breaking previously collinear triples (unless allow_collinear).
inline Embedding perturb_generic(const Embedding& emb, const EmbeddingPredicate& must_hold,
                                 const Rational& eps0, bool allow_collinear = false) {
    if (sign_of(eps0) <= 0) {
        throw Failure("invalid-argument", "perturbation step must be positive");
    }
    std::vector<std::string> names = embedding_names(emb);
    std::vector<Point> base_pts;
    base_pts.reserve(names.size());
    for (const auto& name : names) base_pts.push_back(emb.at(name));
    std::vector<std::int8_t> base_signs = detail::triple_signs(base_pts);

    std::vector<Point> dirs;
    dirs.reserve(names.size());
    for (std::size_t j = 0; j < names.size(); ++j) dirs.push_back(detail::perturb_direction(j));

    auto acceptable = [&](const std::vector<Point>& pts) {
        if (!detail::all_points_distinct(pts)) return false;
        Embedding candidate;
        for (std::size_t j = 0; j < names.size(); ++j) candidate.emplace(names[j], pts[j]);
        if (must_hold && !must_hold(candidate)) return false;
        return detail::triples_acceptable(pts, base_signs, allow_collinear);
    };

    if (acceptable(base_pts)) return emb;

    Rational eps = eps0;
    for (int k = 0; k <= 64; ++k) {
        std::vector<Point> pts = base_pts;
        for (std::size_t j = 0; j < pts.size(); ++j) pts[j] = pts[j] + eps * dirs[j];
        if (acceptable(pts)) {
            Embedding out;
            for (std::size_t j = 0; j < names.size(); ++j) out.emplace(names[j], pts[j]);
            return out;
        }
        eps /= 2;
    }
    throw Failure("perturbation-failure", "no displacement within the halving schedule works");
}

// Round every coordinate to the nearest multiple of 2^-bits. Used to keep
// coordinate bit lengths bounded between exact construction stages; callers
// must re-verify whatever invariants they need afterwards.
inline Embedding snap_dyadic(const Embedding& emb, unsigned bits) {
    Embedding out;
    for (const auto& [name, p] : emb) {
        out.emplace(name, Point{round_dyadic(p.x, bits), round_dyadic(p.y, bits)});
    }
    return out;
}

}  // namespace otwalk
