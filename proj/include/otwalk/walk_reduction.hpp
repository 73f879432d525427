#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "otwalk/embedding.hpp"
#include "otwalk/error.hpp"
#include "otwalk/geometry.hpp"
#include "otwalk/perturb.hpp"
#include "otwalk/walk.hpp"

namespace otwalk {

struct GadgetNames {
    std::size_t index{};  // 1-based gadget position
    std::string beta, delta, xi, phi, psi;
};

struct ReductionRecord {
    DirectionalWalk input;
    DirectionalWalk output;
    std::vector<GadgetNames> gadgets;
    std::vector<std::size_t> seam_positions;  // 1-based positions in output.sequence
};

namespace detail {

// Skeleton of the 15-position fragment: indices into (u_i, beta, u_{i+1},
// delta, xi, phi, u_{i+2}, psi).
inline constexpr int kGadgetSkeleton[15] = {0, 1, 2, 3, 0, 4, 2, 5, 1, 3, 6, 4, 1, 7, 2};

// Turn at each inner fragment position when d = l; negated wholesale for d = r.
inline constexpr char kGadgetTurns[14] = "rllrrllrlrllr";

}  // namespace detail

// The 15-position walk fragment that traverses the hook-and-triangle pattern
// for one inner position of the input walk.
inline DirectionalWalk triangle_gadget(const GadgetNames& g, const std::string& u0,
                                       const std::string& u1, const std::string& u2,
                                       Orientation d) {
    if (d != Orientation::left && d != Orientation::right) {
        throw Failure("unknown-direction", "gadget direction must be left or right");
    }
    const std::array<std::string, 8> roles{u0, g.beta, u1, g.delta, g.xi, g.phi, u2, g.psi};
    std::set<std::string> uniq(roles.begin(), roles.end());
    if (uniq.size() != roles.size()) {
        throw Failure("name-collision", "gadget names must be distinct from each other and "
                                        "from the three walk vertices");
    }
    DirectionalWalk frag;
    for (int r : detail::kGadgetSkeleton) frag.sequence.push_back(roles[r]);
    for (int i = 0; i < 13; ++i) {
        Orientation base = orientation_from_char(detail::kGadgetTurns[i]);
        frag.turns.push_back(d == Orientation::left ? base : negate(base));
    }
    validate_walk(frag);
    return frag;
}

// Concatenates one gadget per inner position, identifying each fragment's
// first vertex with the previous fragment's last; the seam occurrence of u_i
// receives the negated input turn. The output never repeats an edge: every
// fragment edge has a private dummy endpoint.
inline ReductionRecord reduce_walk(const DirectionalWalk& w) {
    validate_walk(w);
    std::size_t t = w.sequence.size();
    if (t < 3) {
        throw Failure("invalid-argument", "reduction needs a walk of length at least 3");
    }
    for (std::size_t i = 0; i + 2 < t; ++i) {
        if (w.sequence[i] == w.sequence[i + 2]) {
            throw Failure("degenerate-triple", "u_" + std::to_string(i + 1) + " and u_" +
                                                   std::to_string(i + 3) + " coincide");
        }
    }

    std::set<std::string> taken(w.sequence.begin(), w.sequence.end());
    std::string prefix;
    auto collides = [&](const std::string& p) {
        static const char* stems[] = {"beta.", "delta.", "xi.", "phi.", "psi."};
        for (std::size_t i = 1; i + 1 < t; ++i) {
            for (const char* stem : stems) {
                if (taken.count(p + stem + std::to_string(i))) return true;
            }
        }
        return false;
    };
    while (collides(prefix)) prefix += '_';

    ReductionRecord rec;
    rec.input = w;
    for (std::size_t i = 1; i + 1 < t; ++i) {
        GadgetNames g;
        g.index = i;
        g.beta = prefix + "beta." + std::to_string(i);
        g.delta = prefix + "delta." + std::to_string(i);
        g.xi = prefix + "xi." + std::to_string(i);
        g.phi = prefix + "phi." + std::to_string(i);
        g.psi = prefix + "psi." + std::to_string(i);
        DirectionalWalk frag = triangle_gadget(g, w.sequence[i - 1], w.sequence[i],
                                               w.sequence[i + 1], w.turns[i - 1]);
        if (i == 1) {
            rec.output = frag;
        } else {
            rec.seam_positions.push_back(rec.output.sequence.size());
            rec.output.turns.push_back(negate(w.turns[i - 1]));  // seam turn at u_i
            rec.output.sequence.insert(rec.output.sequence.end(), frag.sequence.begin() + 1,
                                       frag.sequence.end());
            rec.output.turns.insert(rec.output.turns.end(), frag.turns.begin(),
                                    frag.turns.end());
        }
        rec.gadgets.push_back(g);
    }
    validate_walk(rec.output);
    return rec;
}

namespace detail {

// Open interval of y-values where the vertical line x = c meets the interior
// of the triangle (a, b, w); empty optional if it misses or only grazes.
inline std::optional<std::pair<Rational, Rational>> vertical_interior_interval(
    const Rational& c, const Point& a, const Point& b, const Point& w) {
    std::vector<Rational> ys;
    const Point* tri[3] = {&a, &b, &w};
    for (int i = 0; i < 3; ++i) {
        const Point& p = *tri[i];
        const Point& q = *tri[(i + 1) % 3];
        Rational sp = p.x - c, sq = q.x - c;
        int ssp = sign_of(sp), ssq = sign_of(sq);
        if (ssp == 0) ys.push_back(p.y);
        if (ssp * ssq < 0) {
            Rational lambda = sp / (sp - sq);
            ys.push_back(p.y + lambda * (q.y - p.y));
        }
    }
    if (ys.empty()) return std::nullopt;
    auto [lo, hi] = std::minmax_element(ys.begin(), ys.end());
    if (*lo == *hi) return std::nullopt;
    return std::make_pair(*lo, *hi);
}

// The output-walk prefix covered by the first `gadgets` fragments.
inline DirectionalWalk output_prefix(const ReductionRecord& rec, std::size_t gadgets) {
    DirectionalWalk prefix;
    std::size_t len = 14 * gadgets + 1;
    prefix.sequence.assign(rec.output.sequence.begin(), rec.output.sequence.begin() + len);
    prefix.turns.assign(rec.output.turns.begin(), rec.output.turns.begin() + (len - 2));
    return prefix;
}

}  // namespace detail

// Forward direction: realize the reduced walk from a realization of the
// input. Gadgets are processed in order; each one re-normalizes the whole
// picture so its three walk vertices sit on the fixed frame, then drops its
// dummies at the fixed coordinates. Coordinates are re-rounded onto a dyadic
// grid between gadgets (kept only if everything re-verifies exactly) so the
// exact arithmetic does not blow up across gadgets.
inline Embedding lift_realization(const ReductionRecord& rec, const Embedding& R) {
    const DirectionalWalk& w = rec.input;
    if (!verify_walk_realization(w, R).empty()) {
        throw Failure("realization-invalid", "input embedding does not realize the walk");
    }
    Embedding emb;
    for (const auto& name : walk_vertices(w)) emb.emplace(name, embedding_at(R, name));

    std::size_t t = w.sequence.size();
    for (std::size_t i = 1; i + 1 < t; ++i) {
        const GadgetNames& g = rec.gadgets[i - 1];
        Orientation d = w.turns[i - 1];
        Rational mir = d == Orientation::left ? 1 : -1;
        Point f0{mir * 4, Rational(-2)}, f1{mir * 4, Rational(2)}, f2{Rational(0), Rational(0)};
        AffineMap m = affine_map_three(embedding_at(emb, w.sequence[i - 1]),
                                       embedding_at(emb, w.sequence[i]),
                                       embedding_at(emb, w.sequence[i + 1]), f0, f1, f2);
        emb = transform(emb, m);
        emb[g.beta] = Point{mir * 1, Rational(-3)};
        emb[g.delta] = Point{mir * 1, Rational(3)};
        emb[g.xi] = Point{mir * -1, Rational(0)};
        emb[g.phi] = Point{mir * 2, Rational(3)};

        Rational line_x = mir * 2;
        bool last = (i + 2 == t);
        if (last) {
            emb[g.psi] = Point{line_x, Rational(1)};
        } else {
            auto iv = detail::vertical_interior_interval(line_x, f1, f2,
                                                         embedding_at(emb, w.sequence[i + 2]));
            if (!iv) {
                throw Failure("placement-failure", "no room on the gadget line for psi");
            }
            Rational lo = std::max(iv->first, Rational(0));
            Rational hi = iv->second;
            if (lo >= hi) {
                throw Failure("placement-failure", "psi interval empty above y = 0");
            }
            emb[g.psi] = Point{line_x, (lo + hi) / 2};
        }

        if (!last && coordinate_bits(emb) > 256) {
            DirectionalWalk prefix = detail::output_prefix(rec, i);
            for (unsigned bits : {64u, 96u, 128u, 192u}) {
                Embedding rounded = snap_dyadic(emb, bits);
                if (!points_distinct(rounded)) continue;
                if (!verify_walk_realization(prefix, rounded).empty()) continue;
                auto iv = detail::vertical_interior_interval(
                    line_x, embedding_at(rounded, w.sequence[i]),
                    embedding_at(rounded, w.sequence[i + 1]),
                    embedding_at(rounded, w.sequence[i + 2]));
                const Point& psi = embedding_at(rounded, g.psi);
                if (!iv || psi.x != line_x || sign_of(psi.y) < 0 || psi.y <= iv->first ||
                    psi.y >= iv->second) {
                    continue;
                }
                emb = std::move(rounded);
                break;
            }
        }
    }

    const DirectionalWalk& out = rec.output;
    auto holds = [&out](const Embedding& cand) {
        return verify_walk_realization(out, cand).empty();
    };
    return perturb_generic(emb, holds, Rational(BigInt(1), BigInt(1) << 10));
}

// Backward direction: a realization of the reduced walk restricts to one of
// the input walk.
inline Embedding restrict_realization(const ReductionRecord& rec, const Embedding& Rp) {
    if (!verify_walk_realization(rec.output, Rp).empty()) {
        throw Failure("realization-invalid", "embedding does not realize the reduced walk");
    }
    Embedding out;
    for (const auto& name : walk_vertices(rec.input)) out.emplace(name, embedding_at(Rp, name));
    if (!verify_walk_realization(rec.input, out).empty()) {
        throw Failure("soundness-violation",
                      "restriction fails the input walk; this indicates a bug");
    }
    return out;
}

}  // namespace otwalk
