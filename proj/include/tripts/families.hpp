#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tripts/generate.hpp"
#include "tripts/graphs.hpp"
#include "tripts/matching.hpp"
#include "tripts/structure.hpp"

namespace tripts {

namespace detail {

/// One chain station: a hub on a steep ray (slope 4/7, safely inside the
/// first sextant) flanked by two "ear" points hugging it, one just below and
/// one just west-above. In the down graph the hubs form a path, every ear
/// attaches to hubs only, and the ears stay pairwise non-adjacent: any
/// down-triangle over two ears contains a hub. Removing the m hubs therefore
/// leaves 2m isolated ears, pinning the maximum matching at m (n/3) by the
/// deficiency formula. The small per-index jitter keeps all y-coordinates
/// distinct, which for rational points is exactly general position.
inline void emit_station(std::vector<std::pair<Rational, Rational>>& out, int chain_pos,
                         bool with_hub, bool with_west) {
    long i = chain_pos;
    long hx = 70000L * i + 13 * (i % 5);
    long hy = 40000L * i + 17 * (i % 7);
    if (with_hub) out.emplace_back(make_rational(hx), make_rational(hy));
    if (with_west) out.emplace_back(make_rational(hx - 60), make_rational(hy + 10));
    out.emplace_back(make_rational(hx), make_rational(hy - 10));
}

inline void require_family_args(int m, int drop, int max_drop, const char* name) {
    if (m < 5) throw std::invalid_argument(std::string(name) + ": m must be >= 5");
    if (drop < 0 || drop > max_drop) {
        throw std::invalid_argument(std::string(name) + ": unsupported drop count");
    }
}

} // namespace detail

/// Point set of n = 3m points whose down graph has maximum matching exactly
/// ceil((n-2)/3) = m. With drop = 2 the first two points (hub and west ear of
/// the topmost station) are omitted, giving n = 3m - 2 with matching exactly
/// ceil((n-2)/3) = m - 1. The advertised matching size is recomputed and
/// asserted on every construction.
inline PointSet tight_family(int m, int drop = 0) {
    detail::require_family_args(m, drop, 2, "tight_family");
    if (drop == 1) {
        throw std::invalid_argument("tight_family: only drop = 0 or 2 is tight");
    }
    std::vector<std::pair<Rational, Rational>> coords;
    for (int t = 0; t < m; ++t) {
        // station 0 is the top of the chain so that the dropped pair is the
        // exposed end, which keeps the remaining ears isolated from each other
        detail::emit_station(coords, m - 1 - t, !(t == 0 && drop >= 1),
                             !(t == 0 && drop >= 2));
    }
    PointSet ps = certify(PointSet(std::move(coords)));
    int n = int(ps.size());
    int want = ceil_div(n - 2, 3);
    Matching got = max_matching(build_cone_minimum(ps, Flavor::down));
    if (got.size() != want) {
        throw std::logic_error("tight_family: matching " + std::to_string(got.size()) +
                               " != " + std::to_string(want));
    }
    return ps;
}

/// Point set of n = 3m + 3 points whose down graph is 3-connected with
/// maximum matching exactly ceil((n+5)/3) = m + 3: the chain of stations is
/// enclosed by three far-away points (north, southwest, southeast) that pick
/// up the boundary vertices and eliminate every 1- and 2-cut. Dropping the
/// first one or two points (hub, then west ear, of the bottom station) keeps
/// the graph 3-connected with matching exactly ceil((n+5)/3). Both claims are
/// recomputed and asserted on every construction.
inline PointSet three_connected_family(int m, int drop = 0) {
    detail::require_family_args(m, drop, 2, "three_connected_family");
    std::vector<std::pair<Rational, Rational>> coords;
    for (int i = 0; i < m; ++i) {
        detail::emit_station(coords, i, !(i == 0 && drop >= 1), !(i == 0 && drop >= 2));
    }
    long fx = 70000L * m + 1000000;
    long fy = 80000L * m + 1000000;
    long cx = 70000L * (m - 1) / 2;
    long cy = 40000L * (m - 1) / 2;
    coords.emplace_back(make_rational(cx + 7), make_rational(cy + fy));
    coords.emplace_back(make_rational(cx - fx), make_rational(cy - fy / 2 + 11));
    coords.emplace_back(make_rational(cx + fx + 3), make_rational(cy - fy / 2 - 5));
    PointSet ps = certify(PointSet(std::move(coords)));
    int n = int(ps.size());
    TriGraph g = build_cone_minimum(ps, Flavor::down);
    if (!is_three_connected(g.n(), g.edges)) {
        throw std::logic_error("three_connected_family: graph is not 3-connected");
    }
    int want = ceil_div(n + 5, 3);
    Matching got = max_matching(g);
    if (got.size() != want) {
        throw std::logic_error("three_connected_family: matching " +
                               std::to_string(got.size()) + " != " + std::to_string(want));
    }
    return ps;
}

} // namespace tripts
