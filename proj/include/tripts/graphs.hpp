#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tripts/geometry.hpp"

namespace tripts {

using Edge = std::pair<int, int>; // normalized: first < second

inline Edge make_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("self-loop edge");
    return u < v ? Edge{u, v} : Edge{v, u};
}

using EdgeSet = std::set<Edge>;

enum class Flavor { down, up, union_of, intersection };

/// Abstract simple undirected graph on vertices 0..n-1; used for the
/// augmented graphs, which have no point coordinates.
struct SimpleGraph {
    int n = 0;
    EdgeSet edges;

    std::vector<int> degrees() const {
        std::vector<int> d(n, 0);
        for (auto& [u, v] : edges) {
            ++d[u];
            ++d[v];
        }
        return d;
    }
    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n);
        for (auto& [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }
};

/// Empty-triangle graph on a point set, with the flavor recording how it was
/// built (down / up / union / intersection).
struct TriGraph {
    PointSet points;
    EdgeSet edges;
    Flavor flavor = Flavor::down;

    int n() const { return int(points.size()); }
    bool has_edge(int u, int v) const { return edges.count(make_edge(u, v)) > 0; }

    std::vector<int> degrees() const {
        std::vector<int> d(n(), 0);
        for (auto& [u, v] : edges) {
            ++d[u];
            ++d[v];
        }
        return d;
    }
    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(n());
        for (auto& [u, v] : edges) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }
    SimpleGraph abstract() const { return SimpleGraph{n(), edges}; }
};

namespace detail {
inline void require_general_position(const PointSet& ps) {
    if (ps.certified_general_position()) return;
    if (!general_position(ps).ok) {
        throw std::invalid_argument("point set not in general position");
    }
}
} // namespace detail

/// Cone-minimum construction: for each point p and each cone of the flavor's
/// kind (negative cones for down, positive for up), connect p to the point of
/// the cone minimizing the projection length onto the cone bisector.
/// Single O(n^2) pass over ordered pairs, tracking per-(point, cone) minima.
inline TriGraph build_cone_minimum(const PointSet& ps, Flavor flavor) {
    if (flavor != Flavor::down && flavor != Flavor::up) {
        throw std::invalid_argument("build_cone_minimum: flavor must be down or up");
    }
    detail::require_general_position(ps);
    const ConeSign wanted = flavor == Flavor::down ? ConeSign::negative : ConeSign::positive;
    const int n = int(ps.size());
    struct Best {
        std::optional<ExactScalar> dist;
        int id = -1;
    };
    std::vector<std::array<Best, 3>> best(n);
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            if (p == q) continue;
            ConeIndex c = classify_cone(ps[p], ps[q]);
            if (c.kind != wanted) continue;
            ExactScalar d = projection_length(ps[p], ps[q], c);
            Best& b = best[p][c.i - 1];
            if (!b.dist || d < *b.dist) {
                b.dist = d;
                b.id = q;
            } else if (d == *b.dist) {
                // equal projections in one cone would force a forbidden
                // direction between the two candidates
                throw std::logic_error("projection tie under general position");
            }
        }
    }
    TriGraph g{ps, {}, flavor};
    for (int p = 0; p < n; ++p) {
        for (const Best& b : best[p]) {
            if (b.id >= 0) g.edges.insert(make_edge(p, b.id));
        }
    }
    return g;
}

/// Brute-force oracle from the definition: p and q are adjacent iff the
/// smallest triangle of the flavor's orientation containing them is empty of
/// other points. O(n^3).
inline TriGraph build_oracle(const PointSet& ps, Flavor flavor) {
    if (flavor != Flavor::down && flavor != Flavor::up) {
        throw std::invalid_argument("build_oracle: flavor must be down or up");
    }
    detail::require_general_position(ps);
    const Orientation orient =
        flavor == Flavor::down ? Orientation::down : Orientation::up;
    const int n = int(ps.size());
    TriGraph g{ps, {}, flavor};
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            FixedTriangle t = smallest_triangle(ps[p], ps[q], orient);
            bool empty = true;
            for (int r = 0; r < n && empty; ++r) {
                if (r == p || r == q) continue;
                if (triangle_contains(t, ps[r], ContainMode::closed)) empty = false;
            }
            if (empty) g.edges.insert(Edge{p, q});
        }
    }
    return g;
}

namespace detail {
inline void require_same_points(const TriGraph& a, const TriGraph& b) {
    if (!(a.points == b.points)) {
        throw std::invalid_argument("graphs built on different point sets");
    }
}
} // namespace detail

inline TriGraph union_graph(const TriGraph& down, const TriGraph& up) {
    detail::require_same_points(down, up);
    TriGraph g{down.points, down.edges, Flavor::union_of};
    g.edges.insert(up.edges.begin(), up.edges.end());
    return g;
}

inline TriGraph intersect_graph(const TriGraph& down, const TriGraph& up) {
    detail::require_same_points(down, up);
    TriGraph g{down.points, {}, Flavor::intersection};
    std::set_intersection(down.edges.begin(), down.edges.end(), up.edges.begin(),
                          up.edges.end(), std::inserter(g.edges, g.edges.begin()));
    return g;
}

/// Minimum hexagonal-cone distance from p to the points outside S, split by
/// positive-cone (d1) and negative-cone (d2) minima; absent when the
/// respective cones hold no outside point.
struct HexDistance {
    std::optional<ExactScalar> d1;
    std::optional<ExactScalar> d2;

    std::optional<ExactScalar> d() const {
        if (!d1) return d2;
        if (!d2) return d1;
        return min(*d1, *d2);
    }
};

inline HexDistance hex_distance(const PointSet& ps, const std::vector<bool>& in_s, int p) {
    HexDistance h;
    for (int q = 0; q < int(ps.size()); ++q) {
        if (q == p || in_s[q]) continue;
        ConeIndex c = classify_cone(ps[p], ps[q]);
        ExactScalar d = projection_length(ps[p], ps[q], c);
        auto& slot = c.kind == ConeSign::positive ? h.d1 : h.d2;
        if (!slot || d < *slot) slot = d;
    }
    return h;
}

/// Incremental spanning tree of the intersection of the down and up graphs:
/// grow S from an arbitrary start, each step adding the outside point that
/// realizes the minimum hexagonal-cone distance to S. Each selected pair is
/// asserted to be an edge of both graphs; a failure indicates a predicate bug.
/// Ties are broken by lowest (p.id, q.id).
inline std::vector<Edge> hexagon_growth_tree(const PointSet& ps) {
    detail::require_general_position(ps);
    const int n = int(ps.size());
    std::vector<Edge> tree;
    if (n <= 1) return tree;
    TriGraph down = build_cone_minimum(ps, Flavor::down);
    TriGraph up = build_cone_minimum(ps, Flavor::up);
    std::vector<bool> in_s(n, false);
    in_s[0] = true;
    for (int step = 1; step < n; ++step) {
        std::optional<ExactScalar> best;
        int bp = -1, bq = -1;
        for (int p = 0; p < n; ++p) {
            if (!in_s[p]) continue;
            for (int q = 0; q < n; ++q) {
                if (in_s[q]) continue;
                ConeIndex c = classify_cone(ps[p], ps[q]);
                ExactScalar d = projection_length(ps[p], ps[q], c);
                if (!best || d < *best ||
                    (d == *best && std::pair{p, q} < std::pair{bp, bq})) {
                    best = d;
                    bp = p;
                    bq = q;
                }
            }
        }
        if (!down.has_edge(bp, bq) || !up.has_edge(bp, bq)) {
            throw std::logic_error("hexagon growth selected a pair outside the intersection");
        }
        tree.push_back(make_edge(bp, bq));
        in_s[bq] = true;
    }
    return tree;
}

} // namespace tripts
