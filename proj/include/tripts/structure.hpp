#pragma once

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

#include "tripts/graphs.hpp"

namespace tripts {

/// Combinatorial embedding of a straight-line drawing: per-vertex rotation
/// (incident neighbors sorted counterclockwise by exact angle), the face
/// walks, and the outer face (the unique clockwise walk).
struct Embedding {
    std::vector<std::vector<int>> rotation;
    std::vector<std::vector<int>> faces; // closed vertex walks, first vertex not repeated
    int outer_face = -1;

    const std::vector<int>& outer_walk() const { return faces[outer_face]; }
};

namespace detail {

struct Direction {
    ExactScalar x;
    ExactScalar y;
    int to; // neighbor id, final tie-break
};

/// Counterclockwise order of directions starting at angle 0 (inclusive).
/// Same-direction ties fall back to distance, then id; they cannot occur for
/// the graphs built here (a farther collinear point would make the nearer one
/// block the empty triangle).
inline bool ccw_less(const Direction& a, const Direction& b) {
    auto half = [](const Direction& d) {
        int sy = d.y.sign();
        return (sy > 0 || (sy == 0 && d.x.sign() > 0)) ? 0 : 1;
    };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    int cr = (a.x * b.y - a.y * b.x).sign();
    if (cr != 0) return cr > 0;
    ExactScalar la = a.x * a.x + a.y * a.y;
    ExactScalar lb = b.x * b.x + b.y * b.y;
    int lc = (la - lb).sign();
    if (lc != 0) return lc < 0;
    return a.to < b.to;
}

/// Trace all faces of a rotation system. From directed edge (u,v) the walk
/// continues to the predecessor of u in the rotation around v; with
/// counterclockwise rotations this keeps the face region on the left, so
/// internal faces are traversed counterclockwise and the outer face clockwise.
inline std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rotation) {
    std::map<std::pair<int, int>, int> pos; // (v, neighbor) -> index in rotation[v]
    for (int v = 0; v < int(rotation.size()); ++v) {
        for (int k = 0; k < int(rotation[v].size()); ++k) {
            pos[{v, rotation[v][k]}] = k;
        }
    }
    std::map<std::pair<int, int>, bool> used;
    std::vector<std::vector<int>> faces;
    for (int u = 0; u < int(rotation.size()); ++u) {
        for (int v0 : rotation[u]) {
            if (used[{u, v0}]) continue;
            std::vector<int> walk;
            int a = u, b = v0;
            do {
                used[{a, b}] = true;
                walk.push_back(a);
                const auto& rot = rotation[b];
                int k = pos.at({b, a});
                int c = rot[(k + rot.size() - 1) % rot.size()];
                a = b;
                b = c;
            } while (!(a == u && b == v0));
            faces.push_back(std::move(walk));
        }
    }
    return faces;
}

/// Twice the signed area of a closed walk; negative means clockwise.
inline ExactScalar walk_area2(const PointSet& ps, const std::vector<int>& walk) {
    ExactScalar a(0);
    for (std::size_t i = 0; i < walk.size(); ++i) {
        const Point& p = ps[walk[i]];
        const Point& q = ps[walk[(i + 1) % walk.size()]];
        a += p.x * q.y - p.y * q.x;
    }
    return a;
}

} // namespace detail

/// Brute-force exact planarity check of the straight-line drawing: no two
/// edge segments may share a point other than a common endpoint. O(E^2).
inline bool check_planarity_by_segments(const TriGraph& g) {
    std::vector<Edge> es(g.edges.begin(), g.edges.end());
    for (std::size_t i = 0; i < es.size(); ++i) {
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (segments_intersect(g.points[a], g.points[b], g.points[c], g.points[d])) {
                return false;
            }
        }
    }
    return true;
}

/// Build the embedding induced by the straight-line drawing. Fails if the
/// drawing is not plane (down/up graphs are always plane, so a crossing
/// signals a construction bug).
inline Embedding embed(const TriGraph& g, bool verify_segments = true) {
    if (verify_segments && !check_planarity_by_segments(g)) {
        throw std::logic_error("embed: edge segments cross; drawing is not plane");
    }
    const int n = g.n();
    Embedding e;
    e.rotation.resize(n);
    auto adj = g.adjacency();
    for (int v = 0; v < n; ++v) {
        std::vector<detail::Direction> dirs;
        for (int u : adj[v]) {
            dirs.push_back({g.points[u].x - g.points[v].x, g.points[u].y - g.points[v].y, u});
        }
        std::sort(dirs.begin(), dirs.end(), detail::ccw_less);
        for (auto& d : dirs) e.rotation[v].push_back(d.to);
    }
    e.faces = detail::trace_faces(e.rotation);
    int clockwise = -1;
    for (int f = 0; f < int(e.faces.size()); ++f) {
        if (detail::walk_area2(g.points, e.faces[f]).sign() < 0) {
            if (clockwise != -1) {
                throw std::logic_error("embed: more than one clockwise face walk");
            }
            clockwise = f;
        }
    }
    if (clockwise == -1) {
        // an acyclic graph has a single zero-area face, which is the outer one
        if (e.faces.size() != 1) {
            throw std::logic_error("embed: no clockwise face walk");
        }
        clockwise = 0;
    }
    e.outer_face = clockwise;
    return e;
}

/// True iff every non-outer face walk is a 3-walk. Meaningful for connected
/// down/up graphs; runs on any embedding.
inline bool check_internal_triangulation(const Embedding& e) {
    for (int f = 0; f < int(e.faces.size()); ++f) {
        if (f == e.outer_face) continue;
        if (e.faces[f].size() != 3) return false;
    }
    return true;
}

inline std::vector<int> degree_one_census(const TriGraph& g) {
    std::vector<int> out;
    auto deg = g.degrees();
    for (int v = 0; v < g.n(); ++v) {
        if (deg[v] == 1) out.push_back(v);
    }
    return out;
}

inline bool is_connected(int n, const EdgeSet& edges) {
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int cnt = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int u : adj[v]) {
            if (!seen[u]) {
                seen[u] = true;
                ++cnt;
                q.push(u);
            }
        }
    }
    return cnt == n;
}

/// Connected components after deleting the vertex set `removed`.
inline std::vector<std::vector<int>> components_without(int n, const EdgeSet& edges,
                                                        const std::vector<int>& removed) {
    std::vector<bool> gone(n, false);
    for (int v : removed) gone[v] = true;
    std::vector<std::vector<int>> adj(n);
    for (auto& [u, v] : edges) {
        if (gone[u] || gone[v]) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (gone[s] || seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u : adj[v]) {
                if (!seen[u]) {
                    seen[u] = true;
                    q.push(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

/// Exhaustive 3-connectivity test: n >= 4, connected, no cut vertex, and no
/// vertex pair whose removal disconnects the rest. O(n^2 (n + E)).
inline bool is_three_connected(int n, const EdgeSet& edges) {
    if (n < 4 || !is_connected(n, edges)) return false;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (components_without(n, edges, {a, b}).size() > 1) return false;
        }
    }
    return true;
}

/// Block-cut decomposition of a connected graph (DFS lowpoints): biconnected
/// components as edge sets, the cut vertices, and the bipartite adjacency
/// between them.
struct BlockCutTree {
    std::vector<EdgeSet> blocks;
    std::vector<int> cut_vertices;
    std::vector<std::vector<int>> block_cuts; // per block: the cut vertices it contains
    std::vector<std::vector<int>> cut_blocks; // per cut vertex: incident block indices

    bool is_path() const {
        for (auto& c : block_cuts) {
            if (c.size() > 2) return false;
        }
        for (auto& b : cut_blocks) {
            if (b.size() != 2) return false;
        }
        return true;
    }
};

inline BlockCutTree block_cut_tree(int n, const EdgeSet& edges) {
    if (!is_connected(n, edges)) {
        throw std::invalid_argument("block_cut_tree: graph must be connected");
    }
    std::vector<std::vector<int>> adj(n);
    for (auto& [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    BlockCutTree bc;
    std::vector<int> num(n, -1), low(n, 0), parent(n, -1), child_count(n, 0);
    std::vector<bool> is_cut(n, false);
    std::vector<Edge> stack;
    int timer = 0;

    struct Frame {
        int v;
        std::size_t next = 0;
    };
    for (int root = 0; root < n; ++root) {
        if (num[root] != -1) continue;
        std::vector<Frame> st{{root}};
        num[root] = low[root] = timer++;
        while (!st.empty()) {
            Frame& f = st.back();
            int v = f.v;
            if (f.next < adj[v].size()) {
                int u = adj[v][f.next++];
                if (u == parent[v]) continue;
                if (num[u] == -1) {
                    parent[u] = v;
                    ++child_count[v];
                    stack.push_back(make_edge(v, u));
                    num[u] = low[u] = timer++;
                    st.push_back({u});
                } else if (num[u] < num[v]) {
                    stack.push_back(make_edge(v, u));
                    low[v] = std::min(low[v], num[u]);
                }
            } else {
                st.pop_back();
                int p = parent[v];
                if (p != -1) {
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        // pop the block rooted at edge (p, v)
                        EdgeSet block;
                        Edge stop = make_edge(p, v);
                        while (true) {
                            Edge e = stack.back();
                            stack.pop_back();
                            block.insert(e);
                            if (e == stop) break;
                        }
                        bc.blocks.push_back(std::move(block));
                        if (p != root || child_count[p] > 1) is_cut[p] = true;
                    }
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) {
        if (is_cut[v]) bc.cut_vertices.push_back(v);
    }
    std::vector<int> cut_index(n, -1);
    for (int i = 0; i < int(bc.cut_vertices.size()); ++i) cut_index[bc.cut_vertices[i]] = i;
    bc.block_cuts.resize(bc.blocks.size());
    bc.cut_blocks.resize(bc.cut_vertices.size());
    for (int b = 0; b < int(bc.blocks.size()); ++b) {
        std::vector<int> verts;
        for (auto& [u, v] : bc.blocks[b]) {
            verts.push_back(u);
            verts.push_back(v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        for (int v : verts) {
            if (cut_index[v] != -1) {
                bc.block_cuts[b].push_back(cut_index[v]);
                bc.cut_blocks[cut_index[v]].push_back(b);
            }
        }
    }
    return bc;
}

inline BlockCutTree block_cut_tree(const TriGraph& g) { return block_cut_tree(g.n(), g.edges); }

/// Cut-vertex cone structure of a union graph: every cut vertex p must have
/// exactly one i with both the positive and negative cone i nonempty, all
/// other cones empty, and removing p must leave exactly the two components
/// {V_i(p)} and {V-bar_i(p)}.
inline bool check_cut_vertex_structure(const TriGraph& g) {
    BlockCutTree bc = block_cut_tree(g);
    const int n = g.n();
    for (int p : bc.cut_vertices) {
        std::vector<std::vector<int>> pos(3), neg(3);
        for (int q = 0; q < n; ++q) {
            if (q == p) continue;
            ConeIndex c = classify_cone(g.points[p], g.points[q]);
            (c.kind == ConeSign::positive ? pos : neg)[c.i - 1].push_back(q);
        }
        int axis = -1;
        for (int i = 0; i < 3; ++i) {
            bool occupied = !pos[i].empty() || !neg[i].empty();
            if (!occupied) continue;
            if (pos[i].empty() || neg[i].empty()) return false; // one-sided occupied cone
            if (axis != -1) return false;                       // second occupied pair
            axis = i;
        }
        if (axis == -1) return false;
        auto comps = components_without(n, g.edges, {p});
        if (comps.size() != 2) return false;
        std::sort(pos[axis].begin(), pos[axis].end());
        std::sort(neg[axis].begin(), neg[axis].end());
        bool match = (comps[0] == pos[axis] && comps[1] == neg[axis]) ||
                     (comps[0] == neg[axis] && comps[1] == pos[axis]);
        if (!match) return false;
    }
    return true;
}

/// Every cut vertex of a down/up graph must appear on the outer face walk.
inline bool check_cut_vertices_on_outer_face(const Embedding& e, const BlockCutTree& bc) {
    if (bc.cut_vertices.empty()) return true;
    const auto& walk = e.outer_walk();
    for (int v : bc.cut_vertices) {
        if (std::find(walk.begin(), walk.end(), v) == walk.end()) return false;
    }
    return true;
}

/// Path between p and q that stays inside the closed smallest down-triangle
/// of the pair, found by BFS restricted to points of that triangle. Existence
/// is guaranteed for down graphs; failure signals a bug.
inline std::vector<int> check_path_in_triangle(const TriGraph& g, int p, int q) {
    if (p == q) return {p};
    Orientation o = g.flavor == Flavor::up ? Orientation::up : Orientation::down;
    FixedTriangle t = smallest_triangle(g.points[p], g.points[q], o);
    const int n = g.n();
    std::vector<bool> allowed(n, false);
    for (int v = 0; v < n; ++v) {
        allowed[v] = triangle_contains(t, g.points[v], ContainMode::closed);
    }
    auto adj = g.adjacency();
    std::vector<int> prev(n, -1);
    std::queue<int> bfs;
    bfs.push(p);
    prev[p] = p;
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        if (v == q) break;
        for (int u : adj[v]) {
            if (allowed[u] && prev[u] == -1) {
                prev[u] = v;
                bfs.push(u);
            }
        }
    }
    if (prev[q] == -1) {
        throw std::logic_error("no path inside the smallest triangle; construction bug");
    }
    std::vector<int> path{q};
    while (path.back() != p) path.push_back(prev[path.back()]);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace tripts
