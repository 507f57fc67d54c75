#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "tripts/matching.hpp"
#include "tripts/structure.hpp"

namespace tripts {

/// Down graph augmented with at most three region vertices (plus one extra
/// when there is a single degree-one vertex) so that the result is planar,
/// 2-connected and of minimum degree 3. The rotation system extends the base
/// embedding, which is how planarity is verified.
struct AugmentedGraph {
    SimpleGraph graph;
    int base_n = 0;
    std::vector<int> added_vertices;
    EdgeSet added_edges;
    std::vector<std::vector<int>> regions; // per added vertex: base vertices it attaches to
    std::vector<std::vector<int>> rotation;
};

namespace detail {

/// Rotate a closed walk so that the first occurrence of `start` is at the
/// front.
inline std::vector<int> rotate_walk(const std::vector<int>& walk, int start) {
    auto it = std::find(walk.begin(), walk.end(), start);
    if (it == walk.end()) throw std::logic_error("rotate_walk: vertex not on walk");
    std::vector<int> out(it, walk.end());
    out.insert(out.end(), walk.begin(), it);
    return out;
}

/// Attach a new vertex inside a face: one edge to each target vertex, placed
/// at the target's first corner scanning the face walk from its front. Valid
/// for any subset of the face's vertices; each edge is inserted into the
/// hosting rotation at the corner gap (right before the walk predecessor,
/// since face walks keep the region on the left) and the new vertex's
/// rotation lists the attached corners in walk order, which keeps the
/// rotation system an embedding.
inline std::vector<int> attach_in_face(std::vector<std::vector<int>>& rotation, int vertex,
                                       const std::vector<int>& face_walk,
                                       const std::set<int>& targets) {
    const std::size_t len = face_walk.size();
    std::vector<int> attach_order;
    std::set<int> done;
    for (std::size_t j = 0; j < len; ++j) {
        int v = face_walk[j];
        if (!targets.count(v) || done.count(v)) continue;
        done.insert(v);
        int pred = face_walk[(j + len - 1) % len];
        auto& rot = rotation[v];
        auto it = std::find(rot.begin(), rot.end(), pred);
        if (it == rot.end()) throw std::logic_error("attach_in_face: corner not in rotation");
        rot.insert(it, vertex);
        attach_order.push_back(v);
    }
    if (done.size() != targets.size()) {
        throw std::logic_error("attach_in_face: some targets not on the face");
    }
    if (int(rotation.size()) <= vertex) rotation.resize(vertex + 1);
    rotation[vertex] = attach_order;
    return attach_order;
}

inline std::vector<int> find_face_containing(const std::vector<std::vector<int>>& rotation,
                                             const std::set<int>& targets) {
    for (auto& walk : trace_faces(rotation)) {
        std::set<int> verts(walk.begin(), walk.end());
        if (std::includes(verts.begin(), verts.end(), targets.begin(), targets.end())) {
            return walk;
        }
    }
    throw std::logic_error("no face contains all attachment targets");
}

} // namespace detail

/// Build the augmented graph from a connected down graph and its embedding.
/// k = number of degree-one vertices (at most 3). For k >= 2 the outer walk
/// is split at the degree-one vertices into k intervals; vertex x_i is joined
/// to every vertex of interval i and the x's form a cycle (a single edge when
/// k = 2). For k <= 1 a single vertex is joined to the whole outer walk, and
/// when k = 1 a second vertex is inserted into a face holding both x and the
/// degree-one vertex to lift its degree to 3.
inline AugmentedGraph augment(const TriGraph& g, const Embedding& e) {
    const int n = g.n();
    if (n < 3) throw std::invalid_argument("augment: need at least 3 points");
    if (!is_connected(n, g.edges)) throw std::invalid_argument("augment: graph not connected");

    std::vector<int> deg1 = degree_one_census(g);
    const int k = int(deg1.size());
    if (k > 3) throw std::logic_error("augment: more than three degree-one vertices");

    AugmentedGraph a;
    a.base_n = n;
    a.rotation = e.rotation;
    a.graph.edges = g.edges;

    const std::vector<int>& outer = e.outer_walk();
    int next_id = n;

    auto record = [&a](int x, const std::vector<int>& attached) {
        a.added_vertices.push_back(x);
        a.regions.push_back(attached);
        for (int v : attached) a.added_edges.insert(make_edge(x, v));
    };

    if (k <= 1) {
        std::set<int> all(outer.begin(), outer.end());
        int x = next_id++;
        record(x, detail::attach_in_face(a.rotation, x, outer, all));
        if (k == 1) {
            int p0 = deg1[0];
            auto face = detail::find_face_containing(a.rotation, {p0, x});
            std::set<int> targets(face.begin(), face.end());
            int y = next_id++;
            record(y, detail::attach_in_face(a.rotation, y, face, targets));
        }
    } else {
        // degree-one vertices ordered by first occurrence on the outer walk;
        // a degree-one vertex occurs exactly once on it
        std::vector<std::size_t> occ;
        for (int p : deg1) {
            auto it = std::find(outer.begin(), outer.end(), p);
            if (it == outer.end()) throw std::logic_error("degree-one vertex not on outer walk");
            occ.push_back(std::size_t(it - outer.begin()));
        }
        std::sort(occ.begin(), occ.end());
        const std::size_t len = outer.size();
        std::vector<int> xs;
        for (int i = 0; i < k; ++i) {
            std::size_t from = occ[i];
            std::size_t to = occ[(i + 1) % k];
            std::set<int> targets;
            for (std::size_t j = from;; j = (j + 1) % len) {
                targets.insert(outer[j]);
                if (j == to) break;
            }
            // the x's form a cycle; with k <= 3, joining each new x to all
            // earlier ones is exactly that cycle (a single edge when k = 2)
            for (int x_prev : xs) targets.insert(x_prev);
            int x = next_id++;
            // Start the walk scan at the region boundary so every region
            // vertex is attached at a corner inside its own interval: at p_i
            // for the first region, at the previous x afterwards (the region
            // interval directly follows it on the remaining face).
            std::vector<int> face =
                i == 0 ? detail::rotate_walk(outer, outer[occ[0]])
                       : detail::rotate_walk(detail::find_face_containing(a.rotation, targets),
                                             xs.back());
            record(x, detail::attach_in_face(a.rotation, x, face, targets));
            xs.push_back(x);
        }
    }

    a.graph.n = next_id;
    a.graph.edges.insert(a.added_edges.begin(), a.added_edges.end());
    return a;
}

struct AugmentReport {
    bool min_degree_three = false;
    bool two_connected = false;
    bool planar_embedding = false;
    bool vertex_count_ok = false;

    bool pass() const {
        return min_degree_three && two_connected && planar_embedding && vertex_count_ok;
    }
};

/// Check the four claimed properties of the augmented graph. Planarity is
/// verified combinatorially: the stored rotation system must be symmetric,
/// match the edge set, and satisfy Euler's formula via face tracing.
inline AugmentReport verify_augmented(const AugmentedGraph& a) {
    AugmentReport r;
    auto deg = a.graph.degrees();
    r.min_degree_three =
        a.graph.n > 0 && *std::min_element(deg.begin(), deg.end()) >= 3;

    if (is_connected(a.graph.n, a.graph.edges)) {
        BlockCutTree bc = block_cut_tree(a.graph.n, a.graph.edges);
        r.two_connected = bc.cut_vertices.empty() && a.graph.n >= 3;
    }

    r.vertex_count_ok = a.graph.n == a.base_n + int(a.added_vertices.size());

    // rotation system consistency
    bool rot_ok = int(a.rotation.size()) == a.graph.n;
    std::size_t half_edges = 0;
    if (rot_ok) {
        for (int v = 0; v < a.graph.n && rot_ok; ++v) {
            for (int u : a.rotation[v]) {
                ++half_edges;
                if (!a.graph.edges.count(make_edge(u, v))) rot_ok = false;
            }
        }
        if (half_edges != 2 * a.graph.edges.size()) rot_ok = false;
    }
    if (rot_ok) {
        auto faces = detail::trace_faces(a.rotation);
        std::size_t walk_total = 0;
        for (auto& w : faces) walk_total += w.size();
        long euler = long(a.graph.n) - long(a.graph.edges.size()) + long(faces.size());
        r.planar_embedding = walk_total == 2 * a.graph.edges.size() && euler == 2;
    }
    return r;
}

/// Restrict a matching of the augmented graph to the base graph by dropping
/// every edge with an added endpoint; the result is a valid base matching of
/// size at least |M'| - |added|.
inline Matching restrict_matching(const AugmentedGraph& a, const Matching& augmented_matching) {
    Matching m;
    for (auto& [u, v] : augmented_matching.edges) {
        if (u < a.base_n && v < a.base_n) m.edges.insert({u, v});
    }
    return m;
}

} // namespace tripts
