#pragma once

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "tripts/graphs.hpp"
#include "tripts/structure.hpp"

namespace tripts {

struct Matching {
    EdgeSet edges;

    int size() const { return int(edges.size()); }

    /// Structural validity: edges pairwise disjoint and present in the host.
    bool valid_for(int n, const EdgeSet& host) const {
        std::vector<int> used(n, 0);
        for (auto& [u, v] : edges) {
            if (!host.count({u, v})) return false;
            if (used[u]++ || used[v]++) return false;
        }
        return true;
    }
};

namespace detail {

/// Maximum cardinality matching by augmenting paths with blossom contraction,
/// O(V^3). Deterministic: the initial greedy matching is seeded in ascending
/// edge order and vertices are scanned in id order.
class Blossom {
public:
    Blossom(int n, const EdgeSet& edges) : n_(n), adj_(n), match_(n, -1) {
        for (auto& [u, v] : edges) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& [u, v] : edges) {
            if (match_[u] == -1 && match_[v] == -1) {
                match_[u] = v;
                match_[v] = u;
            }
        }
    }

    Matching run() {
        for (int v = 0; v < n_; ++v) {
            if (match_[v] == -1) find_augmenting_path(v);
        }
        Matching m;
        for (int v = 0; v < n_; ++v) {
            if (match_[v] > v) m.edges.insert({v, match_[v]});
        }
        return m;
    }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> used_, blossom_;

    int lowest_common_base(int a, int b) {
        std::vector<bool> seen(n_, false);
        for (;;) {
            a = base_[a];
            seen[a] = true;
            if (match_[a] == -1) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (seen[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = true;
            blossom_[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void find_augmenting_path(int root) {
        parent_.assign(n_, -1);
        used_.assign(n_, false);
        base_.resize(n_);
        for (int i = 0; i < n_; ++i) base_[i] = i;
        used_[root] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : adj_[v]) {
                if (base_[v] == base_[u] || match_[v] == u) continue;
                if (u == root || (match_[u] != -1 && parent_[match_[u]] != -1)) {
                    // odd cycle: contract the blossom to its base
                    int b = lowest_common_base(v, u);
                    blossom_.assign(n_, false);
                    mark_path(v, b, u);
                    mark_path(u, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = true;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[u] == -1) {
                    parent_[u] = v;
                    if (match_[u] == -1) {
                        augment(u);
                        return;
                    }
                    used_[match_[u]] = true;
                    q.push(match_[u]);
                }
            }
        }
    }

    void augment(int v) {
        while (v != -1) {
            int pv = parent_[v];
            int next = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = next;
        }
    }
};

} // namespace detail

inline Matching max_matching(int n, const EdgeSet& edges) {
    Matching m = detail::Blossom(n, edges).run();
    if (!m.valid_for(n, edges)) {
        throw std::logic_error("max_matching produced an invalid matching");
    }
    return m;
}

inline Matching max_matching(const SimpleGraph& g) { return max_matching(g.n, g.edges); }
inline Matching max_matching(const TriGraph& g) { return max_matching(g.n(), g.edges); }

/// Exhaustive branch-and-bound over edges; independent oracle for small n.
inline Matching brute_force_matching(int n, const EdgeSet& edges) {
    if (n > 14) {
        throw std::invalid_argument("brute_force_matching: n > 14");
    }
    std::vector<Edge> es(edges.begin(), edges.end());
    std::vector<bool> used(n, false);
    std::vector<Edge> current, best;
    int free_vertices = n;

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        std::size_t cap = std::min(es.size() - idx, std::size_t(free_vertices / 2));
        if (current.size() + cap <= best.size()) return;
        if (idx == es.size()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        auto [u, v] = es[idx];
        if (!used[u] && !used[v]) {
            used[u] = used[v] = true;
            free_vertices -= 2;
            current.push_back(es[idx]);
            self(self, idx + 1);
            current.pop_back();
            free_vertices += 2;
            used[u] = used[v] = false;
        }
        self(self, idx + 1);
    };
    rec(rec, 0);
    Matching m;
    m.edges.insert(best.begin(), best.end());
    return m;
}

inline Matching brute_force_matching(const SimpleGraph& g) {
    return brute_force_matching(g.n, g.edges);
}
inline Matching brute_force_matching(const TriGraph& g) {
    return brute_force_matching(g.n(), g.edges);
}

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct DownMatchingReport {
    int n = 0;
    int matching_size = 0;
    int bound = 0;
    int slack = 0;
    bool pass = false;
};

/// Matching lower bound for the down graph: size >= ceil((n-2)/3).
inline DownMatchingReport check_down_matching_bound(const PointSet& ps) {
    TriGraph g = build_cone_minimum(ps, Flavor::down);
    Matching m = max_matching(g);
    DownMatchingReport r;
    r.n = g.n();
    r.matching_size = m.size();
    r.bound = r.n >= 2 ? ceil_div(r.n - 2, 3) : 0;
    r.slack = r.matching_size - r.bound;
    r.pass = r.slack >= 0;
    return r;
}

struct PlanarMatchingReport {
    int n = 0;
    int matching_size = 0;
    int bound = 0;
    bool two_connected = false;
    bool preconditions_ok = false;
    std::string precondition_failure;
    bool pass = false;
};

/// Matching bound for connected planar graphs of minimum degree >= 3:
/// ceil((n+2)/3) when not 2-connected and n >= 10, ceil((n+4)/3) when
/// 2-connected and n >= 14, floor(n/2) otherwise. Planarity is a caller
/// obligation (the augmented graphs are planar by construction).
inline PlanarMatchingReport check_planar_matching_bound(const SimpleGraph& g) {
    PlanarMatchingReport r;
    r.n = g.n;
    if (!is_connected(g.n, g.edges)) {
        r.precondition_failure = "not connected";
        return r;
    }
    auto deg = g.degrees();
    if (g.n > 0 && *std::min_element(deg.begin(), deg.end()) < 3) {
        r.precondition_failure = "minimum degree < 3";
        return r;
    }
    r.preconditions_ok = true;
    BlockCutTree bc = block_cut_tree(g.n, g.edges);
    r.two_connected = bc.cut_vertices.empty() && g.n >= 3;
    if (!r.two_connected && r.n >= 10) {
        r.bound = ceil_div(r.n + 2, 3);
    } else if (r.two_connected && r.n >= 14) {
        r.bound = ceil_div(r.n + 4, 3);
    } else {
        r.bound = r.n / 2;
    }
    r.matching_size = max_matching(g).size();
    r.pass = r.matching_size >= r.bound;
    return r;
}

} // namespace tripts
