#include "vis/visibility.hpp"

#include <algorithm>
#include <cassert>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace vis {

VisibilityGraph::VisibilityGraph(int n) : n_(n), words_((n + 63) / 64) {
    rows_.assign(n_, std::vector<uint64_t>(words_, 0));
}

bool VisibilityGraph::adjacent(int i, int j) const {
    if (i == j) return false;
    return (rows_[i][j >> 6] >> (j & 63)) & 1;
}

void VisibilityGraph::set_edge(int i, int j, bool adj) {
    uint64_t mi = uint64_t(1) << (j & 63), mj = uint64_t(1) << (i & 63);
    if (adj) {
        rows_[i][j >> 6] |= mi;
        rows_[j][i >> 6] |= mj;
    } else {
        rows_[i][j >> 6] &= ~mi;
        rows_[j][i >> 6] &= ~mj;
    }
}

int VisibilityGraph::witness(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = witness_.find({i, j});
    return it == witness_.end() ? -1 : it->second;
}

void VisibilityGraph::set_witness(int i, int j, int w) {
    if (i > j) std::swap(i, j);
    witness_[{i, j}] = w;
}

long long VisibilityGraph::edge_count() const {
    long long e = 0;
    for (int i = 0; i < n_; ++i)
        for (uint64_t w : rows_[i]) e += __builtin_popcountll(w);
    return e / 2;
}

VisibilityGraph VisibilityGraph::induced(const std::vector<int>& vertices) const {
    VisibilityGraph G(static_cast<int>(vertices.size()));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                G.set_edge(static_cast<int>(i), static_cast<int>(j), true);
    return G;
}

// Smallest blocker of (i, j), or -1 when the pair is visible.
static int first_blocker(const PointSet& A, int i, int j) {
    for (int k = 0; k < A.size(); ++k) {
        if (k == i || k == j) continue;
        if (strictly_between(A[i], A[j], A[k])) return k;
    }
    return -1;
}

static VisibilityGraph build_graph(const PointSet& A, bool parallel) {
    int n = A.size();
    if (n < 2) throw TooFewPoints("visibility_graph needs at least 2 points");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<int> blockers(pairs.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
#endif
    for (long long t = 0; t < static_cast<long long>(pairs.size()); ++t)
        blockers[t] = first_blocker(A, pairs[t].first, pairs[t].second);
    (void)parallel;

    VisibilityGraph G(n);
    for (size_t t = 0; t < pairs.size(); ++t) {
        auto [i, j] = pairs[t];
        if (blockers[t] < 0)
            G.set_edge(i, j, true);
        else
            G.set_witness(i, j, blockers[t]);
    }
    return G;
}

VisibilityGraph visibility_graph_serial(const PointSet& A) { return build_graph(A, false); }
VisibilityGraph visibility_graph(const PointSet& A) { return build_graph(A, true); }

namespace {

struct CliqueSearcher {
    const VisibilityGraph& g;
    long long budget;
    long long nodes = 0;
    bool exceeded = false;
    std::vector<int> best, current;

    explicit CliqueSearcher(const VisibilityGraph& graph, long long node_budget)
        : g(graph), budget(node_budget) {}

    // Greedy colouring of `cand`; returns vertices ordered by colour with
    // their colour numbers (1-based), colours ascending.
    void colour(const std::vector<int>& cand, std::vector<int>& order,
                std::vector<int>& colours) {
        order.clear();
        colours.clear();
        std::vector<std::vector<int>> classes;
        for (int v : cand) {
            size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool fits = true;
                for (int u : classes[c])
                    if (g.adjacent(u, v)) {
                        fits = false;
                        break;
                    }
                if (fits) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        for (size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                colours.push_back(static_cast<int>(c) + 1);
            }
    }

    void expand(std::vector<int>& cand) {
        if (++nodes > budget) {
            exceeded = true;
            return;
        }
        std::vector<int> order, colours;
        colour(cand, order, colours);
        for (int idx = static_cast<int>(order.size()) - 1; idx >= 0; --idx) {
            if (exceeded) return;
            if (current.size() + colours[idx] <= best.size()) return;
            int v = order[idx];
            current.push_back(v);
            std::vector<int> next;
            for (int i = 0; i < idx; ++i)
                if (g.adjacent(order[i], v)) next.push_back(order[i]);
            if (current.size() > best.size()) best = current;
            if (!next.empty()) expand(next);
            current.pop_back();
        }
    }
};

}  // namespace

CliqueResult max_visible_clique(const VisibilityGraph& G, long long node_budget) {
    if (node_budget <= 0) throw std::invalid_argument("node_budget must be positive");
    CliqueSearcher s(G, node_budget);
    std::vector<int> all(G.size());
    for (int i = 0; i < G.size(); ++i) all[i] = i;
    s.expand(all);
    return {s.best, !s.exceeded, s.nodes};
}

std::vector<int> brute_force_max_clique(const VisibilityGraph& G) {
    int n = G.size();
    assert(n <= 25);
    std::vector<int> best;
    for (uint32_t mask = 1; mask < (uint32_t(1) << n); ++mask) {
        if (__builtin_popcount(mask) <= static_cast<int>(best.size())) continue;
        std::vector<int> verts;
        for (int i = 0; i < n; ++i)
            if (mask & (uint32_t(1) << i)) verts.push_back(i);
        bool clique = true;
        for (size_t a = 0; a < verts.size() && clique; ++a)
            for (size_t b = a + 1; b < verts.size(); ++b)
                if (!G.adjacent(verts[a], verts[b])) {
                    clique = false;
                    break;
                }
        if (clique) best = verts;
    }
    return best;
}

BlockerSet blocker_set(const PointSet& A, const std::vector<int>& X) {
    BlockerSet out;
    std::set<int> xs(X.begin(), X.end());
    for (size_t a = 0; a < X.size(); ++a)
        for (size_t b = a + 1; b < X.size(); ++b)
            for (int r = 0; r < A.size(); ++r) {
                if (r == X[a] || r == X[b]) continue;
                if (strictly_between(A[X[a]], A[X[b]], A[r])) out.indices.insert(r);
            }
    out.b = static_cast<int>(out.indices.size());
    for (int r : out.indices)
        if (xs.count(r)) out.disjoint_from_x = false;
    return out;
}

CliqueCover blocker_colouring_cover(const PointSet& A, const std::vector<int>& X) {
    // Precondition: no line meets X in three points.
    for (size_t a = 0; a < X.size(); ++a)
        for (size_t b = a + 1; b < X.size(); ++b)
            for (size_t c = b + 1; c < X.size(); ++c)
                if (orient(A[X[a]], A[X[b]], A[X[c]]) == 0)
                    throw ThreeCollinearInPatch("three collinear points inside the patch subset");

    int m = static_cast<int>(X.size());
    CliqueCover cover;
    cover.scope = X;
    if (m == 0) {
        cover.certified = true;
        cover.matchings_ok = true;
        return cover;
    }

    // Non-visibility graph H on X, each edge assigned to its smallest blocker.
    std::vector<std::vector<int>> h(m);
    std::map<int, std::vector<std::pair<int, int>>> assigned;  // blocker -> H edges
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            int w = first_blocker(A, X[a], X[b]);
            if (w >= 0) {
                h[a].push_back(b);
                h[b].push_back(a);
                assigned[w].emplace_back(a, b);
            }
        }

    cover.b = static_cast<int>(assigned.size());
    for (int a = 0; a < m; ++a)
        cover.max_degree_h = std::max(cover.max_degree_h, static_cast<int>(h[a].size()));

    // Lemma assertions: each blocker's edges form a matching, hence the
    // degree of H is at most b.
    cover.matchings_ok = true;
    for (auto& [r, edges] : assigned) {
        std::set<int> touched;
        for (auto& [a, b] : edges)
            if (!touched.insert(a).second || !touched.insert(b).second)
                cover.matchings_ok = false;
    }
    if (!cover.matchings_ok || cover.max_degree_h > cover.b)
        throw std::logic_error("blocker-colouring invariants violated on a valid input");

    // Greedy proper colouring of H in ascending index order.
    std::vector<int> colour_of(m, -1);
    int parts = 0;
    for (int v = 0; v < m; ++v) {
        std::set<int> used;
        for (int u : h[v])
            if (colour_of[u] >= 0) used.insert(colour_of[u]);
        int c = 0;
        while (used.count(c)) ++c;
        colour_of[v] = c;
        parts = std::max(parts, c + 1);
    }
    cover.parts.assign(parts, {});
    for (int v = 0; v < m; ++v) cover.parts[colour_of[v]].push_back(X[v]);

    if (parts > cover.b + 1)
        throw std::logic_error("cover exceeds b+1 parts");
    cover.certified = recertify_cover(A, cover);
    if (!cover.certified) throw std::logic_error("cover failed recertification");
    return cover;
}

bool recertify_cover(const PointSet& A, const CliqueCover& cover) {
    std::set<int> seen;
    for (const auto& part : cover.parts) {
        for (int v : part)
            if (!seen.insert(v).second) return false;
        for (size_t a = 0; a < part.size(); ++a)
            for (size_t b = a + 1; b < part.size(); ++b)
                if (first_blocker(A, part[a], part[b]) >= 0) return false;
    }
    return seen == std::set<int>(cover.scope.begin(), cover.scope.end());
}

}  // namespace vis
