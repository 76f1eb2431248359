#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "vis/geometry.hpp"

namespace vis {

struct ThreeCollinearInPatch : std::runtime_error {
    explicit ThreeCollinearInPatch(const std::string& what) : std::runtime_error(what) {}
};

// Symmetric visibility adjacency over a point set, with one blocking
// witness recorded per non-edge.
class VisibilityGraph {
  public:
    VisibilityGraph() = default;
    explicit VisibilityGraph(int n);

    int size() const { return n_; }
    bool adjacent(int i, int j) const;
    void set_edge(int i, int j, bool adj);
    const std::vector<uint64_t>& row(int i) const { return rows_[i]; }

    // Witness index for a non-edge; -1 for edges/diagonal.
    int witness(int i, int j) const;
    void set_witness(int i, int j, int w);
    const std::map<std::pair<int, int>, int>& witnesses() const { return witness_; }

    long long edge_count() const;
    VisibilityGraph induced(const std::vector<int>& vertices) const;

  private:
    int n_ = 0;
    int words_ = 0;
    std::vector<std::vector<uint64_t>> rows_;
    std::map<std::pair<int, int>, int> witness_;
};

// O(n^3) exact scan; the witness for a blocked pair is the smallest
// blocking index. The OpenMP build parallelizes over pairs and is
// bit-identical to the serial reference.
VisibilityGraph visibility_graph_serial(const PointSet& A);
VisibilityGraph visibility_graph(const PointSet& A);

struct CliqueResult {
    std::vector<int> clique;
    bool optimal = true;
    long long nodes_explored = 0;
};

// Exact maximum clique by branch-and-bound with a greedy-colouring bound.
// When the node budget runs out the best clique found so far is returned
// with optimal = false.
CliqueResult max_visible_clique(const VisibilityGraph& G, long long node_budget);

// Exhaustive oracle, feasible for n <= ~20. Test/acceptance use only.
std::vector<int> brute_force_max_clique(const VisibilityGraph& G);

struct BlockerSet {
    std::set<int> indices;  // indices into A
    int b = 0;
    bool disjoint_from_x = true;
};

// All points of A blocking at least one pair of X (indices into A).
BlockerSet blocker_set(const PointSet& A, const std::vector<int>& X);

struct CliqueCover {
    std::vector<std::vector<int>> parts;  // partition of scope, ambient indices
    std::vector<int> scope;
    bool certified = false;
    int b = 0;
    // Lemma bookkeeping, asserted during construction:
    int max_degree_h = 0;     // max degree of the non-visibility graph on X
    bool matchings_ok = false;  // per-blocker assigned edges form matchings
};

// Greedy proper colouring of the non-visibility graph on X (ambient
// blockers), ascending index order. Requires no line to meet X in three
// points; the cover has at most b+1 parts and every part is recertified
// mutually visible by an independent scan.
CliqueCover blocker_colouring_cover(const PointSet& A, const std::vector<int>& X);

// Fresh from-scratch check that every within-part pair of the cover is
// visible in A and that the parts partition the scope.
bool recertify_cover(const PointSet& A, const CliqueCover& cover);

}  // namespace vis
