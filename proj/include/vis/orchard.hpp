#pragma once

#include "vis/container.hpp"

namespace vis {

struct CliqueBudgetExceeded : std::runtime_error {
    CliqueBudgetExceeded()
        : std::runtime_error("clique hypothesis undecidable within the node budget") {}
};

// Collinear-triple bookkeeping through line classes; no triple is ever
// materialized.
struct TripleHypergraph {
    long long T = 0;               // number of collinear triples
    std::vector<long long> deg;    // per point: triples through it
    std::map<LineKey, std::vector<int>> rich_lines;  // size >= 3
};

TripleHypergraph triple_stats(const PointSet& A);

enum class OrchardStatus { Applicable, NotApplicable, Violated };

struct OrchardCore {
    std::vector<int> survivors;           // ascending ambient indices
    int n = 0;                            // ORIGINAL |A|; the threshold uses it
    Rational delta;                       // 1 / (12(l-1))
    long long Dk = 0;                     // C(k-2, 2)
    std::vector<long long> rich_counts;   // per survivor: 3-rich lines within A'
    std::vector<long long> final_degrees; // per survivor: triples within A'
};

// Deterministic pruning: repeatedly delete the lowest-indexed point whose
// triple degree within the current set falls below delta*n/2, with n fixed
// at the original size. Degrees are maintained incrementally from the
// shrinking line classes.
OrchardCore orchard_core(const PointSet& A, int k, int l);

struct OrchardVerification {
    OrchardStatus status = OrchardStatus::NotApplicable;
    int max_collinear_measured = 0;
    int clique_measured = 0;
    bool size_ok = false;       // |A'| >= n / (8(l-1) Dk)
    bool incidence_ok = false;  // per survivor 3-rich lines >= n / (24(l-1) Dk)
    Rational size_bound, incidence_bound;
};

// Checks the pruning guarantees under the hypotheses: fewer than k collinear,
// visible clique below l (exact, budgeted), n >= 4(l-1). When the hypotheses
// hold the two lower bounds are theorem-guaranteed; a Violated status marks
// an implementation bug.
OrchardVerification verify_orchard_guarantees(const OrchardCore& core, const PointSet& A,
                                              int k, int l,
                                              long long clique_budget = 20000000);

}  // namespace vis
