#pragma once

#include "vis/cubic.hpp"
#include "vis/geometry.hpp"

namespace vis {

struct InconsistentExceptionalSet : std::runtime_error {
    explicit InconsistentExceptionalSet(const std::string& w) : std::runtime_error(w) {}
};
struct PointsNotOnPatch : std::runtime_error {
    explicit PointsNotOnPatch(const std::string& w) : std::runtime_error(w) {}
};

// Exact sign of u at the algebraic real a, by vanishing test plus interval
// refinement.
int sign_at_alg(const UniPoly& u, const AlgReal& a);

// A maximal visibility arc: a union of (x-interval, branch rank) cells glued
// across benign cuts. Branch ranks count real y-roots from below.
struct Patch {
    std::vector<std::pair<int, int>> cells;  // (interval index, rank), ascending
    int convexity = 0;                       // sign of y'' on the arc, never 0
};

// A glue event at a cut: the meeting curve point is real and non-exceptional,
// so exactly one branch continues from each side.
struct MergeRecord {
    int cut;  // index into cut_xs; joins interval cut with cut+1
    AlgReal y;
    int left_rank, right_rank;
};

enum class AssignKind { Patch, Exceptional, NotOnCurve };
struct Assignment {
    AssignKind kind = AssignKind::NotOnCurve;
    int patch = -1;        // AssignKind::Patch
    int exceptional = -1;  // index into exc_affine
};

struct PatchDecomposition {
    BiPoly f;  // affine chart section of the curve
    ExceptionalSet E;
    std::vector<AlgReal> cut_xs;     // sorted, distinct
    std::vector<Rational> probes;    // one rational probe per open interval
    std::vector<int> branch_counts;  // per interval; both sized cut_xs.size()+1
    std::vector<Patch> patches;
    std::vector<MergeRecord> merges;
    std::vector<AlgebraicPoint> exc_affine;        // distinct affine exceptional points
    std::map<std::pair<int, int>, int> cell_patch;  // (interval, rank) -> patch id
};

// Cuts the x-axis at every affine exceptional x-coordinate and at the real
// roots of the leading y-coefficient (branch-escape abscissas of standard
// charts), counts branches per interval at rational probes, then glues cells
// across cuts whose meeting point is a real non-exceptional curve point.
// Sheared charts assert a merged patch count of at most 15.
PatchDecomposition decompose(const HomogeneousCubic& F, const ExceptionalSet& E);

// Exact membership of a rational point: NotOnCurve, exceptional point id,
// or the unique patch, decided by polynomial signs only.
Assignment assign_point(const PatchDecomposition& D, const Point& p);

struct ChordCertificate {
    bool empty_interior = false;
    int interior_roots = 0;  // distinct curve points strictly inside (pq)
};

// Independent oracle: substitutes the segment p + t(q - p) into f and
// isolates the real roots in (0, 1). Requires both points on a patch; when
// they sit on different patches the certificate simply reports what it finds.
ChordCertificate certify_patch_chord(const PatchDecomposition& D, int patch, const Point& p,
                                     const Point& q);

}  // namespace vis
