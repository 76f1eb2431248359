#pragma once

#include <optional>

#include "vis/patches.hpp"
#include "vis/visibility.hpp"

namespace vis {

struct ThreeLinesExcluded : std::runtime_error {
    ThreeLinesExcluded() : std::runtime_error("curve is a union of three real lines") {}
};
struct TooFewOnCubic : std::runtime_error {
    explicit TooFewOnCubic(const std::string& w) : std::runtime_error(w) {}
};
struct NotIrreducibleOrDecomposable : std::runtime_error {
    explicit NotIrreducibleOrDecomposable(const std::string& w) : std::runtime_error(w) {}
};
struct NoFourCollinearRequired : std::runtime_error {
    NoFourCollinearRequired() : std::runtime_error("four collinear points present") {}
};
struct UnknownPatch : std::runtime_error {
    explicit UnknownPatch(const std::string& w) : std::runtime_error(w) {}
};

// max{1, min((n-s-(k-1))/(s+k), (n-s-13)/(15(s+1)))}, exactly.
Rational bound_formula(long n, long s, long k);

// Triple-line density constants, pure formula evaluators for reporting.
Rational density_constant_kl(long k, long l);  // 1 / (4(l-1) C(k-1,2))
Rational density_constant_dl(long d, long l);  // 1 / (8(l-1) C(d,2))

struct Certificate {
    std::string name;
    bool pass = false;
};

struct ContainerReport {
    CubicTag tag = CubicTag::Unclassified;
    int n = 0, s = 0, m = 0, a = 0;
    CliqueCover cover;  // over A with Γ membership, ambient indices
    int cover_bound_claimed = 0;
    Rational omega_lower_bound;
    std::vector<int> realized_clique;
    std::vector<Certificate> certificates;
    bool success = false;
};

// Certified clique cover of A∩Γ. Line-and-conic curves take the conic as a
// single visibility patch plus line singletons; irreducible curves go
// through the sheared-chart patch decomposition. Cover-size bounds are hard
// assertions; the realized clique versus the container bound is a recorded
// certificate.
ContainerReport cubic_container(const PointSet& A, const HomogeneousCubic& F, int k,
                                long long clique_budget = 20000000);

struct TuranReport {
    int n = 0;
    long long t2 = 0, t3 = 0, e = 0;
    bool identities_checked = false;
    bool clique_below_four = false;  // decided within budget
    bool ordinary_bound_checked = false;  // t2 <= n, only when clique < 4
};

// Exact pair/triple bookkeeping on a no-four-collinear set. Both counting
// identities are asserted; the ordinary-line bound t2 <= n is asserted when
// the visible clique number is provably below 4.
TuranReport turan_identities(const PointSet& A, long long clique_budget = 20000000);

struct CubicFit {
    std::optional<HomogeneousCubic> F;
    int s = -1;  // |A \ Γ| for the best F
    int degenerate_samples = 0;
    int trials_used = 0;
};

// Desk-scale container-curve search: repeatedly interpolates an exact cubic
// through 9 sampled points and keeps the one minimizing the off-curve count.
CubicFit fit_cubic(const PointSet& A, int trials = 200, uint64_t seed = 0);

struct AmbientReport {
    int n = 0;
    int patch_size = 0;         // |A ∩ W|
    int ambient_blockers = 0;   // off-curve points blocking a pair of A ∩ W
    bool size_ok = false;       // |A ∩ W| >= alpha * n
    bool blockers_ok = false;   // ambient_blockers <= beta * |A ∩ W|
    Rational clique_lower;      // m / (beta m + 1)
};

// Checks one patch W of the curve against the ambient-density hypotheses:
// the patch holds an alpha-fraction of A and off-curve blockers for
// within-patch pairs number at most beta |A ∩ W|. For a line-and-conic
// curve patch 0 is the conic.
AmbientReport ambient_container_check(const PointSet& A, const HomogeneousCubic& F,
                                      int patch_id, const Rational& alpha,
                                      const Rational& beta);

}  // namespace vis
