#include "vis/orchard.hpp"

#include <algorithm>

namespace vis {

static long long choose2(long long t) { return t < 2 ? 0 : t * (t - 1) / 2; }
static long long choose3(long long t) { return t < 3 ? 0 : t * (t - 1) * (t - 2) / 6; }

TripleHypergraph triple_stats(const PointSet& A) {
    if (A.size() < 3) throw std::invalid_argument("triple_stats needs at least 3 points");
    TripleHypergraph H;
    H.deg.assign(A.size(), 0);
    auto stats = enumerate_lines(A);
    H.rich_lines = stats.rich_lines;
    long long degsum = 0;
    for (const auto& [key, members] : H.rich_lines) {
        long long t = static_cast<long long>(members.size());
        H.T += choose3(t);
        for (int i : members) {
            H.deg[i] += choose2(t - 1);
            degsum += choose2(t - 1);
        }
    }
    if (degsum != 3 * H.T) throw std::logic_error("triple degree sum != 3T");
    return H;
}

OrchardCore orchard_core(const PointSet& A, int k, int l) {
    if (k < 4 || l < 2) throw std::invalid_argument("orchard_core needs k >= 4, l >= 2");
    OrchardCore core;
    core.n = A.size();
    core.delta = Rational(1) / Rational(12 * (l - 1));
    core.Dk = choose2(k - 2);

    std::vector<std::vector<int>> line_members;
    std::vector<int> line_size;
    std::vector<std::vector<int>> lines_of(A.size());
    std::vector<long long> deg(A.size(), 0);
    if (A.size() >= 3) {
        auto stats = enumerate_lines(A);
        for (const auto& [key, members] : stats.rich_lines) {
            int id = static_cast<int>(line_members.size());
            line_members.push_back(members);
            line_size.push_back(static_cast<int>(members.size()));
            for (int i : members) {
                lines_of[i].push_back(id);
                deg[i] += choose2(static_cast<long long>(members.size()) - 1);
            }
        }
    }

    std::vector<bool> alive(A.size(), true);
    // deg < delta*n/2 tested exactly as 2*deg < delta*n.
    Rational twice_threshold = core.delta * Rational(core.n);
    for (;;) {
        int victim = -1;
        for (int i = 0; i < A.size(); ++i)
            if (alive[i] && Rational(static_cast<long>(2 * deg[i])) < twice_threshold) {
                victim = i;
                break;
            }
        if (victim < 0) break;
        alive[victim] = false;
        deg[victim] = 0;
        for (int id : lines_of[victim]) {
            long long t = line_size[id]--;
            for (int u : line_members[id])
                if (alive[u]) deg[u] -= choose2(t - 1) - choose2(t - 2);
        }
    }

    long long T = 0, degsum = 0;
    std::vector<long long> rich(A.size(), 0);
    for (size_t id = 0; id < line_members.size(); ++id) {
        long long t = line_size[id];
        if (t < 3) continue;
        T += choose3(t);
        for (int u : line_members[id])
            if (alive[u]) ++rich[u];
    }
    for (int i = 0; i < A.size(); ++i)
        if (alive[i]) degsum += deg[i];
    if (degsum != 3 * T) throw std::logic_error("pruned degree sum != 3T");

    for (int i = 0; i < A.size(); ++i)
        if (alive[i]) {
            core.survivors.push_back(i);
            core.rich_counts.push_back(rich[i]);
            core.final_degrees.push_back(deg[i]);
        }
    return core;
}

OrchardVerification verify_orchard_guarantees(const OrchardCore& core, const PointSet& A,
                                              int k, int l, long long clique_budget) {
    OrchardVerification v;
    v.max_collinear_measured = A.size() >= 2 ? max_collinear(A) : A.size();
    auto cl = max_visible_clique(visibility_graph(A), clique_budget);
    v.clique_measured = static_cast<int>(cl.clique.size());
    if (v.clique_measured < l && !cl.optimal) throw CliqueBudgetExceeded();

    long n = core.n;
    v.size_bound = Rational(n) / Rational(static_cast<long>(8 * (l - 1) * core.Dk));
    v.incidence_bound = Rational(n) / Rational(static_cast<long>(24 * (l - 1) * core.Dk));
    if (v.max_collinear_measured >= k || v.clique_measured >= l || n < 4 * (l - 1)) {
        v.status = OrchardStatus::NotApplicable;
        return v;
    }
    v.size_ok = Rational(static_cast<long>(core.survivors.size())) >= v.size_bound;
    v.incidence_ok = true;
    for (long long c : core.rich_counts)
        if (Rational(static_cast<long>(c)) < v.incidence_bound) v.incidence_ok = false;
    v.status = v.size_ok && v.incidence_ok ? OrchardStatus::Applicable
                                           : OrchardStatus::Violated;
    return v;
}

}  // namespace vis
