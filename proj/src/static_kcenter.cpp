#include "kcc/static_kcenter.hpp"

#include <algorithm>

#include "kcc/kernels.hpp"

namespace kcc {

std::vector<PointId> maximal_independent_set(const MetricInstance& inst, double r) {
    std::vector<PointId> taken;
    for (PointId p : inst.live()) {
        bool blocked = false;
        for (PointId t : taken) {
            if (inst.distance(p, t) <= r) {
                blocked = true;
                break;
            }
        }
        if (!blocked) taken.push_back(p);
    }
    return taken;
}

StaticSolution hochbaum_shmoys(const MetricInstance& inst, int k) {
    if (k < 1) throw IllegalState("k must be positive");
    StaticSolution sol;
    const auto& live = inst.live();
    if (live.empty()) return sol;
    if (static_cast<std::size_t>(k) >= live.size()) {
        sol.centers = live;
        sol.radius = 0.0;
        return sol;
    }
    std::vector<double> D = sorted_distinct_distances(inst);
    // Smallest index with |MIS| <= k.  The predicate is true for the largest
    // distance (a single point dominates), so hi always stays feasible.
    long lo = -1, hi = static_cast<long>(D.size()) - 1;
    while (lo + 1 < hi) {
        long mid = lo + (hi - lo) / 2;
        if (maximal_independent_set(inst, D[mid]).size() <= static_cast<std::size_t>(k))
            hi = mid;
        else
            lo = mid;
    }
    sol.centers = maximal_independent_set(inst, D[hi]);
    sol.radius = kern::cost(inst, live, sol.centers);
    return sol;
}

std::vector<PointId> gonzalez_subset(const MetricInstance& inst, std::span<const PointId> universe,
                                     int k, PointId seed) {
    if (k < 1) throw IllegalState("k must be positive");
    if (static_cast<std::size_t>(k) > universe.size())
        throw TooFewPoints("gonzalez needs k <= |universe|");
    std::vector<PointId> chosen{seed};
    std::vector<PointId> cand;
    std::vector<double> best;
    for (PointId p : universe) {
        if (p == seed) continue;
        cand.push_back(p);
        best.push_back(inst.distance(p, seed));
    }
    while (chosen.size() < static_cast<std::size_t>(k)) {
        std::size_t pick = 0;
        bool any = false;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (!any || best[i] > best[pick] || (best[i] == best[pick] && cand[i] < cand[pick])) {
                pick = i;
                any = true;
            }
        }
        PointId next = cand[pick];
        chosen.push_back(next);
        cand.erase(cand.begin() + pick);
        best.erase(best.begin() + pick);
        for (std::size_t i = 0; i < cand.size(); ++i) {
            double d = inst.distance(cand[i], next);
            if (d < best[i]) best[i] = d;
        }
    }
    return chosen;
}

std::vector<PointId> gonzalez(const MetricInstance& inst, int k, PointId seed) {
    if (!inst.present(seed)) throw IdNotPresent("gonzalez seed not present");
    return gonzalez_subset(inst, inst.live(), k, seed);
}

StaticSolution brute_force_opt(const MetricInstance& inst, int k) {
    if (k < 1) throw IllegalState("k must be positive");
    const auto& live = inst.live();
    if (live.size() > 20)
        throw OracleSizeExceeded("brute force oracle limited to 20 points, got " +
                                 std::to_string(live.size()));
    StaticSolution sol;
    if (static_cast<std::size_t>(k) >= live.size()) {
        sol.centers = live;
        sol.radius = 0.0;
        return sol;
    }
    const std::size_t n = live.size();
    const std::size_t kk = static_cast<std::size_t>(k);
    std::vector<std::size_t> idx(kk);
    for (std::size_t i = 0; i < kk; ++i) idx[i] = i;
    std::vector<PointId> subset(kk);
    bool first = true;
    while (true) {
        for (std::size_t i = 0; i < kk; ++i) subset[i] = live[idx[i]];
        double c = kern::cost(inst, live, subset);
        if (first || c < sol.radius) {
            sol.radius = c;
            sol.centers = subset;
            first = false;
        }
        // next combination in lexicographic order
        std::size_t i = kk;
        while (i > 0 && idx[i - 1] == n - kk + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < kk; ++j) idx[j] = idx[j - 1] + 1;
    }
    return sol;
}

}  // namespace kcc
