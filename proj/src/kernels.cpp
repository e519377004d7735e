#include "kcc/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kcc::kern {

namespace {

#ifdef _OPENMP
Mode g_mode = Mode::Parallel;
#else
Mode g_mode = Mode::Serial;
#endif

// Below this many points the parallel dispatch falls through to the serial
// loop; the results are identical either way, this only avoids fork overhead.
constexpr std::size_t kParallelThreshold = 256;

inline double point_to_set(const MetricInstance& inst, PointId p, std::span<const PointId> S) {
    double best = kInf;
    for (PointId s : S) {
        double d = inst.dist_fast(p, s);
        if (d < best) best = d;
    }
    return best;
}

}  // namespace

void set_mode(Mode m) {
#ifndef _OPENMP
    (void)m;
    g_mode = Mode::Serial;
#else
    g_mode = m;
#endif
}

Mode mode() { return g_mode; }

bool parallel_available() {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

double dist_to_set_serial(const MetricInstance& inst, PointId p, std::span<const PointId> S) {
    inst.add_evals(S.size());
    return point_to_set(inst, p, S);
}

double dist_to_set(const MetricInstance& inst, PointId p, std::span<const PointId> S) {
    return dist_to_set_serial(inst, p, S);
}

double cost_serial(const MetricInstance& inst, std::span<const PointId> pts,
                   std::span<const PointId> S) {
    if (pts.empty()) return 0.0;
    inst.add_evals(pts.size() * S.size());
    double worst = S.empty() ? kInf : 0.0;
    for (PointId p : pts) {
        double d = point_to_set(inst, p, S);
        if (d > worst) worst = d;
    }
    return worst;
}

double cost(const MetricInstance& inst, std::span<const PointId> pts,
            std::span<const PointId> S) {
    if (g_mode == Mode::Serial || pts.size() < kParallelThreshold || S.empty())
        return cost_serial(inst, pts, S);
#ifdef _OPENMP
    if (pts.empty()) return 0.0;
    inst.add_evals(pts.size() * S.size());
    double worst = 0.0;
    const long n = static_cast<long>(pts.size());
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (long i = 0; i < n; ++i) {
        double d = point_to_set(inst, pts[i], S);
        if (d > worst) worst = d;
    }
    return worst;
#else
    return cost_serial(inst, pts, S);
#endif
}

ArgResult farthest_serial(const MetricInstance& inst, std::span<const PointId> pts,
                          std::span<const PointId> S) {
    ArgResult r;
    inst.add_evals(pts.size() * S.size());
    for (PointId p : pts) {
        double d = point_to_set(inst, p, S);
        if (!r.valid || d > r.dist || (d == r.dist && p < r.id)) {
            r.id = p;
            r.dist = d;
            r.valid = true;
        }
    }
    return r;
}

ArgResult farthest(const MetricInstance& inst, std::span<const PointId> pts,
                   std::span<const PointId> S) {
    if (g_mode == Mode::Serial || pts.size() < kParallelThreshold)
        return farthest_serial(inst, pts, S);
#ifdef _OPENMP
    ArgResult best;
    inst.add_evals(pts.size() * S.size());
    const long n = static_cast<long>(pts.size());
#pragma omp parallel
    {
        ArgResult local;
#pragma omp for schedule(static) nowait
        for (long i = 0; i < n; ++i) {
            PointId p = pts[i];
            double d = point_to_set(inst, p, S);
            if (!local.valid || d > local.dist || (d == local.dist && p < local.id)) {
                local.id = p;
                local.dist = d;
                local.valid = true;
            }
        }
        // (dist, id) is a total order with a unique optimum, so the combine
        // order across threads cannot change the result.
#pragma omp critical
        {
            if (local.valid && (!best.valid || local.dist > best.dist ||
                                (local.dist == best.dist && local.id < best.id)))
                best = local;
        }
    }
    return best;
#else
    return farthest_serial(inst, pts, S);
#endif
}

double min_pairwise_serial(const MetricInstance& inst, std::span<const PointId> S) {
    if (S.size() < 2) return kInf;
    inst.add_evals(S.size() * (S.size() - 1) / 2);
    double best = kInf;
    for (std::size_t i = 0; i < S.size(); ++i)
        for (std::size_t j = i + 1; j < S.size(); ++j) {
            double d = inst.dist_fast(S[i], S[j]);
            if (d < best) best = d;
        }
    return best;
}

double min_pairwise(const MetricInstance& inst, std::span<const PointId> S) {
    return min_pairwise_serial(inst, S);
}

bool dominates(const MetricInstance& inst, std::span<const PointId> pts,
               std::span<const PointId> S, double r) {
    return cost(inst, pts, S) <= r;
}

}  // namespace kcc::kern
