#pragma once

#include <span>

#include "kcc/metric.hpp"

namespace kcc::kern {

enum class Mode { Serial, Parallel };

void set_mode(Mode m);
Mode mode();
// True when the Parallel mode actually fans out (compiled with OpenMP).
bool parallel_available();

// All kernels evaluate every candidate pair (no early exits), so the distance
// eval counter advances identically in both modes and across thread counts.
// Arg reductions use the total order (value, id), which has a unique optimum,
// so results are exact matches between modes.

// min over S of dist(p, .); +inf for empty S.
double dist_to_set(const MetricInstance& inst, PointId p, std::span<const PointId> S);

// max over pts of dist_to_set; 0 for empty pts, +inf if S empty and pts not.
double cost(const MetricInstance& inst, std::span<const PointId> pts, std::span<const PointId> S);

struct ArgResult {
    PointId id = 0;
    double dist = 0;
    bool valid = false;
};

// Argmax of dist_to_set over pts, ties by lowest id.
ArgResult farthest(const MetricInstance& inst, std::span<const PointId> pts,
                   std::span<const PointId> S);

// Minimum pairwise distance within S; +inf when |S| < 2.
double min_pairwise(const MetricInstance& inst, std::span<const PointId> S);

// cost(pts, S) <= r, evaluated without short-circuiting.
bool dominates(const MetricInstance& inst, std::span<const PointId> pts,
               std::span<const PointId> S, double r);

// Serial reference implementations, kept callable for equivalence tests and
// the benchmark regardless of the active mode.
double dist_to_set_serial(const MetricInstance& inst, PointId p, std::span<const PointId> S);
double cost_serial(const MetricInstance& inst, std::span<const PointId> pts,
                   std::span<const PointId> S);
ArgResult farthest_serial(const MetricInstance& inst, std::span<const PointId> pts,
                          std::span<const PointId> S);
double min_pairwise_serial(const MetricInstance& inst, std::span<const PointId> S);

}  // namespace kcc::kern
