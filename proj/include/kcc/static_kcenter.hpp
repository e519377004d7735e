#pragma once

#include <span>
#include <vector>

#include "kcc/metric.hpp"

namespace kcc {

struct StaticSolution {
    std::vector<PointId> centers;
    double radius = 0;  // solution_cost of centers
};

// Greedy maximal distance-r independent set: scan present points in ascending
// id order, take p iff dist(p, taken) > r.  Maximal, hence also distance-r
// dominating.
std::vector<PointId> maximal_independent_set(const MetricInstance& inst, double r);

// Binary search over the sorted distinct distances for the smallest r with
// |MIS(r)| <= k.  k >= |P| short-circuits to S = P with radius 0.
StaticSolution hochbaum_shmoys(const MetricInstance& inst, int k);

// Farthest-first traversal from seed over the present points, ties ascending
// id.
std::vector<PointId> gonzalez(const MetricInstance& inst, int k, PointId seed);

// Farthest-first traversal restricted to the given universe.
std::vector<PointId> gonzalez_subset(const MetricInstance& inst, std::span<const PointId> universe,
                                     int k, PointId seed);

// Exact R* by enumerating center subsets; guarded to |P| <= 20.
StaticSolution brute_force_opt(const MetricInstance& inst, int k);

}  // namespace kcc
