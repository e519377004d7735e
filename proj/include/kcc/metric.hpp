#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "kcc/errors.hpp"

namespace kcc {

using PointId = std::uint32_t;

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Backend { Euclidean, Matrix };

// Position record that stays valid after the point leaves P.  Euclidean
// backend stores coordinates, matrix backend the row index.
struct SpaceRef {
    std::vector<double> coords;
    long row = -1;
};

// Live point set over either backend.  Ids are dense and stable: a name maps
// to the same id for the whole run, and presence toggles on insert/erase.
// Coordinate records are never freed, so distances to departed points stay
// computable through refs.
class MetricInstance {
  public:
    static MetricInstance euclidean(std::size_t dim);
    // n x n row-major table; validates zero diagonal, symmetry and the
    // triangle inequality over all triples.
    static MetricInstance matrix(std::vector<double> table, std::size_t n);

    Backend backend() const { return backend_; }
    std::size_t dim() const { return dim_; }
    // Ids ever issued; safe bound for PointId-indexed tables.
    std::size_t universe() const { return names_.size(); }
    std::size_t matrix_rows() const { return matrix_n_; }

    // Euclidean insert.  Reviving a departed name requires identical
    // coordinates.
    PointId add_point(const std::string& name, const std::vector<double>& coords);
    // Matrix insert; row must be inside the universe.
    PointId add_row(const std::string& name, long row);
    void erase(PointId id);

    bool present(PointId id) const { return id < present_.size() && present_[id]; }
    bool known(const std::string& name) const { return ids_.count(name) != 0; }
    PointId id_of(const std::string& name) const;
    const std::string& name_of(PointId id) const { return names_[id]; }
    std::size_t n_live() const { return live_.size(); }
    // Ascending id order.
    const std::vector<PointId>& live() const { return live_; }

    // Checked + counted distance between present points.
    double distance(PointId a, PointId b) const;
    // Uncounted primitive used by kernels; callers account evals in bulk.
    double dist_fast(PointId a, PointId b) const;
    double dist_to_ref(PointId a, const SpaceRef& ref) const;
    SpaceRef ref_of(PointId id) const;

    void add_evals(std::uint64_t n) const { evals_ += n; }
    std::uint64_t dist_evals() const { return evals_; }

  private:
    MetricInstance() = default;

    Backend backend_ = Backend::Euclidean;
    std::size_t dim_ = 0;
    std::vector<double> table_;
    std::size_t matrix_n_ = 0;

    std::unordered_map<std::string, PointId> ids_;
    std::vector<std::string> names_;
    std::vector<double> coords_;  // flat, dim_ per point
    std::vector<long> rows_;
    std::vector<char> present_;
    std::vector<PointId> live_;
    mutable std::uint64_t evals_ = 0;
};

// Checked set-level ops.  These validate ids and delegate to the kernels.
double dist_to_set(const MetricInstance& inst, PointId p, const std::vector<PointId>& S);
double solution_cost(const MetricInstance& inst, const std::vector<PointId>& S);
double min_pairwise(const MetricInstance& inst, const std::vector<PointId>& S);
std::vector<double> sorted_distinct_distances(const MetricInstance& inst);

}  // namespace kcc
