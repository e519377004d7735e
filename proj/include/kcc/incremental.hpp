#pragma once

#include <cstdint>
#include <vector>

#include "kcc/engine.hpp"

namespace kcc {

// Insertion-only k-center with worst-case recourse 1 per insertion.
//
// Levels double: radius(d) = base_r * 2^d. No cluster bookkeeping; the state
// is the ordered center list S plus the list captured at the last reordering
// (S_init), which the verifier uses for coverage checks. Deletion is rejected.
class Incremental final : public Engine {
  public:
    Incremental(MetricInstance& inst, int k);

    // Restores a captured non-degenerate state; used by replay and tests.
    Incremental(MetricInstance& inst, int k, long delta, double base_r,
                std::vector<PointId> centers, std::vector<PointId> s_init);

    Algo algo() const override { return Algo::Incremental; }
    void insert(PointId p) override;
    void erase(PointId p) override;
    Snapshot snapshot() const override;

    bool degenerate() const { return degenerate_; }
    long level() const { return delta_; }
    double base_radius() const { return base_r_; }
    double radius_at(long level) const;
    const std::vector<PointId>& centers() const { return S_; }

  private:
    void activate_();
    void gonzalez_op_();
    std::size_t choose_slot_() const;

    MetricInstance& m_;
    int k_;
    bool degenerate_ = true;
    long delta_ = 0;
    double base_r_ = 0.0;
    std::vector<PointId> S_;
    std::vector<PointId> s_init_;
};

}  // namespace kcc
