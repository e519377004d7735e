#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kcc/engine.hpp"

namespace kcc {

// Fully dynamic k-center with worst-case recourse 1 per update.
//
// Levels: radius(d) = base_r * 5^d, d may be negative. Cluster states cycle
// Regular -> Extended (merged) -> Zombie (center awaiting replacement evidence).
class FullyDynamic final : public Engine {
  public:
    FullyDynamic(MetricInstance& inst, int k);

    // Restores a captured non-degenerate state; used by replay and tests.
    FullyDynamic(MetricInstance& inst, int k, long delta, double base_r, std::vector<Slot> slots);

    Algo algo() const override { return Algo::Fully; }
    void insert(PointId p) override;
    void erase(PointId p) override;
    Snapshot snapshot() const override;

    bool degenerate() const { return degenerate_; }
    long level() const { return delta_; }
    double base_radius() const { return base_r_; }
    double radius_at(long level) const;

    // Runs the replacement flow on slot n as if its center was just deleted.
    void replace_slot(int n) { replace_(n); }

  private:
    void activate_();
    void to_degenerate_();

    void increasing_op_();
    void decreasing_op_();
    void replace_(int n);
    void reassigning_op_(std::vector<PointId> seed);

    struct Sequence {
        std::vector<int> slot_chain;    // t_1 .. t_l (t_1 = the centerless slot)
        std::vector<PointId> points;    // p_{t_1} .. p_{t_l}
    };
    std::optional<Sequence> find_sequence_(int n) const;

    // Lowest slot whose center minimizes dist(p, center); -1 if none qualifies.
    int nearest_slot_(PointId p, bool skip_zombies, double* dist_out) const;
    // Nearest zombie center, ties by ascending center id.
    int nearest_zombie_slot_(PointId p, double* dist_out) const;
    // Smallest slot s with some partner center within radius, then smallest partner i.
    std::pair<int, int> ext_pair_() const;
    void merge_slots_(int i, int s);

    std::vector<PointId> centers_() const;

    MetricInstance& m_;
    int k_;
    bool degenerate_ = true;
    long delta_ = 0;
    double base_r_ = 0.0;
    std::vector<Slot> slots_;
    std::vector<std::int32_t> slot_of_;
};

}  // namespace kcc
