#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kcc/engine.hpp"

namespace kcc {

// Deletion-only k-center with worst-case recourse 1 per deletion.
//
// Keeps one continuous radius r_hat that only ever decreases; cluster states
// are Regular or Zombie (no merged state). Insertion is rejected after the
// initial point set is frozen.
class Decremental final : public Engine {
  public:
    Decremental(MetricInstance& inst, int k);

    // Restores a captured non-degenerate state; used by replay and tests.
    Decremental(MetricInstance& inst, int k, double r_hat, std::vector<Slot> slots);

    Algo algo() const override { return Algo::Decremental; }
    void insert(PointId p) override;
    void erase(PointId p) override;
    Snapshot snapshot() const override;

    bool degenerate() const { return degenerate_; }
    double r_hat() const { return r_hat_; }

  private:
    void activate_();
    void to_degenerate_();

    void regulating_op_();
    void reassigning_op_(std::vector<PointId> seed);

    struct Sequence {
        std::vector<int> slot_chain;
        std::vector<PointId> points;
    };
    std::optional<Sequence> find_sequence_(int n) const;

    std::vector<PointId> centers_() const;

    MetricInstance& m_;
    int k_;
    bool degenerate_ = true;
    double r_hat_ = 0.0;
    std::vector<Slot> slots_;
    std::vector<std::int32_t> slot_of_;
};

}  // namespace kcc
