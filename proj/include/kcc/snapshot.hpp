#pragma once

#include <optional>
#include <vector>

#include "kcc/metric.hpp"

namespace kcc {

enum class Algo { Fully, Decremental, Incremental };

enum class ClusterState { Regular, Extended, Zombie };

// One center slot.  The slot index is the algorithms' ordering of S; a slot
// may be transiently centerless mid-update but never in a snapshot.
struct Slot {
    std::optional<PointId> center;
    ClusterState state = ClusterState::Regular;
    std::vector<PointId> members;  // sorted ascending
};

struct Snapshot {
    Algo algo = Algo::Fully;
    bool degenerate = true;
    int k = 0;
    bool has_level = false;
    long level = 0;
    double radius = 0;       // r^(delta) or r_hat; meaningful when not degenerate
    double radius_prev = 0;  // r^(delta-1) (decremental: r_hat again)
    std::vector<Slot> slots;
    std::vector<PointId> s_init;  // incremental only
    std::vector<PointId> present;

    std::vector<PointId> centers() const;
    std::size_t count_state(ClusterState s) const;
};

// |prev ∆ next| / 2, rounded up (set semantics; slot order irrelevant).
int recourse(std::vector<PointId> prev, std::vector<PointId> next);

}  // namespace kcc
