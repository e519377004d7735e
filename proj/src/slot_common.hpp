#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kcc/snapshot.hpp"

namespace kcc::detail {

inline void grow_tracking(std::vector<std::int32_t>& slot_of, PointId p) {
    if (slot_of.size() <= p) slot_of.resize(static_cast<std::size_t>(p) + 1, -1);
}

inline void add_member(std::vector<Slot>& slots, std::vector<std::int32_t>& slot_of, int j,
                       PointId p) {
    auto& m = slots[j].members;
    m.insert(std::lower_bound(m.begin(), m.end(), p), p);
    grow_tracking(slot_of, p);
    slot_of[p] = j;
}

inline void remove_member(std::vector<Slot>& slots, std::vector<std::int32_t>& slot_of, int j,
                          PointId p) {
    auto& m = slots[j].members;
    auto it = std::lower_bound(m.begin(), m.end(), p);
    if (it != m.end() && *it == p) m.erase(it);
    slot_of[p] = -1;
}

inline void move_member(std::vector<Slot>& slots, std::vector<std::int32_t>& slot_of, int from,
                        int to, PointId p) {
    if (from == to) return;
    remove_member(slots, slot_of, from, p);
    add_member(slots, slot_of, to, p);
}

inline std::vector<PointId> center_list(const std::vector<Slot>& slots) {
    std::vector<PointId> out;
    out.reserve(slots.size());
    for (const Slot& s : slots)
        if (s.center) out.push_back(*s.center);
    return out;
}

}  // namespace kcc::detail
