#include "kcc/snapshot.hpp"

#include <algorithm>

namespace kcc {

std::vector<PointId> Snapshot::centers() const {
    std::vector<PointId> out;
    out.reserve(slots.size());
    for (const Slot& s : slots)
        if (s.center) out.push_back(*s.center);
    return out;
}

std::size_t Snapshot::count_state(ClusterState st) const {
    std::size_t n = 0;
    for (const Slot& s : slots)
        if (s.center && s.state == st) ++n;
    return n;
}

int recourse(std::vector<PointId> prev, std::vector<PointId> next) {
    std::sort(prev.begin(), prev.end());
    std::sort(next.begin(), next.end());
    std::vector<PointId> sym;
    std::set_symmetric_difference(prev.begin(), prev.end(), next.begin(), next.end(),
                                  std::back_inserter(sym));
    return static_cast<int>((sym.size() + 1) / 2);
}

}  // namespace kcc
