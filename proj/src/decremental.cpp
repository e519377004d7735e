#include "kcc/decremental.hpp"

#include <algorithm>
#include <deque>

#include "kcc/errors.hpp"
#include "kcc/kernels.hpp"
#include "kcc/static_kcenter.hpp"
#include "slot_common.hpp"

namespace kcc {

Decremental::Decremental(MetricInstance& inst, int k) : m_(inst), k_(k) {
    if (k < 1) throw IllegalState("k must be at least 1");
    if (m_.n_live() > static_cast<std::size_t>(k_)) activate_();
}

Decremental::Decremental(MetricInstance& inst, int k, double r_hat, std::vector<Slot> slots)
    : m_(inst), k_(k), degenerate_(false), r_hat_(r_hat), slots_(std::move(slots)) {
    if (k < 1) throw IllegalState("k must be at least 1");
    if (slots_.size() != static_cast<std::size_t>(k_))
        throw IllegalState("restore: slot count does not match k");
    slot_of_.assign(m_.universe(), -1);
    for (int j = 0; j < k_; ++j) {
        const Slot& s = slots_[j];
        for (PointId q : s.members) {
            if (!m_.present(q)) throw IllegalState("restore: member not present");
            if (slot_of_[q] != -1) throw IllegalState("restore: overlapping membership");
            slot_of_[q] = j;
        }
        if (s.center) {
            if (!std::binary_search(s.members.begin(), s.members.end(), *s.center))
                throw IllegalState("restore: center not a member of its cluster");
        }
    }
    for (PointId q : m_.live())
        if (slot_of_[q] == -1) throw IllegalState("restore: live point not in any cluster");
}

std::vector<PointId> Decremental::centers_() const { return detail::center_list(slots_); }

void Decremental::to_degenerate_() {
    degenerate_ = true;
    slots_.clear();
    std::fill(slot_of_.begin(), slot_of_.end(), -1);
}

void Decremental::activate_() {
    auto hs = hochbaum_shmoys(m_, k_);
    std::vector<PointId> S = hs.centers;
    double r1 = hs.radius;
    auto D = sorted_distinct_distances(m_);
    auto it = std::lower_bound(D.begin(), D.end(), r1);
    if (it == D.end() || *it != r1) throw IllegalState("initial radius is not a realized distance");
    std::size_t idx = static_cast<std::size_t>(it - D.begin());

    std::vector<char> in_S(m_.universe(), 0);
    for (PointId c : S) in_S[c] = 1;
    long guard = 0;
    while (static_cast<int>(S.size()) < k_) {
        bool found = false;
        for (PointId q : m_.live()) {
            if (in_S[q]) continue;
            if (kern::dist_to_set(m_, q, S) >= r1) {
                S.push_back(q);
                in_S[q] = 1;
                found = true;
                break;
            }
        }
        if (!found) {
            if (idx == 0) throw IllegalState("ran out of candidate radii while growing centers");
            r1 = D[--idx];
        }
        if (++guard > 1000000) throw IllegalState("preprocessing failed to fill centers");
    }

    r_hat_ = kern::cost(m_, m_.live(), S);
    degenerate_ = false;
    slots_.assign(k_, Slot{});
    slot_of_.assign(m_.universe(), -1);
    for (int j = 0; j < k_; ++j) {
        slots_[j].center = S[j];
        slots_[j].state = ClusterState::Regular;
        detail::add_member(slots_, slot_of_, j, S[j]);
    }
    for (PointId q : m_.live()) {
        if (in_S[q]) continue;
        int target = -1;
        for (int j = 0; j < k_; ++j) {
            if (m_.distance(q, *slots_[j].center) <= r_hat_) {
                target = j;
                break;
            }
        }
        if (target < 0) throw IllegalState("preprocessing left a point uncovered");
        detail::add_member(slots_, slot_of_, target, q);
    }
}

void Decremental::regulating_op_() {
    auto C = centers_();
    double cost = kern::cost(m_, m_.live(), C);
    if (cost <= r_hat_) {
        for (Slot& s : slots_) s.state = ClusterState::Regular;
        r_hat_ = cost;
    }
    for (Slot& s : slots_) {
        if (!s.center) continue;
        bool covered = true;
        for (PointId q : s.members) {
            if (m_.distance(q, *s.center) > r_hat_) {
                covered = false;
                break;
            }
        }
        if (covered) s.state = ClusterState::Regular;
    }
    for (PointId q : m_.live()) {
        int j = slot_of_[q];
        const Slot& own = slots_[j];
        double dq = own.center ? m_.distance(q, *own.center) : kInf;
        if (dq <= r_hat_) continue;
        int target = -1;
        for (int u = 0; u < k_; ++u) {
            const Slot& su = slots_[u];
            if (u == j || !su.center || su.state != ClusterState::Regular) continue;
            if (m_.distance(q, *su.center) <= r_hat_) {
                target = u;
                break;
            }
        }
        if (target >= 0) detail::move_member(slots_, slot_of_, j, target, q);
    }
}

std::optional<Decremental::Sequence> Decremental::find_sequence_(int n) const {
    const double r = r_hat_;
    auto C = centers_();

    // Clusters reachable through a point, tried in ascending center id.
    std::vector<std::pair<PointId, int>> cslots;
    for (int j = 0; j < k_; ++j) {
        const Slot& s = slots_[j];
        if (s.center) cslots.emplace_back(*s.center, j);
    }
    std::sort(cslots.begin(), cslots.end());

    std::vector<char> vis_pt(m_.universe(), 0);
    std::vector<char> vis_slot(slots_.size(), 0);
    std::vector<int> rev_slots;
    std::vector<PointId> rev_pts;

    auto dfs = [&](auto&& self, PointId q) -> bool {
        if (vis_pt[q]) return false;
        vis_pt[q] = 1;
        if (kern::dist_to_set(m_, q, C) > r) {
            rev_pts.push_back(q);
            return true;
        }
        for (auto [cid, t] : cslots) {
            if (vis_slot[t]) continue;
            if (m_.distance(q, cid) > r) continue;
            vis_slot[t] = 1;
            for (PointId y : slots_[t].members) {
                if (m_.distance(y, cid) <= r) continue;
                if (self(self, y)) {
                    rev_slots.push_back(t);
                    rev_pts.push_back(q);
                    return true;
                }
            }
        }
        return false;
    };

    for (PointId p : slots_[n].members) {
        if (dfs(dfs, p)) {
            Sequence seq;
            seq.slot_chain.push_back(n);
            for (auto it = rev_slots.rbegin(); it != rev_slots.rend(); ++it)
                seq.slot_chain.push_back(*it);
            for (auto it = rev_pts.rbegin(); it != rev_pts.rend(); ++it)
                seq.points.push_back(*it);
            return seq;
        }
    }
    return std::nullopt;
}

void Decremental::reassigning_op_(std::vector<PointId> seed) {
    const double r = r_hat_;
    std::deque<PointId> queue(seed.begin(), seed.end());
    std::vector<char> queued(m_.universe(), 0);
    for (PointId q : seed) queued[q] = 1;

    long guard = 0;
    while (!queue.empty()) {
        if (++guard > 10 * static_cast<long>(m_.universe()) + 100)
            throw IllegalState("reassignment failed to settle");
        PointId x = queue.front();
        queue.pop_front();
        queued[x] = 0;
        int from = slot_of_[x];
        int target = -1;
        for (int u = 0; u < k_; ++u) {
            const Slot& su = slots_[u];
            if (!su.center) continue;
            if (m_.distance(x, *su.center) <= r) {
                target = u;
                break;
            }
        }
        if (target < 0) throw IllegalState("reassignment found no covering center");
        detail::move_member(slots_, slot_of_, from, target, x);
        slots_[target].state = ClusterState::Regular;
        PointId ct = *slots_[target].center;
        for (PointId y : slots_[target].members) {
            if (queued[y]) continue;
            if (m_.distance(y, ct) > r) {
                queue.push_back(y);
                queued[y] = 1;
            }
        }
    }
}

void Decremental::insert(PointId) {
    throw UnsupportedOperation("decremental store does not accept insertions");
}

void Decremental::erase(PointId p) {
    if (degenerate_) return;
    if (m_.n_live() == static_cast<std::size_t>(k_)) {
        to_degenerate_();
        return;
    }
    int j = slot_of_[p];
    if (j < 0) throw IllegalState("deleted point is not tracked");
    if (!slots_[j].center || *slots_[j].center != p) {
        detail::remove_member(slots_, slot_of_, j, p);
        regulating_op_();
        return;
    }

    slots_[j].center.reset();
    detail::remove_member(slots_, slot_of_, j, p);
    slots_[j].state = ClusterState::Zombie;

    bool replaced = false;
    {
        auto C = centers_();
        for (PointId cand : slots_[j].members) {
            if (kern::dist_to_set(m_, cand, C) > r_hat_) {
                slots_[j].center = cand;
                slots_[j].state = ClusterState::Zombie;
                replaced = true;
                break;
            }
        }
    }

    if (!replaced) {
        if (auto seq = find_sequence_(j)) {
            const auto& chain = seq->slot_chain;
            const std::size_t l = chain.size();
            std::vector<PointId> old_center(l, 0);
            for (std::size_t t = 1; t < l; ++t) old_center[t] = *slots_[chain[t]].center;
            for (std::size_t t = 0; t + 1 < l; ++t) {
                PointId c = old_center[t + 1];
                detail::move_member(slots_, slot_of_, chain[t + 1], chain[t], c);
                slots_[chain[t]].center = c;
                slots_[chain[t]].state = ClusterState::Zombie;
            }
            slots_[chain[l - 1]].center = seq->points.back();
            slots_[chain[l - 1]].state = ClusterState::Zombie;
            replaced = true;
        }
    }

    if (!replaced) {
        reassigning_op_(slots_[j].members);
        auto C = centers_();
        auto far = kern::farthest(m_, m_.live(), C);
        if (!far.valid) throw IllegalState("replacement found no candidate point");
        detail::move_member(slots_, slot_of_, slot_of_[far.id], j, far.id);
        slots_[j].center = far.id;
        slots_[j].state = ClusterState::Regular;
    }

    regulating_op_();
}

Snapshot Decremental::snapshot() const {
    Snapshot s;
    s.algo = Algo::Decremental;
    s.k = k_;
    s.present = m_.live();
    if (degenerate_) {
        s.degenerate = true;
        for (PointId p : m_.live())
            s.slots.push_back(Slot{p, ClusterState::Regular, {p}});
        return s;
    }
    s.degenerate = false;
    s.has_level = false;
    s.radius = r_hat_;
    s.radius_prev = r_hat_;
    s.slots = slots_;
    return s;
}

}  // namespace kcc
