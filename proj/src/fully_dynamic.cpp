#include "kcc/fully_dynamic.hpp"

#include <algorithm>
#include <array>
#include <deque>

#include "kcc/errors.hpp"
#include "kcc/kernels.hpp"
#include "kcc/static_kcenter.hpp"
#include "slot_common.hpp"

namespace kcc {
namespace {

constexpr int kPow5Cap = 400;

const std::array<double, kPow5Cap + 1>& pow5_table() {
    static const auto table = [] {
        std::array<double, kPow5Cap + 1> a{};
        a[0] = 1.0;
        for (int i = 1; i <= kPow5Cap; ++i) a[i] = a[i - 1] * 5.0;
        return a;
    }();
    return table;
}

}  // namespace

FullyDynamic::FullyDynamic(MetricInstance& inst, int k) : m_(inst), k_(k) {
    if (k < 1) throw IllegalState("k must be at least 1");
    if (m_.n_live() > static_cast<std::size_t>(k_)) activate_();
}

FullyDynamic::FullyDynamic(MetricInstance& inst, int k, long delta, double base_r,
                           std::vector<Slot> slots)
    : m_(inst), k_(k), degenerate_(false), delta_(delta), base_r_(base_r),
      slots_(std::move(slots)) {
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

double FullyDynamic::radius_at(long level) const {
    const auto& t = pow5_table();
    if (level >= 0) {
        if (level > kPow5Cap) return kInf;
        return base_r_ * t[level];
    }
    long m = -level;
    if (m > kPow5Cap) return 0.0;
    return base_r_ / t[m];
}

std::vector<PointId> FullyDynamic::centers_() const { return detail::center_list(slots_); }

void FullyDynamic::to_degenerate_() {
    degenerate_ = true;
    slots_.clear();
    std::fill(slot_of_.begin(), slot_of_.end(), -1);
}

void FullyDynamic::activate_() {
    auto hs = hochbaum_shmoys(m_, k_);
    std::vector<PointId> S = hs.centers;
    double r = hs.radius;
    std::vector<char> in_S(m_.universe(), 0);
    for (PointId c : S) in_S[c] = 1;

    long guard = 0;
    while (static_cast<int>(S.size()) < k_) {
        bool found = false;
        for (PointId q : m_.live()) {
            if (in_S[q]) continue;
            if (kern::dist_to_set(m_, q, S) > r / 5.0) {
                S.push_back(q);
                in_S[q] = 1;
                found = true;
                break;
            }
        }
        if (found) continue;
        if (r == 0.0) {
            for (PointId q : m_.live()) {
                if (in_S[q]) continue;
                S.push_back(q);
                in_S[q] = 1;
                if (static_cast<int>(S.size()) == k_) break;
            }
        } else {
            r /= 5.0;
            if (++guard > 100000) throw IllegalState("preprocessing failed to fill centers");
        }
    }

    double c0 = kern::cost(m_, m_.live(), S);
    if (c0 > 0.0) {
        while (c0 <= r / 5.0) r /= 5.0;
    }

    base_r_ = r;
    delta_ = 0;
    degenerate_ = false;
    slots_.assign(k_, Slot{});
    slot_of_.assign(m_.universe(), -1);
    for (int j = 0; j < k_; ++j) {
        slots_[j].center = S[j];
        slots_[j].state = ClusterState::Regular;
        detail::add_member(slots_, slot_of_, j, S[j]);
    }
    const double r0 = radius_at(0);
    for (PointId q : m_.live()) {
        if (in_S[q]) continue;
        int target = -1;
        for (int j = 0; j < k_; ++j) {
            if (m_.distance(q, *slots_[j].center) <= r0) {
                target = j;
                break;
            }
        }
        if (target < 0) throw IllegalState("preprocessing left a point uncovered");
        detail::add_member(slots_, slot_of_, target, q);
    }
}

int FullyDynamic::nearest_slot_(PointId p, bool skip_zombies, double* dist_out) const {
    int best = -1;
    double bd = kInf;
    for (int j = 0; j < static_cast<int>(slots_.size()); ++j) {
        const Slot& s = slots_[j];
        if (!s.center) continue;
        if (skip_zombies && s.state == ClusterState::Zombie) continue;
        double d = m_.distance(p, *s.center);
        if (d < bd) {
            bd = d;
            best = j;
        }
    }
    *dist_out = bd;
    return best;
}

int FullyDynamic::nearest_zombie_slot_(PointId p, double* dist_out) const {
    int best = -1;
    double bd = kInf;
    PointId bid = 0;
    for (int j = 0; j < static_cast<int>(slots_.size()); ++j) {
        const Slot& s = slots_[j];
        if (!s.center || s.state != ClusterState::Zombie) continue;
        double d = m_.distance(p, *s.center);
        if (best < 0 || d < bd || (d == bd && *s.center < bid)) {
            bd = d;
            best = j;
            bid = *s.center;
        }
    }
    *dist_out = bd;
    return best;
}

std::pair<int, int> FullyDynamic::ext_pair_() const {
    const double r = radius_at(delta_);
    for (int s = 0; s < k_; ++s) {
        if (!slots_[s].center) continue;
        for (int i = 0; i < k_; ++i) {
            if (i == s || !slots_[i].center) continue;
            if (m_.distance(*slots_[s].center, *slots_[i].center) <= r) return {s, i};
        }
    }
    throw IllegalState("no center pair within merge radius");
}

void FullyDynamic::merge_slots_(int i, int s) {
    auto members = slots_[i].members;
    for (PointId q : members) detail::move_member(slots_, slot_of_, i, s, q);
    slots_[i].center.reset();
    slots_[i].state = ClusterState::Regular;
    slots_[s].state = ClusterState::Extended;
}

void FullyDynamic::increasing_op_() {
    for (Slot& s : slots_) s.state = ClusterState::Regular;
    auto C = centers_();
    double mp = kern::min_pairwise(m_, C);
    double cost = kern::cost(m_, m_.live(), C);
    long guard = 0;
    while (mp > radius_at(delta_) && cost > radius_at(delta_)) {
        ++delta_;
        if (++guard > 10000) throw IllegalState("level increase diverged");
    }
}

void FullyDynamic::decreasing_op_() {
    auto C = centers_();
    double cost = kern::cost(m_, m_.live(), C);
    if (cost <= radius_at(delta_)) {
        for (Slot& s : slots_) s.state = ClusterState::Regular;
        if (cost > 0.0) {
            while (cost <= radius_at(delta_ - 1)) --delta_;
        }
    }
    const double r = radius_at(delta_);
    for (Slot& s : slots_) {
        if (!s.center) continue;
        bool covered = true;
        for (PointId q : s.members) {
            if (m_.distance(q, *s.center) > r) {
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
        if (dq <= r) continue;
        int target = -1;
        for (int u = 0; u < k_; ++u) {
            const Slot& su = slots_[u];
            if (u == j || !su.center || su.state == ClusterState::Zombie) continue;
            if (m_.distance(q, *su.center) <= r) {
                target = u;
                break;
            }
        }
        if (target >= 0) detail::move_member(slots_, slot_of_, j, target, q);
    }
}

std::optional<FullyDynamic::Sequence> FullyDynamic::find_sequence_(int n) const {
    const double r = radius_at(delta_);
    auto C = centers_();

    // Zombie clusters reachable through a point, tried in ascending center id.
    std::vector<std::pair<PointId, int>> zslots;
    for (int j = 0; j < k_; ++j) {
        const Slot& s = slots_[j];
        if (s.center && s.state == ClusterState::Zombie) zslots.emplace_back(*s.center, j);
    }
    std::sort(zslots.begin(), zslots.end());

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
        for (auto [cid, t] : zslots) {
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

void FullyDynamic::reassigning_op_(std::vector<PointId> seed) {
    const double r = radius_at(delta_);
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

void FullyDynamic::replace_(int n) {
    const double r = radius_at(delta_);
    {
        auto C = centers_();
        for (PointId cand : slots_[n].members) {
            if (kern::dist_to_set(m_, cand, C) > r) {
                slots_[n].center = cand;
                slots_[n].state = ClusterState::Zombie;
                return;
            }
        }
    }

    if (auto seq = find_sequence_(n)) {
        const auto& chain = seq->slot_chain;
        const std::size_t l = chain.size();
        std::vector<PointId> old_center(l, 0);
        for (std::size_t j = 1; j < l; ++j) old_center[j] = *slots_[chain[j]].center;
        for (std::size_t j = 0; j + 1 < l; ++j) {
            PointId c = old_center[j + 1];
            detail::move_member(slots_, slot_of_, chain[j + 1], chain[j], c);
            slots_[chain[j]].center = c;
            slots_[chain[j]].state = ClusterState::Zombie;
        }
        slots_[chain[l - 1]].center = seq->points.back();
        slots_[chain[l - 1]].state = ClusterState::Zombie;
        return;
    }

    reassigning_op_(slots_[n].members);
    auto C = centers_();
    auto far = kern::farthest(m_, m_.live(), C);
    if (!far.valid) throw IllegalState("replacement found no candidate point");
    detail::move_member(slots_, slot_of_, slot_of_[far.id], n, far.id);
    slots_[n].center = far.id;
    slots_[n].state = ClusterState::Regular;
}

void FullyDynamic::insert(PointId p) {
    detail::grow_tracking(slot_of_, p);
    if (degenerate_) {
        if (m_.n_live() <= static_cast<std::size_t>(k_)) return;
        activate_();
        return;
    }

    const double r = radius_at(delta_);
    double dnz;
    int jnz = nearest_slot_(p, /*skip_zombies=*/true, &dnz);
    if (jnz >= 0 && dnz <= r) {
        detail::add_member(slots_, slot_of_, jnz, p);
        decreasing_op_();
        return;
    }

    double mp = kern::min_pairwise(m_, centers_());
    if (mp <= r) {
        auto [s, i] = ext_pair_();
        merge_slots_(i, s);
        double dS;
        nearest_slot_(p, /*skip_zombies=*/false, &dS);
        if (dS <= r) {
            double dz;
            int z = nearest_zombie_slot_(p, &dz);
            if (z < 0 || dz != dS) throw IllegalState("covered insert saw no nearest zombie");
            PointId cz = *slots_[z].center;
            std::vector<PointId> moving;
            for (PointId q : slots_[z].members)
                if (m_.distance(q, cz) <= r) moving.push_back(q);
            for (PointId q : moving) detail::move_member(slots_, slot_of_, z, i, q);
            detail::add_member(slots_, slot_of_, i, p);
            slots_[i].center = cz;
            slots_[i].state = ClusterState::Regular;
            slots_[z].center.reset();
            slots_[z].state = ClusterState::Zombie;
            replace_(z);
        } else {
            detail::add_member(slots_, slot_of_, i, p);
            slots_[i].center = p;
            slots_[i].state = ClusterState::Regular;
        }
    } else {
        increasing_op_();
        const double r1 = radius_at(delta_);
        auto far = kern::farthest(m_, m_.live(), centers_());
        if (far.valid && far.dist > r1) {
            if (far.id != p) throw IllegalState("uncovered point after level increase is not new");
            auto [s, i] = ext_pair_();
            merge_slots_(i, s);
            detail::add_member(slots_, slot_of_, i, p);
            slots_[i].center = p;
            slots_[i].state = ClusterState::Regular;
        } else {
            double dd;
            int j = nearest_slot_(p, /*skip_zombies=*/false, &dd);
            if (j < 0) throw IllegalState("no cluster available for covered insert");
            detail::add_member(slots_, slot_of_, j, p);
        }
    }
    decreasing_op_();
}

void FullyDynamic::erase(PointId p) {
    if (degenerate_) return;
    if (m_.n_live() == static_cast<std::size_t>(k_)) {
        to_degenerate_();
        return;
    }
    int j = slot_of_[p];
    if (j < 0) throw IllegalState("deleted point is not tracked");
    if (!slots_[j].center || *slots_[j].center != p) {
        detail::remove_member(slots_, slot_of_, j, p);
        decreasing_op_();
        return;
    }
    slots_[j].center.reset();
    detail::remove_member(slots_, slot_of_, j, p);
    slots_[j].state = ClusterState::Zombie;
    decreasing_op_();
    replace_(j);
    decreasing_op_();
}

Snapshot FullyDynamic::snapshot() const {
    Snapshot s;
    s.algo = Algo::Fully;
    s.k = k_;
    s.present = m_.live();
    if (degenerate_) {
        s.degenerate = true;
        for (PointId p : m_.live())
            s.slots.push_back(Slot{p, ClusterState::Regular, {p}});
        return s;
    }
    s.degenerate = false;
    s.has_level = true;
    s.level = delta_;
    s.radius = radius_at(delta_);
    s.radius_prev = radius_at(delta_ - 1);
    s.slots = slots_;
    return s;
}

}  // namespace kcc
