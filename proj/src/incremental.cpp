#include "kcc/incremental.hpp"

#include <algorithm>
#include <cmath>

#include "kcc/errors.hpp"
#include "kcc/kernels.hpp"
#include "kcc/static_kcenter.hpp"

namespace kcc {

Incremental::Incremental(MetricInstance& inst, int k) : m_(inst), k_(k) {
    if (k < 1) throw IllegalState("k must be at least 1");
    if (m_.n_live() > static_cast<std::size_t>(k_)) activate_();
}

Incremental::Incremental(MetricInstance& inst, int k, long delta, double base_r,
                         std::vector<PointId> centers, std::vector<PointId> s_init)
    : m_(inst), k_(k), degenerate_(false), delta_(delta), base_r_(base_r),
      S_(std::move(centers)), s_init_(std::move(s_init)) {
    if (k < 1) throw IllegalState("k must be at least 1");
    if (S_.size() != static_cast<std::size_t>(k_))
        throw IllegalState("restore: center count does not match k");
    for (PointId c : S_)
        if (!m_.present(c)) throw IllegalState("restore: center not present");
    for (PointId c : s_init_)
        if (!m_.present(c)) throw IllegalState("restore: recorded center not present");
    if (s_init_.empty()) s_init_ = S_;
}

double Incremental::radius_at(long level) const {
    return std::ldexp(base_r_, static_cast<int>(level));
}

void Incremental::activate_() {
    auto hs = hochbaum_shmoys(m_, k_);
    S_ = hs.centers;
    double r = hs.radius;
    std::vector<char> in_S(m_.universe(), 0);
    for (PointId c : S_) in_S[c] = 1;

    long guard = 0;
    while (static_cast<int>(S_.size()) < k_) {
        bool found = false;
        for (PointId q : m_.live()) {
            if (in_S[q]) continue;
            if (kern::dist_to_set(m_, q, S_) > r / 2.0) {
                S_.push_back(q);
                in_S[q] = 1;
                found = true;
                break;
            }
        }
        if (found) continue;
        if (r == 0.0) {
            for (PointId q : m_.live()) {
                if (in_S[q]) continue;
                S_.push_back(q);
                in_S[q] = 1;
                if (static_cast<int>(S_.size()) == k_) break;
            }
        } else {
            r /= 2.0;
            if (++guard > 100000) throw IllegalState("preprocessing failed to fill centers");
        }
    }

    double c0 = kern::cost(m_, m_.live(), S_);
    if (c0 > 0.0) {
        while (c0 <= r / 2.0) r /= 2.0;
    }

    base_r_ = r;
    delta_ = 0;
    degenerate_ = false;
    s_init_ = S_;
}

void Incremental::gonzalez_op_() {
    S_ = gonzalez_subset(m_, S_, static_cast<int>(S_.size()), S_[0]);
    s_init_ = S_;
}

std::size_t Incremental::choose_slot_() const {
    double dmin = kInf;
    std::size_t best = 0;
    bool found = false;
    for (std::size_t a = 0; a + 1 < S_.size(); ++a) {
        for (std::size_t b = a + 1; b < S_.size(); ++b) {
            double d = m_.distance(S_[a], S_[b]);
            if (!found || d < dmin) {
                dmin = d;
                best = b;
                found = true;
            } else if (d == dmin && b > best) {
                best = b;
            }
        }
    }
    if (!found) throw IllegalState("no center pair to collapse");
    return best;
}

void Incremental::insert(PointId p) {
    if (degenerate_) {
        if (m_.n_live() <= static_cast<std::size_t>(k_)) return;
        activate_();
        return;
    }

    double dp = kern::dist_to_set(m_, p, S_);
    if (dp <= radius_at(delta_)) return;

    double mp = kern::min_pairwise(m_, S_);
    if (mp <= radius_at(delta_)) {
        S_[choose_slot_()] = p;
        return;
    }

    long guard = 0;
    while (mp > radius_at(delta_) && dp > radius_at(delta_)) {
        ++delta_;
        if (++guard > 10000) throw IllegalState("level increase diverged");
    }
    gonzalez_op_();
    if (dp <= radius_at(delta_)) return;
    S_[choose_slot_()] = p;
}

void Incremental::erase(PointId) {
    throw UnsupportedOperation("incremental store does not accept deletions");
}

Snapshot Incremental::snapshot() const {
    Snapshot s;
    s.algo = Algo::Incremental;
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
    for (PointId c : S_)
        s.slots.push_back(Slot{c, ClusterState::Regular, {c}});
    s.s_init = s_init_;
    return s;
}

}  // namespace kcc
