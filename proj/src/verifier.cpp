#include "kcc/verifier.hpp"

#include <algorithm>

#include "kcc/errors.hpp"
#include "kcc/format.hpp"
#include "kcc/kernels.hpp"
#include "kcc/static_kcenter.hpp"

namespace kcc {
namespace {

constexpr std::size_t kBruteLimit = 16;

struct Bounds {
    double ratio;       // cost / R*
    double radius;      // engine radius / R*
    double inv3;        // cost / engine radius
    double state_reg;   // member-to-center multiples of engine radius, by state
    double state_ext;
    double state_zmb;
};

Bounds bounds_for(Algo a) {
    switch (a) {
        case Algo::Fully:
            return {50.0, 10.0, 5.0, 1.0, 2.0, 5.0};
        case Algo::Decremental:
            return {6.0, 2.0, 3.0, 3.0, 3.0, 3.0};
        case Algo::Incremental:
            return {6.0, 4.0, 2.0, 0.0, 0.0, 0.0};
    }
    throw IllegalState("unknown algorithm");
}

const char* state_name(ClusterState s) {
    switch (s) {
        case ClusterState::Regular:
            return "regular";
        case ClusterState::Extended:
            return "extended";
        case ClusterState::Zombie:
            return "zombie";
    }
    return "?";
}

}  // namespace

const CheckResult* StepVerdict::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

Verifier::Verifier(const MetricInstance& inst, VerifyMode mode) : m_(inst), mode_(mode) {}

void Verifier::clear_instrumentation_() {
    nz_record_.clear();
    reg_record_.clear();
    exempted_.clear();
}

void Verifier::refresh_records_(const Snapshot& cur) {
    nz_record_.resize(cur.slots.size());
    reg_record_.resize(cur.slots.size());
    for (std::size_t j = 0; j < cur.slots.size(); ++j) {
        const Slot& s = cur.slots[j];
        if (!s.center) continue;
        if (s.state != ClusterState::Zombie) nz_record_[j] = m_.ref_of(*s.center);
        if (s.state == ClusterState::Regular) reg_record_[j] = m_.ref_of(*s.center);
    }
}

void Verifier::prime(const Snapshot& snap) {
    prev_ = snap;
    primed_ = true;
    clear_instrumentation_();
    if (!snap.degenerate) refresh_records_(snap);
}

StepVerdict Verifier::step(const Snapshot& cur) {
    if (!primed_) throw IllegalState("verifier was not primed with a baseline snapshot");

    StepVerdict v;
    auto add = [&](const char* name, CheckStatus st, std::string witness = "") {
        if (st == CheckStatus::Fail) v.ok = false;
        v.checks.push_back(CheckResult{name, st, std::move(witness)});
    };
    auto name_or_slot = [&](PointId p) { return m_.name_of(p); };

    auto S = cur.centers();
    v.recourse = recourse(prev_.centers(), S);

    if (cur.degenerate) {
        for (const char* n :
             {"size_k", "recourse_le_1", "partition", "invariant2", "invariant3",
              "zombie_separation", "zombie_monotone", "state_radii", "p2_recent_nonzombie",
              "p2_recent_regular", "s_init_cover", "exempted_centers", "ratio_vs_oracle",
              "ratio_vs_hs"})
            add(n, CheckStatus::Skipped);
        clear_instrumentation_();
        prev_ = cur;
        v.cost = 0.0;
        return v;
    }

    const Algo algo = cur.algo;
    const Bounds B = bounds_for(algo);
    const double r = cur.radius;
    const auto& P = cur.present;

    // Instrumentation first: "most recent" includes the current state.
    if (algo == Algo::Incremental) {
        if (prev_.degenerate) {
            exempted_.clear();
        } else {
            if (cur.level > prev_.level) exempted_.clear();
            auto prev_c = prev_.centers();
            std::sort(prev_c.begin(), prev_c.end());
            auto cur_c = S;
            std::sort(cur_c.begin(), cur_c.end());
            for (PointId c : prev_c) {
                if (!std::binary_search(cur_c.begin(), cur_c.end(), c) &&
                    std::find(exempted_.begin(), exempted_.end(), c) == exempted_.end())
                    exempted_.push_back(c);
            }
        }
    }
    refresh_records_(cur);

    const double cost = kern::cost(m_, P, S);
    v.cost = cost;

    // size_k
    if (S.size() == static_cast<std::size_t>(cur.k))
        add("size_k", CheckStatus::Pass);
    else
        add("size_k", CheckStatus::Fail,
            "center count " + std::to_string(S.size()) + " differs from k=" +
                std::to_string(cur.k));

    // recourse_le_1
    if (v.recourse <= 1)
        add("recourse_le_1", CheckStatus::Pass);
    else
        add("recourse_le_1", CheckStatus::Fail,
            "recourse " + std::to_string(v.recourse) + " exceeds 1");

    // partition (fully and decremental track clusters)
    if (algo == Algo::Incremental) {
        add("partition", CheckStatus::Skipped);
    } else {
        CheckStatus st = CheckStatus::Pass;
        std::string w;
        std::vector<char> seen(m_.universe(), 0);
        std::size_t total = 0;
        for (std::size_t j = 0; j < cur.slots.size() && st == CheckStatus::Pass; ++j) {
            const Slot& s = cur.slots[j];
            if (!s.center) {
                st = CheckStatus::Fail;
                w = "slot " + std::to_string(j) + " has no center";
                break;
            }
            if (!std::binary_search(s.members.begin(), s.members.end(), *s.center)) {
                st = CheckStatus::Fail;
                w = "center " + name_or_slot(*s.center) + " is outside its own cluster " +
                    std::to_string(j);
                break;
            }
            for (PointId q : s.members) {
                if (!m_.present(q)) {
                    st = CheckStatus::Fail;
                    w = "cluster " + std::to_string(j) + " holds absent point " + name_or_slot(q);
                    break;
                }
                if (seen[q]) {
                    st = CheckStatus::Fail;
                    w = "point " + name_or_slot(q) + " is in two clusters";
                    break;
                }
                seen[q] = 1;
                ++total;
            }
        }
        if (st == CheckStatus::Pass && total != P.size()) {
            st = CheckStatus::Fail;
            for (PointId q : P)
                if (!seen[q]) {
                    w = "point " + name_or_slot(q) + " is in no cluster";
                    break;
                }
        }
        add("partition", st, w);
    }

    // invariant2: some p outside S keeps S u {p} independent at the previous radius
    {
        const bool strict = algo != Algo::Decremental;
        const double th = algo == Algo::Decremental ? cur.radius : cur.radius_prev;
        auto sep_ok = [&](double d) { return strict ? d > th : d >= th; };

        CheckStatus st = CheckStatus::Pass;
        std::string w;
        double mp = kInf;
        PointId ma = 0, mb = 0;
        for (std::size_t a = 0; a + 1 < S.size(); ++a)
            for (std::size_t b = a + 1; b < S.size(); ++b) {
                double d = m_.distance(S[a], S[b]);
                if (d < mp) {
                    mp = d;
                    ma = S[a];
                    mb = S[b];
                }
            }
        if (S.size() >= 2 && !sep_ok(mp)) {
            st = CheckStatus::Fail;
            w = "centers " + name_or_slot(ma) + " and " + name_or_slot(mb) + " are " + fmt_g(mp) +
                " apart (threshold " + fmt_g(th) + ")";
        } else {
            std::vector<char> is_c(m_.universe(), 0);
            for (PointId c : S) is_c[c] = 1;
            bool found = false;
            double best = -1.0;
            PointId bp = 0;
            for (PointId q : P) {
                if (is_c[q]) continue;
                double d = kern::dist_to_set(m_, q, S);
                if (sep_ok(d)) {
                    found = true;
                    break;
                }
                if (d > best) {
                    best = d;
                    bp = q;
                }
            }
            if (!found) {
                st = CheckStatus::Fail;
                w = best < 0.0 ? std::string("no point outside the center set")
                               : "every outside point is blocked; farthest is " +
                                     name_or_slot(bp) + " at " + fmt_g(best) + " (threshold " +
                                     fmt_g(th) + ")";
            }
        }
        add("invariant2", st, w);
    }

    // invariant3: cost within the per-algorithm multiple of the engine radius
    {
        double bound = B.inv3 * r;
        if (cost <= bound)
            add("invariant3", CheckStatus::Pass);
        else {
            auto far = kern::farthest(m_, P, S);
            add("invariant3", CheckStatus::Fail,
                "point " + (far.valid ? name_or_slot(far.id) : std::string("?")) + " at " +
                    fmt_g(cost) + " from S exceeds " + fmt_g(bound));
        }
    }

    // zombie_separation: zombie centers clear of every other center
    if (algo != Algo::Fully) {
        add("zombie_separation", CheckStatus::Skipped);
    } else {
        CheckStatus st = CheckStatus::Pass;
        std::string w;
        for (std::size_t j = 0; j < cur.slots.size() && st == CheckStatus::Pass; ++j) {
            const Slot& s = cur.slots[j];
            if (!s.center || s.state != ClusterState::Zombie) continue;
            for (PointId c : S) {
                if (c == *s.center) continue;
                double d = m_.distance(*s.center, c);
                if (d <= r) {
                    st = CheckStatus::Fail;
                    w = "zombie center " + name_or_slot(*s.center) + " is " + fmt_g(d) +
                        " from center " + name_or_slot(c) + " (needs > " + fmt_g(r) + ")";
                    break;
                }
            }
        }
        add("zombie_separation", st, w);
    }

    // zombie_monotone: a zombie cluster gains no point besides its center
    if (algo == Algo::Incremental || prev_.degenerate ||
        prev_.slots.size() != cur.slots.size()) {
        add("zombie_monotone", CheckStatus::Skipped);
    } else {
        CheckStatus st = CheckStatus::Pass;
        std::string w;
        for (std::size_t j = 0; j < cur.slots.size() && st == CheckStatus::Pass; ++j) {
            const Slot& s = cur.slots[j];
            if (!s.center || s.state != ClusterState::Zombie) continue;
            const auto& old = prev_.slots[j].members;
            for (PointId q : s.members) {
                if (q == *s.center) continue;
                if (!std::binary_search(old.begin(), old.end(), q)) {
                    st = CheckStatus::Fail;
                    w = "point " + name_or_slot(q) + " entered zombie cluster " +
                        std::to_string(j);
                    break;
                }
            }
        }
        add("zombie_monotone", st, w);
    }

    // state_radii: member distance to own center bounded per cluster state
    if (algo == Algo::Incremental) {
        add("state_radii", CheckStatus::Skipped);
    } else {
        CheckStatus st = CheckStatus::Pass;
        std::string w;
        for (const Slot& s : cur.slots) {
            if (!s.center) continue;
            double mult = s.state == ClusterState::Regular    ? B.state_reg
                          : s.state == ClusterState::Extended ? B.state_ext
                                                              : B.state_zmb;
            double bound = mult * r;
            for (PointId q : s.members) {
                double d = m_.distance(q, *s.center);
                if (d > bound) {
                    st = CheckStatus::Fail;
                    w = std::string(state_name(s.state)) + " cluster of " +
                        name_or_slot(*s.center) + " holds " + name_or_slot(q) + " at " +
                        fmt_g(d) + " (allowed " + fmt_g(bound) + ")";
                    break;
                }
            }
            if (st == CheckStatus::Fail) break;
        }
        add("state_radii", st, w);
    }

    // p2_recent_nonzombie: members near the slot's last non-zombie center
    if (algo != Algo::Fully) {
        add("p2_recent_nonzombie", CheckStatus::Skipped);
    } else {
        CheckStatus st = CheckStatus::Pass;
        std::string w;
        for (std::size_t j = 0; j < cur.slots.size() && st == CheckStatus::Pass; ++j) {
            const Slot& s = cur.slots[j];
            if (!s.center || j >= nz_record_.size() || !nz_record_[j]) continue;
            double bound = 2.0 * r;
            for (PointId q : s.members) {
                if (q == *s.center) continue;
                double d = m_.dist_to_ref(q, *nz_record_[j]);
                if (d > bound) {
                    st = CheckStatus::Fail;
                    w = "point " + name_or_slot(q) + " is " + fmt_g(d) +
                        " from the last non-zombie center of slot " + std::to_string(j) +
                        " (allowed " + fmt_g(bound) + ")";
                    break;
                }
            }
        }
        add("p2_recent_nonzombie", st, w);
    }

    // p2_recent_regular: members near the slot's last regular center
    if (algo != Algo::Decremental) {
        add("p2_recent_regular", CheckStatus::Skipped);
    } else {
        CheckStatus st = CheckStatus::Pass;
        std::string w;
        for (std::size_t j = 0; j < cur.slots.size() && st == CheckStatus::Pass; ++j) {
            const Slot& s = cur.slots[j];
            if (!s.center || j >= reg_record_.size() || !reg_record_[j]) continue;
            for (PointId q : s.members) {
                if (q == *s.center) continue;
                double d = m_.dist_to_ref(q, *reg_record_[j]);
                if (d > r) {
                    st = CheckStatus::Fail;
                    w = "point " + name_or_slot(q) + " is " + fmt_g(d) +
                        " from the last regular center of slot " + std::to_string(j) +
                        " (allowed " + fmt_g(r) + ")";
                    break;
                }
            }
        }
        add("p2_recent_regular", st, w);
    }

    // s_init_cover: the recorded ordering plus S still dominates at the radius
    if (algo != Algo::Incremental) {
        add("s_init_cover", CheckStatus::Skipped);
    } else {
        std::vector<PointId> uni = cur.s_init;
        for (PointId c : S)
            if (std::find(uni.begin(), uni.end(), c) == uni.end()) uni.push_back(c);
        double c2 = kern::cost(m_, P, uni);
        if (c2 <= r)
            add("s_init_cover", CheckStatus::Pass);
        else {
            auto far = kern::farthest(m_, P, uni);
            add("s_init_cover", CheckStatus::Fail,
                "point " + (far.valid ? name_or_slot(far.id) : std::string("?")) + " is " +
                    fmt_g(c2) + " from S_init and S (allowed " + fmt_g(r) + ")");
        }
    }

    // exempted_centers: replaced centers of this level stay covered
    if (algo != Algo::Incremental) {
        add("exempted_centers", CheckStatus::Skipped);
    } else {
        CheckStatus st = CheckStatus::Pass;
        std::string w;
        for (PointId e : exempted_) {
            if (std::find(S.begin(), S.end(), e) != S.end()) continue;
            double d = kern::dist_to_set(m_, e, S);
            if (d > r) {
                st = CheckStatus::Fail;
                w = "replaced center " + name_or_slot(e) + " is " + fmt_g(d) +
                    " from S (allowed " + fmt_g(r) + ")";
                break;
            }
        }
        add("exempted_centers", st, w);
    }

    // oracle ratio checks
    bool want_brute = mode_ == VerifyMode::Brute && P.size() <= kBruteLimit;
    bool want_hs = mode_ == VerifyMode::Hs || (mode_ == VerifyMode::Brute && !want_brute);
    if (!want_brute) {
        add("ratio_vs_oracle", CheckStatus::Skipped);
    } else {
        double rstar = brute_force_opt(m_, cur.k).radius;
        v.has_oracle = true;
        v.rstar = rstar;
        if (rstar == 0.0) {
            v.ratio = cost == 0.0 ? 1.0 : kInf;
            add("ratio_vs_oracle", cost == 0.0 ? CheckStatus::Pass : CheckStatus::Fail,
                cost == 0.0 ? "" : "optimum is 0 but cost is " + fmt_g(cost));
        } else {
            v.ratio = cost / rstar;
            if (cost <= B.ratio * rstar && r <= B.radius * rstar)
                add("ratio_vs_oracle", CheckStatus::Pass);
            else if (cost > B.ratio * rstar)
                add("ratio_vs_oracle", CheckStatus::Fail,
                    "cost " + fmt_g(cost) + " vs optimum " + fmt_g(rstar) + " breaks the " +
                        fmt_g(B.ratio) + "x bound");
            else
                add("ratio_vs_oracle", CheckStatus::Fail,
                    "radius " + fmt_g(r) + " vs optimum " + fmt_g(rstar) + " breaks the " +
                        fmt_g(B.radius) + "x bound");
        }
    }
    if (!want_hs) {
        add("ratio_vs_hs", CheckStatus::Skipped);
    } else {
        double lb = hochbaum_shmoys(m_, cur.k).radius / 2.0;
        v.has_oracle = true;
        v.rstar = lb;
        if (lb == 0.0) {
            v.ratio = cost == 0.0 ? 1.0 : kInf;
            add("ratio_vs_hs", cost == 0.0 ? CheckStatus::Pass : CheckStatus::Fail,
                cost == 0.0 ? "" : "static lower bound is 0 but cost is " + fmt_g(cost));
        } else {
            v.ratio = cost / lb;
            if (v.ratio <= B.ratio)
                add("ratio_vs_hs", CheckStatus::Pass);
            else
                add("ratio_vs_hs", CheckStatus::Fail,
                    "cost " + fmt_g(cost) + " vs static lower bound " + fmt_g(lb) +
                        " breaks the " + fmt_g(B.ratio) + "x bound");
        }
    }

    prev_ = cur;
    return v;
}

}  // namespace kcc
