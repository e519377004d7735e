#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kcc/metric.hpp"
#include "kcc/snapshot.hpp"

namespace kcc {

enum class VerifyMode { None, Hs, Brute };

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Skipped;
    std::string witness;
};

struct StepVerdict {
    bool ok = true;
    std::vector<CheckResult> checks;
    int recourse = 0;
    double cost = 0.0;
    bool has_oracle = false;
    double rstar = 0.0;   // exact optimum (brute) or hs_radius/2 lower bound
    double ratio = 0.0;
    const CheckResult* find(const std::string& name) const;
};

// Online checker fed one snapshot per engine update. prime() sets the baseline
// (typically the post-preprocess or empty state); step() verifies the next
// snapshot against it and advances. Instrumentation keeps per-slot records of
// the most recent non-zombie / regular centers as raw space positions, since
// those points may have been deleted.
class Verifier {
  public:
    Verifier(const MetricInstance& inst, VerifyMode mode);

    void prime(const Snapshot& snap);
    StepVerdict step(const Snapshot& cur);

    bool primed() const { return primed_; }

  private:
    void refresh_records_(const Snapshot& cur);
    void clear_instrumentation_();

    const MetricInstance& m_;
    VerifyMode mode_;
    bool primed_ = false;
    Snapshot prev_;
    std::vector<std::optional<SpaceRef>> nz_record_;
    std::vector<std::optional<SpaceRef>> reg_record_;
    std::vector<PointId> exempted_;
};

}  // namespace kcc
