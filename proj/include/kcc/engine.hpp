#pragma once

#include <memory>

#include "kcc/snapshot.hpp"

namespace kcc {

// Update protocol: the runner mutates the instance first (add/erase), then
// hands the id to the engine.  Below k+1 points the engines sit in degenerate
// mode with S = P; the one-shot preprocessing runs when the count first
// reaches k+1.
class Engine {
  public:
    virtual ~Engine() = default;
    virtual Algo algo() const = 0;
    virtual void insert(PointId p) = 0;
    virtual void erase(PointId p) = 0;
    virtual Snapshot snapshot() const = 0;
};

// The decremental engine preprocesses whatever is present at construction
// time; build it once the initial point set is loaded.
std::unique_ptr<Engine> make_engine(Algo algo, MetricInstance& inst, int k);

}  // namespace kcc
