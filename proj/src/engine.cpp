#include "kcc/engine.hpp"

#include "kcc/decremental.hpp"
#include "kcc/errors.hpp"
#include "kcc/fully_dynamic.hpp"
#include "kcc/incremental.hpp"

namespace kcc {

std::unique_ptr<Engine> make_engine(Algo algo, MetricInstance& inst, int k) {
    switch (algo) {
        case Algo::Fully:
            return std::make_unique<FullyDynamic>(inst, k);
        case Algo::Decremental:
            return std::make_unique<Decremental>(inst, k);
        case Algo::Incremental:
            return std::make_unique<Incremental>(inst, k);
    }
    throw IllegalState("unknown algorithm");
}

}  // namespace kcc
