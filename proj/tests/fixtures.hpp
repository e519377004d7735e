#pragma once

#include <string>
#include <vector>

#include "kcc/format.hpp"
#include "kcc/metric.hpp"

namespace kcctest {

// Six points on a line forming three tight pairs; the workhorse fixture.
inline kcc::MetricInstance line6() {
    auto inst = kcc::MetricInstance::euclidean(1);
    for (double v : {0.0, 1.0, 10.0, 11.0, 20.0, 21.0}) inst.add_point(kcc::fmt_g(v), {v});
    return inst;
}

// 1-d instance with the value as the point name, inserted in list order.
inline kcc::MetricInstance line(const std::vector<double>& vs) {
    auto inst = kcc::MetricInstance::euclidean(1);
    for (double v : vs) inst.add_point(kcc::fmt_g(v), {v});
    return inst;
}

inline kcc::PointId pid(const kcc::MetricInstance& inst, double v) {
    return inst.id_of(kcc::fmt_g(v));
}

// Ids -> coordinate values, for readable expectations on line instances.
inline std::vector<double> vals(const kcc::MetricInstance& inst,
                                const std::vector<kcc::PointId>& ids) {
    std::vector<double> out;
    out.reserve(ids.size());
    for (auto id : ids) out.push_back(std::stod(inst.name_of(id)));
    return out;
}

}  // namespace kcctest
