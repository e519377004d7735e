#include "kcc/metric.hpp"

#include <algorithm>
#include <cmath>

#include "kcc/kernels.hpp"

namespace kcc {

MetricInstance MetricInstance::euclidean(std::size_t dim) {
    if (dim == 0) throw IllegalState("euclidean dimension must be positive");
    MetricInstance m;
    m.backend_ = Backend::Euclidean;
    m.dim_ = dim;
    return m;
}

MetricInstance MetricInstance::matrix(std::vector<double> table, std::size_t n) {
    if (n == 0 || table.size() != n * n)
        throw IllegalState("matrix table size does not match universe");
    for (std::size_t i = 0; i < n; ++i) {
        if (table[i * n + i] != 0.0)
            throw ParseError("matrix diagonal entry is not zero", static_cast<long>(i + 2));
        for (std::size_t j = 0; j < n; ++j) {
            double v = table[i * n + j];
            if (!(v >= 0.0) || std::isnan(v))
                throw ParseError("matrix entry is negative or not a number",
                                 static_cast<long>(i + 2));
            if (table[j * n + i] != v)
                throw ParseError("matrix is not symmetric", static_cast<long>(i + 2));
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double dij = table[i * n + j];
            for (std::size_t l = 0; l < n; ++l) {
                if (dij > table[i * n + l] + table[l * n + j])
                    throw ParseError("triangle inequality violated at rows " +
                                         std::to_string(i) + "," + std::to_string(j) + "," +
                                         std::to_string(l),
                                     static_cast<long>(i + 2));
            }
        }
    MetricInstance m;
    m.backend_ = Backend::Matrix;
    m.table_ = std::move(table);
    m.matrix_n_ = n;
    return m;
}

PointId MetricInstance::id_of(const std::string& name) const {
    auto it = ids_.find(name);
    if (it == ids_.end()) throw IdNotPresent("unknown point id '" + name + "'");
    return it->second;
}

static void live_insert(std::vector<PointId>& live, PointId id) {
    live.insert(std::lower_bound(live.begin(), live.end(), id), id);
}

static void live_erase(std::vector<PointId>& live, PointId id) {
    auto it = std::lower_bound(live.begin(), live.end(), id);
    live.erase(it);
}

PointId MetricInstance::add_point(const std::string& name, const std::vector<double>& coords) {
    if (backend_ != Backend::Euclidean)
        throw UnsupportedOperation("coordinate insert on matrix backend");
    if (coords.size() != dim_)
        throw ParseError("coordinate count does not match dimension " + std::to_string(dim_), 0);
    auto it = ids_.find(name);
    if (it != ids_.end()) {
        PointId id = it->second;
        if (present_[id]) throw IdAlreadyPresent("point '" + name + "' already present");
        for (std::size_t d = 0; d < dim_; ++d)
            if (coords_[id * dim_ + d] != coords[d])
                throw IdAlreadyPresent("point '" + name +
                                       "' re-inserted with different coordinates");
        present_[id] = 1;
        live_insert(live_, id);
        return id;
    }
    PointId id = static_cast<PointId>(names_.size());
    ids_.emplace(name, id);
    names_.push_back(name);
    coords_.insert(coords_.end(), coords.begin(), coords.end());
    rows_.push_back(-1);
    present_.push_back(1);
    live_insert(live_, id);
    return id;
}

PointId MetricInstance::add_row(const std::string& name, long row) {
    if (backend_ != Backend::Matrix) throw UnsupportedOperation("row insert on euclidean backend");
    if (row < 0 || static_cast<std::size_t>(row) >= matrix_n_)
        throw IllegalState("matrix row " + std::to_string(row) + " outside universe of " +
                           std::to_string(matrix_n_));
    auto it = ids_.find(name);
    if (it != ids_.end()) {
        PointId id = it->second;
        if (present_[id]) throw IdAlreadyPresent("point '" + name + "' already present");
        if (rows_[id] != row)
            throw IdAlreadyPresent("point '" + name + "' re-inserted with a different row");
        present_[id] = 1;
        live_insert(live_, id);
        return id;
    }
    PointId id = static_cast<PointId>(names_.size());
    ids_.emplace(name, id);
    names_.push_back(name);
    rows_.push_back(row);
    present_.push_back(1);
    live_insert(live_, id);
    return id;
}

void MetricInstance::erase(PointId id) {
    if (!present(id)) throw IdNotPresent("erase of absent id " + std::to_string(id));
    present_[id] = 0;
    live_erase(live_, id);
}

double MetricInstance::dist_fast(PointId a, PointId b) const {
    if (backend_ == Backend::Matrix) return table_[rows_[a] * matrix_n_ + rows_[b]];
    const double* pa = coords_.data() + static_cast<std::size_t>(a) * dim_;
    const double* pb = coords_.data() + static_cast<std::size_t>(b) * dim_;
    double s = 0;
    for (std::size_t d = 0; d < dim_; ++d) {
        double diff = pa[d] - pb[d];
        s += diff * diff;
    }
    return std::sqrt(s);
}

double MetricInstance::distance(PointId a, PointId b) const {
    if (!present(a)) throw IdNotPresent("distance from absent id " + std::to_string(a));
    if (!present(b)) throw IdNotPresent("distance to absent id " + std::to_string(b));
    ++evals_;
    return dist_fast(a, b);
}

double MetricInstance::dist_to_ref(PointId a, const SpaceRef& ref) const {
    ++evals_;
    if (backend_ == Backend::Matrix) return table_[rows_[a] * matrix_n_ + ref.row];
    const double* pa = coords_.data() + static_cast<std::size_t>(a) * dim_;
    double s = 0;
    for (std::size_t d = 0; d < dim_; ++d) {
        double diff = pa[d] - ref.coords[d];
        s += diff * diff;
    }
    return std::sqrt(s);
}

SpaceRef MetricInstance::ref_of(PointId id) const {
    SpaceRef r;
    if (backend_ == Backend::Matrix) {
        r.row = rows_[id];
    } else {
        r.coords.assign(coords_.begin() + static_cast<std::size_t>(id) * dim_,
                        coords_.begin() + static_cast<std::size_t>(id + 1) * dim_);
    }
    return r;
}

double dist_to_set(const MetricInstance& inst, PointId p, const std::vector<PointId>& S) {
    if (!inst.present(p)) throw IdNotPresent("dist_to_set from absent id");
    for (PointId s : S)
        if (!inst.present(s)) throw IdNotPresent("dist_to_set target set has absent id");
    return kern::dist_to_set(inst, p, S);
}

double solution_cost(const MetricInstance& inst, const std::vector<PointId>& S) {
    if (S.empty()) {
        if (inst.n_live() == 0) return 0.0;
        throw EmptySolution("solution_cost over empty center set");
    }
    for (PointId s : S)
        if (!inst.present(s)) throw IdNotPresent("solution_cost center not present");
    return kern::cost(inst, inst.live(), S);
}

double min_pairwise(const MetricInstance& inst, const std::vector<PointId>& S) {
    if (S.size() < 2) throw TooFewPoints("min_pairwise needs at least two points");
    for (PointId s : S)
        if (!inst.present(s)) throw IdNotPresent("min_pairwise set has absent id");
    return kern::min_pairwise(inst, S);
}

std::vector<double> sorted_distinct_distances(const MetricInstance& inst) {
    const auto& live = inst.live();
    if (live.size() < 2) throw TooFewPoints("need at least two points for the distance set");
    std::vector<double> d;
    d.reserve(live.size() * (live.size() - 1) / 2);
    for (std::size_t i = 0; i < live.size(); ++i)
        for (std::size_t j = i + 1; j < live.size(); ++j)
            d.push_back(inst.dist_fast(live[i], live[j]));
    inst.add_evals(d.size());
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return d;
}

}  // namespace kcc
