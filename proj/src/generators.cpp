#include "kcc/generators.hpp"

#include <random>
#include <string>

#include "kcc/engine.hpp"
#include "kcc/errors.hpp"

namespace kcc {
namespace {

constexpr std::size_t kChurnWarmup = 8;

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    // mt19937_64 output is specified bit-exactly, so streams replay anywhere.
    double unit() { return static_cast<double>(g() >> 11) * (1.0 / 9007199254740992.0); }
    std::size_t below(std::size_t m) { return static_cast<std::size_t>(g() % m); }
};

void maybe_churn(Stream& s, std::vector<std::string>& live, Rng& rng, std::size_t inserted,
                 double churn_ratio) {
    if (inserted < kChurnWarmup || churn_ratio <= 0.0 || live.size() < 2) return;
    if (rng.unit() < churn_ratio) {
        std::size_t idx = rng.below(live.size());
        s.items.push_back(StreamItem{StreamItem::Kind::Delete, live[idx], {}, 0});
        live.erase(live.begin() + static_cast<long>(idx));
    }
}

}  // namespace

Stream gen_random(std::size_t n, std::size_t dim, std::uint64_t seed, double churn_ratio) {
    Stream s;
    s.dim = dim;
    s.has_coords = true;
    Rng rng(seed);
    std::vector<std::string> live;
    for (std::size_t i = 0; i < n; ++i) {
        StreamItem it{StreamItem::Kind::Insert, "p" + std::to_string(i), {}, 0};
        for (std::size_t d = 0; d < dim; ++d) it.coords.push_back(rng.unit());
        live.push_back(it.id);
        s.items.push_back(std::move(it));
        maybe_churn(s, live, rng, i + 1, churn_ratio);
    }
    return s;
}

Stream gen_matrix_stream(std::size_t n, std::uint64_t seed, double churn_ratio) {
    Stream s;
    Rng rng(seed);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<std::string> live;
    for (std::size_t i = 0; i < n; ++i) {
        std::string id = std::to_string(order[i]);
        live.push_back(id);
        s.items.push_back(StreamItem{StreamItem::Kind::Insert, std::move(id), {}, 0});
        maybe_churn(s, live, rng, i + 1, churn_ratio);
    }
    return s;
}

Stream gen_dec_stream(std::size_t n, std::size_t dim, std::uint64_t seed) {
    Stream s;
    s.dim = dim;
    s.has_coords = true;
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i) {
        StreamItem it{StreamItem::Kind::Insert, "p" + std::to_string(i), {}, 0};
        for (std::size_t d = 0; d < dim; ++d) it.coords.push_back(rng.unit());
        s.items.push_back(std::move(it));
    }
    s.items.push_back(StreamItem{StreamItem::Kind::Marker, "", {}, 0});
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    for (std::size_t i = 0; i < n; ++i)
        s.items.push_back(
            StreamItem{StreamItem::Kind::Delete, "p" + std::to_string(order[i]), {}, 0});
    return s;
}

MatrixData gen_matrix(std::size_t n, std::uint64_t seed) {
    MatrixData m;
    m.n = n;
    m.table.assign(n * n, 0.0);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            double d = 1.0 + rng.unit();
            m.table[i * n + j] = d;
            m.table[j * n + i] = d;
        }
    return m;
}

ChurnOutcome churn_adversary(Algo algo, int k, std::size_t n_initial, std::size_t dim,
                             std::uint64_t seed, std::size_t steps, bool hit_center) {
    if (algo != Algo::Fully)
        throw UnsupportedOperation("center churn needs an engine that supports both updates");

    ChurnOutcome out;
    out.stream.dim = dim;
    out.stream.has_coords = true;
    MetricInstance inst = MetricInstance::euclidean(dim);
    auto eng = make_engine(algo, inst, k);
    Rng rng(seed);
    auto prev = eng->snapshot().centers();

    auto record = [&](StreamItem item) {
        auto cur = eng->snapshot().centers();
        int rc = recourse(prev, cur);
        prev = std::move(cur);
        out.stream.items.push_back(std::move(item));
        out.recourse.push_back(rc);
        out.total += rc;
        if (rc > out.max_step) out.max_step = rc;
    };
    auto do_insert = [&](const std::string& name, const std::vector<double>& coords) {
        PointId id = inst.add_point(name, coords);
        eng->insert(id);
        record(StreamItem{StreamItem::Kind::Insert, name, coords, 0});
    };
    auto do_delete = [&](const std::string& name) {
        PointId id = inst.id_of(name);
        inst.erase(id);
        eng->erase(id);
        record(StreamItem{StreamItem::Kind::Delete, name, {}, 0});
    };

    for (std::size_t i = 0; i < n_initial; ++i) {
        std::vector<double> coords;
        for (std::size_t d = 0; d < dim; ++d) coords.push_back(rng.unit());
        do_insert("p" + std::to_string(i), coords);
    }

    for (std::size_t step = 0; step < steps; ++step) {
        auto snap = eng->snapshot();
        auto centers = snap.centers();
        if (centers.empty()) break;
        PointId victim = centers.front();
        if (!hit_center) {
            std::vector<char> is_c(inst.universe(), 0);
            for (PointId c : centers) is_c[c] = 1;
            for (PointId q : inst.live())
                if (!is_c[q]) {
                    victim = q;
                    break;
                }
        }
        std::string name = inst.name_of(victim);
        std::vector<double> coords = inst.ref_of(victim).coords;
        do_delete(name);
        do_insert(name, coords);
    }
    return out;
}

}  // namespace kcc
