// Times the OpenMP kernels against the serial reference implementations.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "kcc/kernels.hpp"
#include "kcc/metric.hpp"

using namespace kcc;

namespace {

MetricInstance make_points(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    auto unit = [&] { return static_cast<double>(g() >> 11) * (1.0 / 9007199254740992.0); };
    MetricInstance inst = MetricInstance::euclidean(3);
    for (std::size_t i = 0; i < n; ++i)
        inst.add_point("p" + std::to_string(i), {unit(), unit(), unit()});
    return inst;
}

std::vector<PointId> head(const MetricInstance& inst, std::size_t m) {
    const auto& live = inst.live();
    return {live.begin(), live.begin() + static_cast<long>(m)};
}

template <typename F>
double best_ms(F&& f, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

bool check_equal(const MetricInstance& inst, const std::vector<PointId>& S,
                 const std::vector<PointId>& big) {
    const auto& P = inst.live();
    bool ok = true;
    ok = ok && kern::cost_serial(inst, P, S) == kern::cost(inst, P, S);
    auto fs = kern::farthest_serial(inst, P, S);
    auto fp = kern::farthest(inst, P, S);
    ok = ok && fs.valid == fp.valid && fs.id == fp.id && fs.dist == fp.dist;
    ok = ok && kern::min_pairwise_serial(inst, big) == kern::min_pairwise(inst, big);
    ok = ok && kern::dist_to_set_serial(inst, P.back(), S) == kern::dist_to_set(inst, P.back(), S);
    return ok;
}

int smoke() {
    auto inst = make_points(500, 11);
    auto S = head(inst, 16);
    auto big = head(inst, 120);
    kern::set_mode(kern::Mode::Parallel);
    if (!check_equal(inst, S, big)) {
        std::printf("smoke: serial and parallel kernels disagree\n");
        return 1;
    }
    std::printf("smoke ok: serial == parallel on n=500 (openmp %s)\n",
                kern::parallel_available() ? "active" : "unavailable");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "--smoke") return smoke();

    std::printf("openmp: %s\n", kern::parallel_available() ? "active" : "unavailable (serial fallback)");
    std::printf("%-14s %8s %12s %12s %9s\n", "kernel", "n", "serial_ms", "parallel_ms", "speedup");

    for (std::size_t n : {2000u, 8000u, 32000u}) {
        auto inst = make_points(n, 7);
        auto S = head(inst, 64);
        auto big = head(inst, n / 8);
        const auto& P = inst.live();
        if (!check_equal(inst, S, big)) {
            std::printf("kernels disagree at n=%zu\n", n);
            return 1;
        }

        struct Row {
            const char* name;
            double s, p;
        };
        kern::set_mode(kern::Mode::Serial);
        double cs = best_ms([&] { (void)kern::cost(inst, P, S); });
        double fs = best_ms([&] { (void)kern::farthest(inst, P, S); });
        double ms = best_ms([&] { (void)kern::min_pairwise(inst, big); });
        kern::set_mode(kern::Mode::Parallel);
        double cp = best_ms([&] { (void)kern::cost(inst, P, S); });
        double fp = best_ms([&] { (void)kern::farthest(inst, P, S); });
        double mp = best_ms([&] { (void)kern::min_pairwise(inst, big); });

        for (Row r : {Row{"cost", cs, cp}, Row{"farthest", fs, fp}, Row{"min_pairwise", ms, mp}})
            std::printf("%-14s %8zu %12.3f %12.3f %8.2fx\n", r.name, n, r.s, r.p,
                        r.p > 0.0 ? r.s / r.p : 0.0);
    }
    return 0;
}
