// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fault_suite.hpp"
#include "kcc/engine.hpp"
#include "kcc/format.hpp"
#include "kcc/generators.hpp"
#include "kcc/runner.hpp"
#include "kcc/static_kcenter.hpp"
#include "kcc/stream.hpp"

using namespace kcc;

namespace {

bool g_all_ok = true;

void criterion(int n, bool pass, const std::string& detail) {
    if (!pass) g_all_ok = false;
    std::cout << "criterion " << n << ": " << (pass ? "PASS" : "FAIL") << " - " << detail << "\n";
}

std::filesystem::path work_dir() {
    auto dir = std::filesystem::temp_directory_path() / "kcc_acceptance";
    std::filesystem::create_directories(dir);
    return dir;
}

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    double unit() { return static_cast<double>(g() >> 11) * (1.0 / 9007199254740992.0); }
    std::size_t below(std::size_t m) { return static_cast<std::size_t>(g() % m); }
};

struct RunSummary {
    long rows = 0;
    int max_recourse = 0;
    bool ok = true;
    std::string first_error;
};

void fold(RunSummary& acc, const RunResult& res, const std::string& label) {
    acc.rows += res.rows;
    acc.max_recourse = std::max(acc.max_recourse, res.max_recourse);
    if (res.exit_code != 0) {
        acc.ok = false;
        if (acc.first_error.empty()) {
            acc.first_error = label + ": " +
                              (!res.error.empty()
                                   ? res.error
                                   : !res.failures.empty() ? res.failures.front()
                                                           : "exit " + std::to_string(res.exit_code));
        }
    }
}

RunResult run(const Stream& s, Algo algo, int k, VerifyMode mode,
              const std::string& matrix_path = "") {
    RunOptions opt;
    opt.algo = algo;
    opt.k = k;
    opt.verify = mode;
    opt.matrix_path = matrix_path;
    return run_stream(s, opt, nullptr);
}

Stream dec_matrix_stream(std::size_t n, std::uint64_t seed) {
    Stream s = gen_matrix_stream(n, seed, 0.0);
    std::vector<std::string> ids;
    for (const auto& it : s.items) ids.push_back(it.id);
    s.items.push_back(StreamItem{StreamItem::Kind::Marker, "", {}, 0});
    for (auto it = ids.rbegin(); it != ids.rend(); ++it)
        s.items.push_back(StreamItem{StreamItem::Kind::Delete, *it, {}, 0});
    return s;
}

// criterion 1: recourse <= 1 over at least 10k randomized updates per engine
bool c1_fully(RunSummary& acc) {
    auto dir = work_dir();
    fold(acc, run(gen_random(2000, 2, 101, 0.35), Algo::Fully, 5, VerifyMode::None), "fully n2000");
    fold(acc, run(gen_random(1200, 1, 102, 0.5), Algo::Fully, 2, VerifyMode::None), "fully n1200d1");
    fold(acc, run(gen_random(1200, 3, 103, 0.4), Algo::Fully, 10, VerifyMode::None),
         "fully n1200d3");
    fold(acc, run(gen_random(800, 2, 104, 0.3), Algo::Fully, 1, VerifyMode::None), "fully k1");
    fold(acc, run(gen_random(1500, 1, 109, 0.4), Algo::Fully, 5, VerifyMode::None), "fully n1500");
    auto m600 = (dir / "c1_m600.txt").string();
    write_matrix(gen_matrix(600, 105), m600);
    fold(acc, run(gen_matrix_stream(600, 106, 0.5), Algo::Fully, 5, VerifyMode::None, m600),
         "fully matrix600");
    auto m500 = (dir / "c1_m500.txt").string();
    write_matrix(gen_matrix(500, 107), m500);
    fold(acc, run(gen_matrix_stream(500, 108, 0.4), Algo::Fully, 2, VerifyMode::None, m500),
         "fully matrix500");
    return acc.ok && acc.rows >= 10000 && acc.max_recourse <= 1;
}

bool c1_incremental(RunSummary& acc) {
    auto dir = work_dir();
    fold(acc, run(gen_random(2600, 1, 111, 0.0), Algo::Incremental, 2, VerifyMode::None),
         "inc n2600d1");
    fold(acc, run(gen_random(2600, 2, 112, 0.0), Algo::Incremental, 5, VerifyMode::None),
         "inc n2600d2");
    fold(acc, run(gen_random(2600, 3, 113, 0.0), Algo::Incremental, 10, VerifyMode::None),
         "inc n2600d3");
    fold(acc, run(gen_random(1700, 2, 114, 0.0), Algo::Incremental, 1, VerifyMode::None),
         "inc k1");
    auto m600 = (dir / "c1_im600.txt").string();
    write_matrix(gen_matrix(600, 115), m600);
    fold(acc, run(gen_matrix_stream(600, 116, 0.0), Algo::Incremental, 5, VerifyMode::None, m600),
         "inc matrix600");
    return acc.ok && acc.rows >= 10000 && acc.max_recourse <= 1;
}

bool c1_decremental(RunSummary& acc) {
    auto dir = work_dir();
    fold(acc, run(gen_dec_stream(2000, 2, 121), Algo::Decremental, 5, VerifyMode::None),
         "dec n2000");
    fold(acc, run(gen_dec_stream(1250, 1, 122), Algo::Decremental, 2, VerifyMode::None),
         "dec n1250d1");
    fold(acc, run(gen_dec_stream(1250, 3, 123), Algo::Decremental, 10, VerifyMode::None),
         "dec n1250d3");
    fold(acc, run(gen_dec_stream(600, 2, 124), Algo::Decremental, 1, VerifyMode::None), "dec k1");
    auto m450 = (dir / "c1_dm450.txt").string();
    write_matrix(gen_matrix(450, 125), m450);
    fold(acc, run(dec_matrix_stream(450, 126), Algo::Decremental, 5, VerifyMode::None, m450),
         "dec matrix450");
    return acc.ok && acc.rows >= 10000 && acc.max_recourse <= 1;
}

// criterion 2: per-step cost and radius vs the exact optimum on small instances
Stream small_stream(Algo algo, const std::vector<double>& vals) {
    Stream s;
    s.dim = 1;
    s.has_coords = true;
    for (double v : vals)
        s.items.push_back(StreamItem{StreamItem::Kind::Insert, fmt_g(v), {v}, 0});
    if (algo == Algo::Decremental) s.items.push_back(StreamItem{StreamItem::Kind::Marker, "", {}, 0});
    if (algo != Algo::Incremental)
        for (double v : vals)
            s.items.push_back(StreamItem{StreamItem::Kind::Delete, fmt_g(v), {}, 0});
    return s;
}

bool c2(RunSummary& acc, long& enumerated, long& random_runs) {
    const std::vector<double> base = {0, 3, 7, 12, 18, 25, 33, 42};
    const Algo algos[] = {Algo::Fully, Algo::Decremental, Algo::Incremental};
    for (int mask = 0; mask < 256; ++mask) {
        std::vector<double> vals;
        for (int b = 0; b < 8; ++b)
            if (mask & (1 << b)) vals.push_back(base[b]);
        if (vals.size() < 2) continue;
        for (int k : {1, 2, 3})
            for (Algo a : algos) {
                fold(acc, run(small_stream(a, vals), a, k, VerifyMode::Brute),
                     "enum mask " + std::to_string(mask) + " k " + std::to_string(k));
                ++enumerated;
                if (!acc.ok) return false;
            }
    }
    for (int i = 0; i < 500; ++i) {
        Algo a = algos[i % 3];
        std::size_t dim = 1 + static_cast<std::size_t>(i) % 3;
        std::uint64_t seed = 5000 + static_cast<std::uint64_t>(i);
        int k = 1 + i % 4;
        Stream s;
        if (a == Algo::Decremental)
            s = gen_dec_stream(10, dim, seed);
        else
            s = gen_random(12, dim, seed, a == Algo::Fully ? 0.4 : 0.0);
        fold(acc, run(s, a, k, VerifyMode::Brute), "random small " + std::to_string(i));
        ++random_runs;
        if (!acc.ok) return false;
    }
    return acc.ok && acc.max_recourse <= 1;
}

// criterion 3: static 2-approximation against the exact oracle
bool c3(std::string& detail) try {
    Rng rng(333);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        std::size_t n = 2 + rng.below(11);
        std::size_t dim = 1 + rng.below(3);
        int k = 1 + static_cast<int>(rng.below(std::min<std::size_t>(4, n)));
        MetricInstance inst = MetricInstance::euclidean(dim);
        for (std::size_t p = 0; p < n; ++p) {
            std::vector<double> c;
            for (std::size_t d = 0; d < dim; ++d) c.push_back(rng.unit());
            inst.add_point("p" + std::to_string(p), c);
        }
        double exact = brute_force_opt(inst, k).radius;
        double hs = hochbaum_shmoys(inst, k).radius;
        if (hs < exact || hs > 2.0 * exact) {
            detail = "instance " + std::to_string(i) + ": hs " + fmt_g(hs) + " vs optimum " +
                     fmt_g(exact);
            return false;
        }
        if (exact > 0.0) worst = std::max(worst, hs / exact);
    }
    detail = "1000 instances, hs/optimum in [1, 2], worst observed " + fmt_g(worst);
    return true;
} catch (const Error& e) {
    detail = e.what();
    return false;
}

// criterion 5: adaptive center churn forces recourse 1 per step
bool c5(std::string& detail) try {
    const std::size_t n0 = 30, steps = 1000;
    auto out = churn_adversary(Algo::Fully, 5, n0, 2, 777, steps);
    long churn_total = 0;
    for (std::size_t i = n0; i < out.recourse.size(); ++i) churn_total += out.recourse[i];
    detail = std::to_string(steps) + " churn steps: recourse " + std::to_string(churn_total) +
             ", max per update " + std::to_string(out.max_step);
    return churn_total >= 999 && out.max_step <= 1;
} catch (const Error& e) {
    detail = e.what();
    return false;
}

// criterion 6: mean distance evaluations per update, reported against n*k
double mean_evals(std::size_t n, int k, std::uint64_t seed) {
    auto stream = gen_random(n, 2, seed, 0.4);
    MetricInstance inst = MetricInstance::euclidean(2);
    auto eng = make_engine(Algo::Fully, inst, k);
    std::uint64_t total = 0;
    long updates = 0;
    for (const auto& it : stream.items) {
        if (it.kind == StreamItem::Kind::Marker) continue;
        std::uint64_t before;
        if (it.kind == StreamItem::Kind::Insert) {
            PointId id = inst.add_point(it.id, it.coords);
            before = inst.dist_evals();
            eng->insert(id);
        } else {
            PointId id = inst.id_of(it.id);
            inst.erase(id);
            before = inst.dist_evals();
            eng->erase(id);
        }
        total += inst.dist_evals() - before;
        ++updates;
    }
    return static_cast<double>(total) / static_cast<double>(updates);
}

bool c6(std::string& detail) {
    try {
        const int k = 5;
        const std::size_t ns[] = {500, 1000, 2000};
        double norm[3];
        std::ostringstream os;
        os << "mean evals/update k=5:";
        for (int i = 0; i < 3; ++i) {
            double mean = mean_evals(ns[i], k, 901 + static_cast<std::uint64_t>(i));
            norm[i] = mean / (static_cast<double>(ns[i]) * k);
            os << (i ? "," : "") << " n=" << ns[i] << " " << fmt_g(mean);
        }
        double lo = std::min({norm[0], norm[1], norm[2]});
        double hi = std::max({norm[0], norm[1], norm[2]});
        bool within = hi <= 2.0 * lo;   // per n*k cost may not drift beyond 2x across scales
        os << "; per n*k " << fmt_g(norm[0]) << " / " << fmt_g(norm[1]) << " / " << fmt_g(norm[2])
           << " (" << (within ? "within" : "outside") << " 2x slack); not gating";
        detail = os.str();
        return true;
    } catch (const Error& e) {
        detail = e.what();
        return false;
    }
}

// criterion 7: repeated CLI invocations produce byte-identical reports
std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

bool c7(const std::string& kcc_path, std::string& detail) try {
    if (kcc_path.empty()) {
        detail = "no --kcc binary path given";
        return false;
    }
    auto dir = work_dir();
    auto input = dir / "c7_stream.txt";
    write_stream(gen_random(300, 2, 555, 0.3), input.string());
    auto r1 = dir / "c7_a.csv";
    auto r2 = dir / "c7_b.csv";
    for (const auto& rep : {r1, r2}) {
        std::string cmd = kcc_path + " run --algo fully --k 4 --input " + input.string() +
                          " --report " + rep.string() + " --verify hs > /dev/null";
        int rc = std::system(cmd.c_str());
        if (rc != 0) {
            detail = "kcc run exited with " + std::to_string(rc);
            return false;
        }
    }
    std::string a = slurp(r1), b = slurp(r2);
    if (a.empty() || a != b) {
        detail = "reports differ (" + std::to_string(a.size()) + " vs " +
                 std::to_string(b.size()) + " bytes)";
        return false;
    }
    detail = "two kcc run invocations, " + std::to_string(a.size()) + "-byte reports identical";
    return true;
} catch (const Error& e) {
    detail = e.what();
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    std::string kcc_path;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--kcc") kcc_path = argv[i + 1];

    RunSummary fully, inc, dec;
    bool f_ok = c1_fully(fully);
    bool i_ok = c1_incremental(inc);
    bool d_ok = c1_decremental(dec);
    bool ok1 = f_ok && i_ok && d_ok;
    {
        std::ostringstream os;
        os << "updates fully=" << fully.rows << " decremental=" << dec.rows
           << " incremental=" << inc.rows << ", max recourse "
           << std::max({fully.max_recourse, dec.max_recourse, inc.max_recourse});
        for (const auto* s : {&fully, &inc, &dec})
            if (!s->first_error.empty()) os << "; " << s->first_error;
        criterion(1, ok1, os.str());
    }

    RunSummary small;
    long enumerated = 0, random_runs = 0;
    bool ok2 = c2(small, enumerated, random_runs);
    {
        std::ostringstream os;
        os << enumerated << " enumerated runs + " << random_runs << " random small streams, "
           << small.rows << " verified updates";
        if (!small.first_error.empty()) os << "; " << small.first_error;
        criterion(2, ok2, os.str());
    }

    std::string d3;
    criterion(3, c3(d3), d3);

    {
        auto outcomes = kcctest::run_fault_suite();
        int caught = 0;
        std::string bad;
        for (const auto& o : outcomes) {
            if (o.target_failed && o.has_witness && o.siblings_clean)
                ++caught;
            else if (bad.empty())
                bad = o.target + (o.stray.empty() ? "" : " (stray: " + o.stray + ")");
        }
        bool ok4 = ok1 && ok2 && caught == static_cast<int>(outcomes.size());
        std::ostringstream os;
        os << "all checks live on criteria 1-2 rows; " << caught << "/" << outcomes.size()
           << " injected faults caught with witnesses";
        if (!bad.empty()) os << "; first miss: " << bad;
        criterion(4, ok4, os.str());
    }

    std::string d5;
    criterion(5, c5(d5), d5);

    std::string d6;
    criterion(6, c6(d6), d6);

    std::string d7;
    criterion(7, c7(kcc_path, d7), d7);

    return g_all_ok ? 0 : 1;
}
