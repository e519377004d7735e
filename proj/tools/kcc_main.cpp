#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "kcc/engine.hpp"
#include "kcc/errors.hpp"
#include "kcc/format.hpp"
#include "kcc/generators.hpp"
#include "kcc/kernels.hpp"
#include "kcc/runner.hpp"
#include "kcc/static_kcenter.hpp"

namespace {

kcc::Algo parse_algo(const std::string& s) {
    if (s == "fully") return kcc::Algo::Fully;
    if (s == "decremental") return kcc::Algo::Decremental;
    return kcc::Algo::Incremental;
}

kcc::VerifyMode parse_verify(const std::string& s) {
    if (s == "hs") return kcc::VerifyMode::Hs;
    if (s == "brute") return kcc::VerifyMode::Brute;
    return kcc::VerifyMode::None;
}

std::uint64_t env_seed(std::uint64_t fallback) {
    if (const char* e = std::getenv("KCC_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(e, &end, 10);
        if (end && *end == '\0') return v;
        std::cerr << "ignoring malformed KCC_SEED '" << e << "'\n";
    }
    return fallback;
}

int cmd_run(const std::string& algo, int k, const std::string& input, const std::string& matrix,
            const std::string& report, const std::string& verify) {
    kcc::RunOptions opt;
    opt.algo = parse_algo(algo);
    opt.k = k;
    opt.verify = parse_verify(verify);
    opt.matrix_path = matrix;

    std::ofstream report_file;
    std::ostream* report_os = nullptr;
    if (!report.empty()) {
        report_file.open(report, std::ios::binary);
        if (!report_file) {
            std::cerr << "cannot write report file " << report << "\n";
            return 2;
        }
        report_os = &report_file;
    }

    kcc::RunResult res = kcc::run_file(input, opt, report_os);
    std::cout << "rows=" << res.rows << " total_recourse=" << res.total_recourse
              << " max_recourse=" << res.max_recourse << "\n";
    if (res.failed_rows > 0) {
        std::cout << "invariant failures on " << res.failed_rows << " rows\n";
        for (const auto& f : res.failures) std::cout << "  " << f << "\n";
    }
    if (!res.error.empty()) std::cerr << "error: " << res.error << "\n";
    return res.exit_code;
}

int cmd_verify_static(int k, const std::string& input, const std::string& matrix) {
    try {
        kcc::Stream s = kcc::parse_stream(input);
        kcc::RunOptions probe;
        std::optional<kcc::MetricInstance> inst_store;
        std::size_t n_rows = 0;
        if (!matrix.empty()) {
            kcc::MatrixData md = kcc::load_matrix(matrix);
            n_rows = md.n;
            inst_store.emplace(kcc::MetricInstance::matrix(std::move(md.table), md.n));
        } else {
            inst_store.emplace(kcc::MetricInstance::euclidean(s.dim));
        }
        kcc::MetricInstance& inst = *inst_store;
        for (const auto& it : s.items) {
            if (it.kind == kcc::StreamItem::Kind::Insert) {
                if (!matrix.empty()) {
                    long row = std::stol(it.id);
                    if (row < 0 || static_cast<std::size_t>(row) >= n_rows)
                        throw kcc::ParseError("id '" + it.id + "' is outside the matrix",
                                              it.line);
                    inst.add_row(it.id, row);
                } else {
                    inst.add_point(it.id, it.coords);
                }
            } else if (it.kind == kcc::StreamItem::Kind::Delete) {
                inst.erase(inst.id_of(it.id));
            }
        }
        (void)probe;

        std::cout << "n=" << inst.n_live() << " k=" << k << "\n";
        auto hs = kcc::hochbaum_shmoys(inst, k);
        std::cout << "hs_radius=" << kcc::fmt_g(hs.radius) << " hs_centers=";
        for (std::size_t i = 0; i < hs.centers.size(); ++i)
            std::cout << (i ? " " : "") << inst.name_of(hs.centers[i]);
        std::cout << "\n";
        if (inst.n_live() > 0 && k >= 1 && static_cast<std::size_t>(k) <= inst.n_live()) {
            auto g = kcc::gonzalez(inst, k, inst.live().front());
            std::cout << "gonzalez_radius=" << kcc::fmt_g(kcc::solution_cost(inst, g)) << "\n";
        }
        if (inst.n_live() <= 20) {
            auto b = kcc::brute_force_opt(inst, k);
            std::cout << "brute_radius=" << kcc::fmt_g(b.radius) << "\n";
            if (b.radius > 0.0)
                std::cout << "hs_vs_brute=" << kcc::fmt_g(hs.radius / b.radius) << "\n";
        }
        return 0;
    } catch (const kcc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dynamic k-center clustering harness"};
    app.require_subcommand(1);
    bool serial = false;
    app.add_flag("--serial", serial, "use the serial reference kernels");

    // run
    std::string algo = "fully", input, matrix, report, verify = "none";
    int k = 1;
    auto* run = app.add_subcommand("run", "apply an update stream to an engine");
    run->add_option("--algo", algo, "engine")
        ->required()
        ->check(CLI::IsMember({"fully", "decremental", "incremental"}));
    run->add_option("--k", k, "number of centers")->required()->check(CLI::PositiveNumber);
    run->add_option("--input", input, "update stream file")->required();
    run->add_option("--matrix", matrix, "distance matrix file");
    run->add_option("--report", report, "CSV output path");
    run->add_option("--verify", verify, "per-step checking")
        ->check(CLI::IsMember({"none", "hs", "brute"}));

    // gen
    auto* gen = app.add_subcommand("gen", "produce streams and matrices");
    gen->require_subcommand(1);
    std::size_t n = 100, dim = 2, steps = 100, churn_n = 20;
    std::uint64_t seed = 1;
    double churn = 0.0;
    std::string out;
    bool non_center = false;
    std::string churn_algo = "fully";
    int churn_k = 3;

    auto* grand = gen->add_subcommand("random", "uniform cube points with optional churn");
    grand->add_option("--n", n)->required();
    grand->add_option("--dim", dim);
    grand->add_option("--seed", seed);
    grand->add_option("--churn", churn)->check(CLI::Range(0.0, 1.0));
    grand->add_option("--out", out)->required();

    auto* gdec = gen->add_subcommand("dec", "inserts, marker, then shuffled deletes");
    gdec->add_option("--n", n)->required();
    gdec->add_option("--dim", dim);
    gdec->add_option("--seed", seed);
    gdec->add_option("--out", out)->required();

    std::string mstream;
    auto* gmat = gen->add_subcommand("matrix", "random metric table, optional id stream");
    gmat->add_option("--n", n)->required();
    gmat->add_option("--seed", seed);
    gmat->add_option("--out", out, "matrix file")->required();
    gmat->add_option("--stream", mstream, "also write an id-only stream here");
    gmat->add_option("--churn", churn)->check(CLI::Range(0.0, 1.0));

    auto* gchurn = gen->add_subcommand("churn", "adaptive center delete/re-insert stream");
    gchurn->add_option("--algo", churn_algo)->check(CLI::IsMember({"fully"}));
    gchurn->add_option("--k", churn_k)->check(CLI::PositiveNumber);
    gchurn->add_option("--n", churn_n, "initial points");
    gchurn->add_option("--dim", dim);
    gchurn->add_option("--steps", steps);
    gchurn->add_option("--seed", seed);
    gchurn->add_flag("--non-center", non_center, "churn a non-center point instead");
    gchurn->add_option("--out", out)->required();

    // verify-static
    std::string vs_input, vs_matrix;
    int vs_k = 1;
    auto* vs = app.add_subcommand("verify-static", "run the static solvers on a point set");
    vs->add_option("--k", vs_k)->required()->check(CLI::PositiveNumber);
    vs->add_option("--input", vs_input, "stream applied to build the point set")->required();
    vs->add_option("--matrix", vs_matrix, "distance matrix file");

    CLI11_PARSE(app, argc, argv);

    if (serial) kcc::kern::set_mode(kcc::kern::Mode::Serial);

    try {
        if (run->parsed()) return cmd_run(algo, k, input, matrix, report, verify);
        if (vs->parsed()) return cmd_verify_static(vs_k, vs_input, vs_matrix);
        if (grand->parsed()) {
            auto s = kcc::gen_random(n, dim, env_seed(seed), churn);
            kcc::write_stream(s, out);
            std::cout << "wrote " << s.items.size() << " events to " << out << "\n";
            return 0;
        }
        if (gdec->parsed()) {
            auto s = kcc::gen_dec_stream(n, dim, env_seed(seed));
            kcc::write_stream(s, out);
            std::cout << "wrote " << s.items.size() << " events to " << out << "\n";
            return 0;
        }
        if (gmat->parsed()) {
            auto m = kcc::gen_matrix(n, env_seed(seed));
            kcc::write_matrix(m, out);
            std::cout << "wrote " << m.n << "x" << m.n << " matrix to " << out << "\n";
            if (!mstream.empty()) {
                auto s = kcc::gen_matrix_stream(n, env_seed(seed) + 1, churn);
                kcc::write_stream(s, mstream);
                std::cout << "wrote " << s.items.size() << " events to " << mstream << "\n";
            }
            return 0;
        }
        if (gchurn->parsed()) {
            auto c = kcc::churn_adversary(parse_algo(churn_algo), churn_k, churn_n, dim,
                                          env_seed(seed), steps, !non_center);
            kcc::write_stream(c.stream, out);
            std::cout << "wrote " << c.stream.items.size() << " events to " << out
                      << " total_recourse=" << c.total << " max_recourse=" << c.max_step << "\n";
            return 0;
        }
    } catch (const kcc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
