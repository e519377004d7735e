#include "kcc/runner.hpp"

#include <memory>
#include <optional>

#include "kcc/engine.hpp"
#include "kcc/errors.hpp"
#include "kcc/kernels.hpp"
#include "kcc/report.hpp"

namespace kcc {
namespace {

long parse_row_id(const std::string& id, std::size_t n) {
    std::size_t used = 0;
    long row = -1;
    try {
        row = std::stol(id, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != id.size() || row < 0 || static_cast<std::size_t>(row) >= n)
        throw ParseError(
            "id '" + id + "' is not a row of the " + std::to_string(n) + "-point matrix", 0);
    return row;
}

}  // namespace

RunResult run_stream(const Stream& stream, const RunOptions& opt, std::ostream* report) {
    RunResult res;
    std::optional<ReportWriter> writer;
    if (report) writer.emplace(*report);

    const bool matrix_mode = !opt.matrix_path.empty();
    std::optional<MetricInstance> inst_store;
    std::size_t matrix_n = 0;
    try {
        if (matrix_mode) {
            MatrixData md = load_matrix(opt.matrix_path);
            matrix_n = md.n;
            inst_store.emplace(MetricInstance::matrix(std::move(md.table), md.n));
        } else {
            if (!stream.has_coords) {
                for (const auto& it : stream.items)
                    if (it.kind == StreamItem::Kind::Insert)
                        throw ParseError(
                            "stream has id-only inserts; provide a distance matrix", it.line);
            }
            inst_store.emplace(MetricInstance::euclidean(stream.dim));
        }
    } catch (const Error& e) {
        res.exit_code = 2;
        res.error = e.what();
        return res;
    }
    MetricInstance& inst = *inst_store;

    const bool deferred = opt.algo == Algo::Decremental;
    std::unique_ptr<Engine> eng;
    // Structural checks always run; the mode only adds oracle ratio checks.
    std::optional<Verifier> ver;
    ver.emplace(inst, opt.verify);

    std::vector<PointId> prev_centers;
    auto boot_engine = [&] {
        eng = make_engine(opt.algo, inst, opt.k);
        auto snap = eng->snapshot();
        if (ver) ver->prime(snap);
        prev_centers = snap.centers();
    };

    try {
        if (!deferred) boot_engine();
    } catch (const Error& e) {
        res.exit_code = 2;
        res.error = e.what();
        return res;
    }

    long step = 0;
    for (const auto& it : stream.items) {
        if (it.kind == StreamItem::Kind::Marker) {
            if (deferred && !eng) {
                try {
                    boot_engine();
                } catch (const Error& e) {
                    res.exit_code = 2;
                    res.error = "preprocessing failed: " + std::string(e.what());
                    return res;
                }
            }
            continue;
        }
        ++step;
        try {
            if (it.kind == StreamItem::Kind::Insert) {
                if (deferred && eng)
                    throw UnsupportedOperation("insert after the preprocessing boundary");
                PointId id = matrix_mode
                                 ? inst.add_row(it.id, parse_row_id(it.id, matrix_n))
                                 : inst.add_point(it.id, it.coords);
                if (eng) eng->insert(id);
            } else {
                if (deferred && !eng) boot_engine();
                PointId id = inst.id_of(it.id);
                inst.erase(id);
                eng->erase(id);
            }
        } catch (const Error& e) {
            res.exit_code = 2;
            res.error = "step " + std::to_string(step) + ": " + e.what();
            return res;
        }

        StepReport row;
        row.step = step;
        row.op = it.kind == StreamItem::Kind::Insert ? 'I' : 'D';
        row.id = it.id;

        if (!eng) {
            row.size_S = inst.n_live();
            row.n_regular = inst.n_live();
            row.has_cost = true;
            row.cost = 0.0;
        } else {
            Snapshot snap = eng->snapshot();
            StepVerdict v;
            bool verified = false;
            if (ver) {
                v = ver->step(snap);
                verified = true;
            }
            auto centers = snap.centers();
            row.recourse = verified ? v.recourse : recourse(prev_centers, centers);
            prev_centers = std::move(centers);
            row.size_S = prev_centers.size();
            if (snap.degenerate) {
                row.has_cost = true;
                row.cost = 0.0;
                row.n_regular = prev_centers.size();
            } else {
                row.has_level = snap.has_level;
                row.level = snap.level;
                row.has_radius = true;
                row.radius = snap.radius;
                row.has_cost = true;
                row.cost = verified ? v.cost : kern::cost(inst, snap.present, prev_centers);
                if (verified && v.has_oracle) {
                    row.has_rstar = true;
                    row.rstar = v.rstar;
                    row.has_ratio = true;
                    row.ratio = v.ratio;
                }
                row.n_regular = snap.count_state(ClusterState::Regular);
                row.n_extended = snap.count_state(ClusterState::Extended);
                row.n_zombie = snap.count_state(ClusterState::Zombie);
            }
            row.invariants_ok = !verified || v.ok;
            if (verified && !v.ok) {
                ++res.failed_rows;
                if (res.failures.size() < 8) {
                    for (const auto& c : v.checks)
                        if (c.status == CheckStatus::Fail) {
                            res.failures.push_back("step " + std::to_string(step) + " " + c.name +
                                                   ": " + c.witness);
                            break;
                        }
                }
            }
        }

        res.total_recourse += row.recourse;
        if (row.recourse > res.max_recourse) res.max_recourse = row.recourse;
        if (writer) writer->row(row);
        ++res.rows;
    }

    if (res.failed_rows > 0) res.exit_code = 1;
    return res;
}

RunResult run_file(const std::string& input_path, const RunOptions& opt, std::ostream* report) {
    try {
        Stream s = parse_stream(input_path);
        return run_stream(s, opt, report);
    } catch (const Error& e) {
        RunResult res;
        res.exit_code = 2;
        res.error = e.what();
        return res;
    }
}

}  // namespace kcc
