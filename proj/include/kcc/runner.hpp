#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "kcc/snapshot.hpp"
#include "kcc/stream.hpp"
#include "kcc/verifier.hpp"

namespace kcc {

struct RunOptions {
    Algo algo = Algo::Fully;
    int k = 1;
    VerifyMode verify = VerifyMode::None;
    std::string matrix_path;   // empty: euclidean backend from stream coordinates
};

struct RunResult {
    int exit_code = 0;   // 0 clean, 1 invariant failure, 2 engine or input error
    std::string error;
    long rows = 0;
    long total_recourse = 0;
    int max_recourse = 0;
    long failed_rows = 0;
    std::vector<std::string> failures;   // first few, as "step N check: witness"
};

// Applies the stream to a fresh instance and engine, emits one CSV row per
// insert/delete to report (when given), and checks every step; the verify
// mode only chooses the optimum oracle, structural checks always run. The
// `---` marker fixes the decremental preprocessing boundary and is ignored by
// the other engines.
RunResult run_stream(const Stream& stream, const RunOptions& opt, std::ostream* report);

RunResult run_file(const std::string& input_path, const RunOptions& opt, std::ostream* report);

}  // namespace kcc
