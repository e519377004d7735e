#pragma once

#include <cstdint>
#include <vector>

#include "kcc/snapshot.hpp"
#include "kcc/stream.hpp"

namespace kcc {

// Uniform points in the unit cube; after a short warmup each insert is
// followed, with probability churn_ratio, by a delete of a uniformly chosen
// live id.
Stream gen_random(std::size_t n, std::size_t dim, std::uint64_t seed, double churn_ratio);

// Id-only variant over the rows of an n x n matrix metric: shuffled inserts
// with the same churn scheme.
Stream gen_matrix_stream(std::size_t n, std::uint64_t seed, double churn_ratio);

// Inserts, then the preprocessing marker, then every point deleted in a
// shuffled order.
Stream gen_dec_stream(std::size_t n, std::size_t dim, std::uint64_t seed);

// Symmetric zero-diagonal table with off-diagonal entries in [1, 2]; the
// triangle inequality holds for any such table.
MatrixData gen_matrix(std::size_t n, std::uint64_t seed);

struct ChurnOutcome {
    Stream stream;               // initial build plus delete/re-insert pairs
    std::vector<int> recourse;   // one entry per stream item
    long total = 0;
    int max_step = 0;
};

// Adaptive adversary: runs the engine in the loop, repeatedly deleting the
// current first center (or the first non-center when hit_center is false) and
// re-inserting the same coordinates.
ChurnOutcome churn_adversary(Algo algo, int k, std::size_t n_initial, std::size_t dim,
                             std::uint64_t seed, std::size_t steps, bool hit_center = true);

}  // namespace kcc
