#include <cstdint>
#include <random>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "kcc/static_kcenter.hpp"

using namespace kcc;
using kcctest::line6;
using kcctest::pid;
using kcctest::vals;

TEST_CASE("maximal independent set, ascending scan") {
    auto inst = line6();
    CHECK(vals(inst, maximal_independent_set(inst, 1.0)) == std::vector<double>{0, 10, 20});
    CHECK(vals(inst, maximal_independent_set(inst, 9.0)) == std::vector<double>{0, 10, 20});
    CHECK(vals(inst, maximal_independent_set(inst, 10.0)) == std::vector<double>{0, 11});
    CHECK(maximal_independent_set(inst, 21.0) == std::vector<PointId>{pid(inst, 0)});
    CHECK(maximal_independent_set(inst, 0.0).size() == 6);
}

TEST_CASE("hochbaum-shmoys on the line fixture") {
    auto inst = line6();
    auto s3 = hochbaum_shmoys(inst, 3);
    CHECK(vals(inst, s3.centers) == std::vector<double>{0, 10, 20});
    CHECK(s3.radius == 1.0);

    auto s1 = hochbaum_shmoys(inst, 1);
    CHECK(vals(inst, s1.centers) == std::vector<double>{0});
    CHECK(s1.radius == 21.0);

    auto s2 = hochbaum_shmoys(inst, 2);
    CHECK(s2.centers.size() == 2);
    CHECK(s2.radius <= 2 * brute_force_opt(inst, 2).radius);

    auto s6 = hochbaum_shmoys(inst, 6);
    CHECK(s6.centers.size() == 6);
    CHECK(s6.radius == 0.0);
    CHECK(hochbaum_shmoys(inst, 9).radius == 0.0);
}

TEST_CASE("gonzalez farthest-first") {
    auto inst = line6();
    CHECK(vals(inst, gonzalez(inst, 3, pid(inst, 0))) == std::vector<double>{0, 21, 10});
    CHECK(vals(inst, gonzalez(inst, 1, pid(inst, 11))) == std::vector<double>{11});
    CHECK_THROWS_AS((void)gonzalez(inst, 7, pid(inst, 0)), TooFewPoints);

    auto tie = kcctest::line({5, 0, 10});
    // 0 and 10 are both at distance 5 from the seed; insertion order breaks it.
    CHECK(vals(tie, gonzalez(tie, 3, pid(tie, 5))) == std::vector<double>{5, 0, 10});
}

TEST_CASE("gonzalez restricted to a subset") {
    auto inst = line6();
    std::vector<PointId> uni = {pid(inst, 0), pid(inst, 10), pid(inst, 20)};
    auto out = gonzalez_subset(inst, uni, 3, uni[0]);
    CHECK(vals(inst, out) == std::vector<double>{0, 20, 10});

    std::vector<PointId> one = {pid(inst, 11)};
    CHECK(gonzalez_subset(inst, one, 1, one[0]) == one);
}

TEST_CASE("brute force optimum") {
    auto inst = line6();
    CHECK(brute_force_opt(inst, 3).radius == 1.0);
    CHECK(brute_force_opt(inst, 2).radius == 9.0);
    CHECK(brute_force_opt(inst, 1).radius == 11.0);  // center 10 or 11
    CHECK(brute_force_opt(inst, 6).radius == 0.0);
    CHECK(brute_force_opt(inst, 8).radius == 0.0);

    auto big = MetricInstance::euclidean(1);
    for (int i = 0; i < 21; ++i) big.add_point("p" + std::to_string(i), {double(i)});
    CHECK_THROWS_AS((void)brute_force_opt(big, 2), OracleSizeExceeded);
}

TEST_CASE("hochbaum-shmoys stays within twice the optimum") {
    std::mt19937_64 g(99);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 2 + g() % 11;
        std::size_t dim = 1 + g() % 3;
        auto inst = MetricInstance::euclidean(dim);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> c;
            for (std::size_t d = 0; d < dim; ++d)
                c.push_back(static_cast<double>(g() >> 11) * (1.0 / 9007199254740992.0));
            inst.add_point("p" + std::to_string(i), c);
        }
        int k = 1 + int(g() % 4);
        auto hs = hochbaum_shmoys(inst, k);
        auto opt = brute_force_opt(inst, k);
        CHECK(hs.radius >= opt.radius);
        CHECK(hs.radius <= 2 * opt.radius);
    }
}
