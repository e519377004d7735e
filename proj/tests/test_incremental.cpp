#include <cmath>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "kcc/incremental.hpp"
#include "kcc/generators.hpp"
#include "kcc/runner.hpp"

using namespace kcc;
using kcctest::line6;
using kcctest::pid;
using kcctest::vals;

TEST_CASE("preprocessing on the line fixture") {
    auto inst = line6();
    Incremental eng(inst, 3);
    CHECK_FALSE(eng.degenerate());
    CHECK(eng.base_radius() == 1.0);
    CHECK(eng.level() == 0);

    auto s = eng.snapshot();
    CHECK(s.has_level);
    CHECK(s.radius == 1.0);
    CHECK(s.radius_prev == 0.5);
    CHECK(vals(inst, s.centers()) == std::vector<double>{0, 10, 20});
    CHECK(vals(inst, s.s_init) == std::vector<double>{0, 10, 20});

    auto two = kcctest::line({0, 8});
    Incremental e2(two, 1);
    CHECK(e2.base_radius() == 8.0);
    CHECK(e2.radius_at(1) == 16.0);
    CHECK(e2.radius_at(-2) == 2.0);
}

TEST_CASE("deletions are rejected") {
    auto inst = line6();
    Incremental eng(inst, 3);
    CHECK_THROWS_AS(eng.erase(pid(inst, 0)), UnsupportedOperation);
}

TEST_CASE("covered insert is a no-op") {
    auto inst = line6();
    Incremental eng(inst, 3);
    auto before = eng.centers();
    auto p = inst.add_point("10.5", {10.5});
    eng.insert(p);
    CHECK(eng.centers() == before);
    CHECK(eng.level() == 0);
}

TEST_CASE("far insert doubles the radius and reorders greedily") {
    auto inst = line6();
    Incremental eng(inst, 3);
    auto before = eng.centers();

    auto p = inst.add_point("30", {30});
    eng.insert(p);
    auto s = eng.snapshot();
    CHECK(recourse(before, s.centers()) == 0);
    CHECK(eng.level() == 4);
    CHECK(s.radius == 16.0);
    CHECK(vals(inst, eng.centers()) == std::vector<double>{0, 20, 10});
    CHECK(vals(inst, s.s_init) == std::vector<double>{0, 20, 10});
}

TEST_CASE("uncovered insert replaces one of the closest pair") {
    auto inst = kcctest::line({0, 1, 50});
    auto S = inst.live();
    Incremental eng(inst, 3, 0, 2.0, S, {});
    auto before = eng.centers();

    auto p = inst.add_point("100", {100});
    eng.insert(p);
    CHECK(recourse(before, eng.centers()) == 1);
    CHECK(vals(inst, eng.centers()) == std::vector<double>{0, 100, 50});
    CHECK(eng.level() == 0);
}

TEST_CASE("closest-pair tie picks the largest slot index") {
    auto inst = kcctest::line({0, 1, 10, 11});
    Incremental eng(inst, 4, 0, 2.0, inst.live(), {});

    auto p = inst.add_point("100", {100});
    eng.insert(p);
    CHECK(vals(inst, eng.centers()) == std::vector<double>{0, 1, 10, 100});
}

TEST_CASE("doubling can still end with a replacement") {
    auto inst = kcctest::line({0, 3});
    Incremental eng(inst, 2, 0, 1.0, inst.live(), {});

    auto p = inst.add_point("100", {100});
    eng.insert(p);
    CHECK(eng.level() == 2);
    CHECK(vals(inst, eng.centers()) == std::vector<double>{0, 100});
}

TEST_CASE("a lone center absorbs everything through doubling") {
    auto inst = kcctest::line({0, 8});
    Incremental eng(inst, 1);
    auto p = inst.add_point("100", {100});
    eng.insert(p);
    CHECK(eng.level() == 4);
    CHECK(eng.snapshot().radius == 128.0);
    CHECK(vals(inst, eng.centers()) == std::vector<double>{0});
}

TEST_CASE("degenerate growth then activation") {
    auto inst = MetricInstance::euclidean(1);
    Incremental eng(inst, 2);
    eng.insert(inst.add_point("0", {0}));
    eng.insert(inst.add_point("5", {5}));
    CHECK(eng.degenerate());
    auto before = eng.snapshot().centers();

    eng.insert(inst.add_point("7", {7}));
    CHECK_FALSE(eng.degenerate());
    CHECK(eng.base_radius() == 2.0);
    CHECK(recourse(before, eng.snapshot().centers()) == 0);
    CHECK(vals(inst, eng.centers()) == std::vector<double>{0, 5});
}

TEST_CASE("level and radius march together and never fall") {
    auto stream = gen_random(200, 2, 31, 0.0);
    auto inst = MetricInstance::euclidean(2);
    Incremental eng(inst, 5);
    long last_level = -1000;
    for (const auto& it : stream.items) {
        auto id = inst.add_point(it.id, it.coords);
        eng.insert(id);
        if (eng.degenerate()) continue;
        auto s = eng.snapshot();
        CHECK(s.level >= last_level);
        last_level = s.level;
        CHECK(s.radius == std::ldexp(eng.base_radius(), int(s.level)));
    }
}

TEST_CASE("verified random insert streams") {
    auto small = gen_random(14, 1, 41, 0.0);
    RunOptions opt;
    opt.algo = Algo::Incremental;
    opt.k = 3;
    opt.verify = VerifyMode::Brute;
    auto res = run_stream(small, opt, nullptr);
    CHECK(res.exit_code == 0);
    CHECK(res.max_recourse <= 1);

    auto big = gen_random(300, 3, 43, 0.0);
    opt.k = 7;
    opt.verify = VerifyMode::None;
    auto res2 = run_stream(big, opt, nullptr);
    CHECK(res2.exit_code == 0);
    CHECK(res2.max_recourse <= 1);
}
