#include <string>
#include <vector>

#include "doctest.h"
#include "fault_suite.hpp"
#include "fixtures.hpp"
#include "kcc/fully_dynamic.hpp"
#include "kcc/snapshot.hpp"
#include "kcc/verifier.hpp"

using namespace kcc;
using kcctest::line6;
using kcctest::pid;

TEST_CASE("recourse is half the symmetric difference") {
    CHECK(recourse({0, 10, 20}, {1, 10, 20}) == 1);
    CHECK(recourse({0, 10, 20}, {0, 10, 20}) == 0);
    CHECK(recourse({20, 0, 10}, {0, 10, 20}) == 0);  // order is irrelevant
    CHECK(recourse({}, {}) == 0);
    CHECK(recourse({7}, {}) == 1);
    CHECK(recourse({7}, {7, 9}) == 1);
    CHECK(recourse({1, 2}, {3, 4}) == 2);
    CHECK(recourse({1, 2, 3}, {4, 5, 6, 7}) == 4);  // |diff| = 7, rounded up
}

TEST_CASE("a clean engine snapshot passes every applicable check") {
    auto inst = line6();
    FullyDynamic eng(inst, 3);
    auto snap = eng.snapshot();

    Verifier v(inst, VerifyMode::Brute);
    CHECK_FALSE(v.primed());
    v.prime(snap);
    CHECK(v.primed());

    auto verdict = v.step(snap);
    CHECK(verdict.ok);
    CHECK(verdict.checks.size() == 14);
    CHECK(verdict.recourse == 0);
    CHECK(verdict.cost == 1.0);
    CHECK(verdict.has_oracle);
    CHECK(verdict.rstar == 1.0);
    CHECK(verdict.ratio == 1.0);
    for (const auto& c : verdict.checks) CHECK(c.status != CheckStatus::Fail);
    REQUIRE(verdict.find("invariant2") != nullptr);
    CHECK(verdict.find("invariant2")->status == CheckStatus::Pass);
    CHECK(verdict.find("s_init_cover")->status == CheckStatus::Skipped);
    CHECK(verdict.find("ratio_vs_hs")->status == CheckStatus::Skipped);
    CHECK(verdict.find("nonexistent") == nullptr);
}

TEST_CASE("degenerate snapshots skip all checks") {
    auto inst = kcctest::line({0, 5});
    FullyDynamic eng(inst, 3);
    auto snap = eng.snapshot();
    REQUIRE(snap.degenerate);

    Verifier v(inst, VerifyMode::Brute);
    v.prime(snap);
    auto verdict = v.step(snap);
    CHECK(verdict.ok);
    for (const auto& c : verdict.checks) CHECK(c.status == CheckStatus::Skipped);
}

TEST_CASE("stepping an unprimed verifier fails") {
    auto inst = line6();
    FullyDynamic eng(inst, 3);
    Verifier v(inst, VerifyMode::None);
    CHECK_THROWS_AS((void)v.step(eng.snapshot()), IllegalState);
}

TEST_CASE("the exact oracle falls back to the static bound on large sets") {
    auto inst = MetricInstance::euclidean(1);
    for (int i = 0; i < 17; ++i) inst.add_point("p" + std::to_string(i), {double(i)});
    FullyDynamic eng(inst, 3);
    auto snap = eng.snapshot();

    Verifier v(inst, VerifyMode::Brute);
    v.prime(snap);
    auto verdict = v.step(snap);
    CHECK(verdict.ok);
    CHECK(verdict.find("ratio_vs_oracle")->status == CheckStatus::Skipped);
    CHECK(verdict.find("ratio_vs_hs")->status == CheckStatus::Pass);
    CHECK(verdict.has_oracle);
}

TEST_CASE("every injected fault is caught with a witness") {
    auto outcomes = kcctest::run_fault_suite();
    CHECK(outcomes.size() == 14);
    for (const auto& o : outcomes) {
        INFO("check ", o.target, " stray: ", o.stray);
        CHECK(o.target_failed);
        CHECK(o.has_witness);
        CHECK(o.siblings_clean);
    }
}

TEST_CASE("recourse counts degenerate transitions") {
    auto inst = kcctest::line({0, 1, 2, 3});
    FullyDynamic eng(inst, 3);
    auto active = eng.snapshot();
    REQUIRE_FALSE(active.degenerate);

    Verifier v(inst, VerifyMode::None);
    v.prime(active);
    auto dead = pid(inst, 3);
    inst.erase(dead);
    eng.erase(dead);
    auto degen = eng.snapshot();
    REQUIRE(degen.degenerate);
    auto verdict = v.step(degen);
    CHECK(verdict.recourse <= 1);
    for (const auto& c : verdict.checks) CHECK(c.status == CheckStatus::Skipped);
}
