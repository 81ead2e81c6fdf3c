#include "doctest.h"

#include <vector>

#include "assoc/baselines.hpp"
#include "assoc/datagen.hpp"
#include "assoc/sort.hpp"
#include "assoc/verify.hpp"

using namespace assoc;

TEST_CASE("check_sorted_output flags a mutated element") {
    std::vector<Word> data = generate({WorkloadKind::uniform, 200, 100, 3, 0.0});
    const std::vector<Word> oracle = oracle_sort(data);
    std::vector<Word> out = oracle;
    CHECK(check_sorted_output(out, oracle).empty());
    out[42] ^= 1;
    CHECK_FALSE(check_sorted_output(out, oracle).empty());
}

TEST_CASE("a record fault surfaces as an oracle mismatch") {
    std::vector<Word> s{5, 9, 5, 5, 6, 6};
    const std::vector<Word> oracle = oracle_sort(s);
    const Word delta = find_min(s);
    const PassStats st = practice(s, delta);
    store_records(s, st.node_count);
    REQUIRE(st.node_count >= 2);
    // exchange two unequal records: totals stay consistent, order data lies
    REQUIRE(payload(s[0]) != payload(s[1]));
    swap_payloads(s[0], s[1]);
    partition_idle(s, st);
    retrieve(s, st);
    CHECK_FALSE(check_sorted_output(s, oracle).empty());
}

TEST_CASE("check_report_invariants flags doctored stats") {
    std::vector<Word> s = generate({WorkloadKind::uniform, 500, 5000, 11, 0.0});
    SortReport report = assoc_sort(s);
    CHECK(check_report_invariants(report, 500).empty());
    report.passes[0].node_count += 1;
    CHECK_FALSE(check_report_invariants(report, 500).empty());
}

TEST_CASE("checked_sort sorts and stays silent on good inputs") {
    for (const WorkloadKind kind : kAllWorkloadKinds) {
        std::vector<Word> s = generate({kind, 800, 1600, 17, 0.0});
        const std::vector<Word> expected = oracle_sort(s);
        CHECK(checked_sort(s).empty());
        CHECK(s == expected);
    }
}

TEST_CASE("check_workload accepts every kind") {
    for (const WorkloadKind kind : kAllWorkloadKinds) {
        const WorkloadSpec spec{kind, 300, 600, 23, 0.0};
        CHECK(check_workload(spec).empty());
    }
}

TEST_CASE("run_verify: zero trials is a clean no-op") {
    const VerifyResult result = run_verify({.trials = 0});
    CHECK(result.ok());
    CHECK(result.trials_run == 0);
}

TEST_CASE("run_verify: small campaign passes") {
    VerifyOptions options;
    options.trials = 200;
    options.max_n = 600;
    options.seed = 5;
    std::size_t progress_calls = 0;
    const VerifyResult result =
        run_verify(options, [&](std::size_t, std::size_t) { ++progress_calls; });
    CHECK(result.ok());
    CHECK(result.trials_run == 200);
    CHECK(progress_calls == 200);
}
