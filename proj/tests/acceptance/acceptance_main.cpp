// Acceptance gate: every release-blocking behavior of the sorting library,
// one line of output per criterion. Run with no arguments for the full
// gate or with a single criterion number. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "assoc/baselines.hpp"
#include "assoc/datagen.hpp"
#include "assoc/sort.hpp"
#include "assoc/verify.hpp"
#include "bench_runner.hpp"

using namespace assoc;

namespace {

bool criterion_oracle_equivalence() {
    VerifyOptions options;
    options.trials = 10000;
    options.max_n = 100000;
    options.seed = 20260810;
    const VerifyResult result =
        run_verify(options, [](std::size_t done, std::size_t total) {
            if (done % (total / 10) == 0)
                std::fprintf(stderr, "  criterion 1: %zu/%zu trials\n", done, total);
        });
    for (const VerifyFailure& failure : result.failures)
        std::fprintf(stderr, "  criterion 1 failure %s: %s\n",
                     to_token(failure.spec).c_str(), failure.reason.c_str());
    std::fprintf(stderr, "  criterion 1: %zu trials, %zu failures\n",
                 result.trials_run, result.failure_count);
    return result.ok();
}

bool criterion_one_pass_law() {
    const WorkloadKind kinds[] = {WorkloadKind::best_case, WorkloadKind::uniform,
                                  WorkloadKind::constant,  WorkloadKind::sorted,
                                  WorkloadKind::reversed};
    bool ok = true;
    SplitMix64 rng(7);
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
        WorkloadSpec spec;
        spec.kind = kinds[seed % std::size(kinds)];
        spec.n = 2 + rng.next_below(100000);
        spec.m = std::max<Word>(1, spec.n / (1 + seed % 3));  // m <= n
        spec.seed = seed;
        std::vector<Word> data = generate(spec);

        const auto [lo, hi] = std::minmax_element(data.begin(), data.end());
        const Word range = *hi - *lo;
        if (range >= data.size()) {
            std::fprintf(stderr, "  criterion 2: %s spans more than n values\n",
                         to_token(spec).c_str());
            ok = false;
            continue;
        }
        const SortReport report = assoc_sort(data);
        if (report.pass_count() != 1) {
            std::fprintf(stderr, "  criterion 2: %s took %zu passes\n",
                         to_token(spec).c_str(), report.pass_count());
            ok = false;
        }
    }
    return ok;
}

// Statistical check over 10 seeds per size: the mean pass count must sit
// within +/-2 of log2(n), the beta=2 solution of the pass recurrence.
bool criterion_average_case_passes() {
    bool ok = true;
    for (const unsigned log_n : {14u, 16u, 18u}) {
        const std::size_t n = std::size_t{1} << log_n;
        std::size_t k_min = SIZE_MAX;
        std::size_t k_max = 0;
        double k_sum = 0.0;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            std::vector<Word> data =
                generate({WorkloadKind::uniform, n, 2 * n, seed, 0.0});
            const SortReport report = assoc_sort(data);
            const std::size_t k = report.pass_count();
            k_min = std::min(k_min, k);
            k_max = std::max(k_max, k);
            k_sum += static_cast<double>(k);
        }
        const double k_mean = k_sum / 10.0;
        if (std::abs(k_mean - static_cast<double>(log_n)) > 2.0) ok = false;
        std::fprintf(stderr,
                     "  criterion 3: n=2^%u beta=2: mean k %.1f (range [%zu, %zu]), "
                     "target %u +/- 2\n",
                     log_n, k_mean, k_min, k_max, log_n);
    }
    return ok;
}

bool criterion_worst_case_bound() {
    bool ok = true;

    // Adversarial chain: every pass emits exactly one element.
    for (const std::size_t n : {4u, 100u, 1000u, 100000u}) {
        std::vector<Word> data = generate({WorkloadKind::worst_case, n, 1, 3, 0.0});
        const SortReport report = assoc_sort(data);
        bool chain_ok = report.pass_count() == data.size() - 1;
        for (const PassStats& pass : report.passes)
            chain_ok = chain_ok && pass.emitted() == 1;
        if (!chain_ok) {
            std::fprintf(stderr, "  criterion 4: chain n=%zu violated one-per-pass\n",
                         n);
            ok = false;
        }
    }

    // Pass-count bound k <= (beta*n - 1)/(n - 1) + 1 for uniform workloads.
    const double ratios[] = {0.01, 0.1, 1.0, 2.0, 10.0, 100.0};
    const std::size_t n = 10000;
    for (const double ratio : ratios) {
        std::size_t worst_k = 0;
        double bound = 0.0;
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const Word m = std::max<Word>(
                1, static_cast<Word>(std::llround(ratio * static_cast<double>(n))));
            std::vector<Word> data =
                generate({WorkloadKind::uniform, n, m, seed, 0.0});
            const SortReport report = assoc_sort(data);
            bound = (static_cast<double>(m) - 1.0) / (static_cast<double>(n) - 1.0) +
                    1.0;
            worst_k = std::max(worst_k, report.pass_count());
        }
        const bool within = static_cast<double>(worst_k) <= bound;
        std::fprintf(stderr,
                     "  criterion 4: uniform m/n=%-6g max k=%-5zu bound=%.2f %s\n",
                     ratio, worst_k, bound, within ? "ok" : "VIOLATED");
        if (!within) ok = false;
    }
    return ok;
}

bool criterion_total_work_bound() {
    bool ok = true;
    double worst_ratio = 0.0;
    const double ratios[] = {0.01, 0.1, 1.0, 2.0, 10.0, 100.0};
    for (const WorkloadKind kind : kAllWorkloadKinds) {
        for (const double ratio : ratios) {
            for (const std::size_t base_n : {1000u, 10000u, 100000u}) {
                const std::size_t n =
                    kind == WorkloadKind::worst_case ? std::min<std::size_t>(base_n, 4000)
                                                     : base_n;
                for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                    WorkloadSpec spec;
                    spec.kind = kind;
                    spec.n = n;
                    spec.m = std::max<Word>(
                        1,
                        static_cast<Word>(std::llround(ratio * static_cast<double>(n))));
                    spec.seed = seed;
                    std::vector<Word> data = generate(spec);
                    if (data.empty()) continue;
                    const SortReport report = assoc_sort(data);

                    std::size_t total_length = 0;
                    for (const PassStats& pass : report.passes)
                        total_length += pass.length;
                    const double budget =
                        (report.beta + 2.0) * static_cast<double>(data.size());
                    worst_ratio = std::max(
                        worst_ratio, static_cast<double>(total_length) / budget);
                    if (static_cast<double>(total_length) > budget) {
                        std::fprintf(stderr,
                                     "  criterion 5: %s total work %zu > budget %.0f\n",
                                     to_token(spec).c_str(), total_length, budget);
                        ok = false;
                    }
                }
            }
        }
    }
    std::fprintf(stderr, "  criterion 5: worst total-work/budget ratio %.3f\n",
                 worst_ratio);
    return ok;
}

std::uint64_t median_sort_ns(std::size_t n) {
    const std::vector<Word> data =
        generate({WorkloadKind::uniform, n, static_cast<Word>(n), 97, 0.0});
    std::vector<Word> work;
    std::vector<std::uint64_t> samples;
    using Clock = std::chrono::steady_clock;
    for (int run = 0; run < 10; ++run) {  // 1 warmup + 9 timed
        work = data;
        const auto t0 = Clock::now();
        assoc_sort(work);
        const auto t1 = Clock::now();
        if (run == 0) continue;
        samples.push_back(static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

bool criterion_linear_scaling() {
    const std::uint64_t small = median_sort_ns(std::size_t{1} << 20);
    const std::uint64_t large = median_sort_ns(std::size_t{1} << 21);
    const double factor =
        static_cast<double>(large) / static_cast<double>(std::max<std::uint64_t>(1, small));
    std::fprintf(stderr,
                 "  criterion 6: 2^20 -> %jd ns, 2^21 -> %jd ns, factor %.2f "
                 "(accepted band [1.6, 2.6])\n",
                 static_cast<std::intmax_t>(small), static_cast<std::intmax_t>(large),
                 factor);
    return factor >= 1.6 && factor <= 2.6;
}

bool criterion_ratio_grid() {
    const double ratios[] = {0.01, 0.1, 1.0, 10.0};
    const std::size_t n = 1000000;

    std::ofstream csv("ratio_grid.csv", std::ios::binary);
    if (!csv) {
        std::fprintf(stderr, "  criterion 7: cannot open ratio_grid.csv\n");
        return false;
    }
    csv << cli::kCsvHeader << '\n';

    bool ok = true;
    std::map<double, std::map<std::string, std::uint64_t>> medians;
    for (const double ratio : ratios) {
        WorkloadSpec spec;
        spec.kind = WorkloadKind::uniform;
        spec.n = n;
        spec.m = static_cast<Word>(std::llround(ratio * static_cast<double>(n)));
        spec.seed = 1;
        for (const std::string& algo : cli::known_algorithms()) {
            const cli::CellOutcome cell = cli::run_bench_cell(algo, spec, 3);
            if (!cell.record) {
                std::fprintf(stderr, "  criterion 7: %s\n", cell.error.c_str());
                ok = false;
                continue;
            }
            csv << cli::to_csv_line(*cell.record) << '\n';
            medians[ratio][algo] = cell.record->median_ns;
        }
    }
    csv.flush();

    // Directional observations only; multipliers are hardware-dependent.
    for (const double ratio : ratios) {
        const auto& row = medians[ratio];
        if (!row.count("assoc") || !row.count("radix_lsd") || !row.count("comparison"))
            continue;
        std::fprintf(stderr,
                     "  criterion 7: m/n=%-5g assoc %8.3f ms, radix_lsd/assoc %.2fx, "
                     "comparison/assoc %.2fx\n",
                     ratio, static_cast<double>(row.at("assoc")) / 1e6,
                     static_cast<double>(row.at("radix_lsd")) /
                         static_cast<double>(row.at("assoc")),
                     static_cast<double>(row.at("comparison")) /
                         static_cast<double>(row.at("assoc")));
    }
    std::fprintf(stderr, "  criterion 7: grid written to ratio_grid.csv\n");
    return ok;
}

bool criterion_full_universe() {
    SplitMix64 rng(2026);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 2 + rng.next_below(2000);
        std::vector<Word> data(n);
        for (Word& w : data) w = rng.next();          // spans both halves
        data[rng.next_below(n)] = kTagBit - 1;         // force values near the split
        data[rng.next_below(n)] = kTagBit;
        const std::vector<Word> expected = oracle_sort(data);
        sort_full_universe(data);
        if (data != expected) {
            std::fprintf(stderr, "  criterion 8: mismatch at trial %d\n", trial);
            return false;
        }
    }
    return true;
}

struct Criterion {
    int id;
    const char* title;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "oracle equivalence over the verification grid", criterion_oracle_equivalence},
    {2, "one-pass law for max-min+1 <= n", criterion_one_pass_law},
    {3, "average-case pass count near log2(n) at beta=2", criterion_average_case_passes},
    {4, "worst-case chain and uniform pass-count bound", criterion_worst_case_bound},
    {5, "total work bounded by (beta+2)*n", criterion_total_work_bound},
    {6, "linear time scaling at m = n", criterion_linear_scaling},
    {7, "benchmark ratio grid (informational)", criterion_ratio_grid},
    {8, "full-universe sorting around 2^63", criterion_full_universe},
};

}  // namespace

int main(int argc, char** argv) {
    int selected = 0;
    if (argc > 1) {
        selected = std::atoi(argv[1]);
        if (selected < 1 || selected > 8) {
            std::fprintf(stderr, "usage: %s [criterion 1..8]\n", argv[0]);
            return 2;
        }
    }

    int failures = 0;
    for (const Criterion& criterion : kCriteria) {
        if (selected != 0 && criterion.id != selected) continue;
        const bool passed = criterion.run();
        std::printf("[%s] criterion %d: %s\n", passed ? "PASS" : "FAIL",
                    criterion.id, criterion.title);
        std::fflush(stdout);
        if (!passed) ++failures;
    }
    return failures;
}
