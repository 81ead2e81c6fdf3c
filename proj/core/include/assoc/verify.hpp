#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "assoc/datagen.hpp"
#include "assoc/sort.hpp"

// Differential verification: random workloads are sorted by assoc_sort and
// compared element for element against the comparison oracle, while the
// pass statistics are checked against the structural invariants of the
// algorithm (per-pass conservation, record sums, tag accounting, the
// one-pass law, and the total-work bound).

namespace assoc {

// Mismatch between an output buffer and its oracle, as human-readable
// problem strings (empty means the buffers agree).
std::vector<std::string> check_sorted_output(std::span<const Word> output,
                                             std::span<const Word> oracle);

// Structural invariants of a finished report for an input of length n.
std::vector<std::string> check_report_invariants(const SortReport& report,
                                                 std::size_t n);

// Phase-stepped replica of assoc_sort: runs practice / store_records /
// partition_idle / retrieve one at a time, validating the buffer between
// phases (tag counts, record sums, tag-position stability, residual tags).
// Sorts the buffer as a side effect and reports every violation found.
std::vector<std::string> checked_sort(std::span<Word> buffer);

// Everything above for one generated workload.
std::vector<std::string> check_workload(const WorkloadSpec& spec,
                                        bool phase_checks = true);

struct VerifyOptions {
    std::size_t trials = 10000;
    std::size_t max_n = 100000;
    std::uint64_t seed = 1;
    bool phase_checks = true;
    // The adversarial chain costs Theta(n^2) total work, so its trials draw
    // n from a smaller range to keep a full campaign inside a few minutes.
    std::size_t max_n_worst_case = 4000;
};

struct VerifyFailure {
    WorkloadSpec spec;
    std::string reason;
};

struct VerifyResult {
    std::size_t trials_run = 0;
    std::vector<VerifyFailure> failures;  // at most kMaxStoredFailures kept
    std::size_t failure_count = 0;

    bool ok() const noexcept { return failure_count == 0; }
    static constexpr std::size_t kMaxStoredFailures = 16;
};

using ProgressFn = std::function<void(std::size_t done, std::size_t total)>;

// Runs `trials` workloads cycling through every workload kind and the
// range ratios m/n in {0.01, 0.1, 1, 2, 10, 100}, with n drawn from
// [0, max_n].
VerifyResult run_verify(const VerifyOptions& options,
                        const ProgressFn& progress = {});

}  // namespace assoc
