#include "bench_runner.hpp"

#include <algorithm>
#include <chrono>
#include <span>

#include "assoc/baselines.hpp"
#include "assoc/sort.hpp"
#include "assoc/verify.hpp"

namespace assoc::cli {

namespace {

// Sorts the buffer with the named algorithm; returns the pass count for
// the associative sort, 0 for everything else.
std::size_t apply_algorithm(const std::string& name, std::span<Word> buffer) {
    if (name == "assoc") return assoc_sort(buffer).pass_count();
    switch (*parse_baseline(name)) {
        case BaselineKind::comparison:
            std::sort(buffer.begin(), buffer.end());
            return 0;
        case BaselineKind::counting:
            counting_sort(buffer);
            return 0;
        case BaselineKind::radix_lsd:
            radix_sort_lsd(buffer);
            return 0;
        case BaselineKind::bucket:
            bucket_sort(buffer);
            return 0;
    }
    return 0;
}

}  // namespace

const std::vector<std::string>& known_algorithms() {
    static const std::vector<std::string> names{"assoc", "comparison", "counting",
                                                "radix_lsd", "bucket"};
    return names;
}

bool is_known_algorithm(std::string_view name) {
    const auto& names = known_algorithms();
    return std::find(names.begin(), names.end(), name) != names.end();
}

CellOutcome run_bench_cell(const std::string& algorithm, const WorkloadSpec& spec,
                           std::size_t runs) {
    CellOutcome outcome;
    if (!is_known_algorithm(algorithm)) {
        outcome.error = "unknown algorithm '" + algorithm + "'";
        return outcome;
    }

    std::vector<Word> data;
    try {
        data = generate(spec);
    } catch (const std::exception& e) {
        outcome.error = std::string("generate failed: ") + e.what();
        return outcome;
    }
    if (data.empty() || runs == 0) {
        outcome.skipped = true;
        return outcome;
    }

    const std::vector<Word> oracle = oracle_sort(data);

    // Verification run; it also yields the pass count.
    std::vector<Word> work = data;
    std::size_t k_passes = 0;
    try {
        k_passes = apply_algorithm(algorithm, work);
    } catch (const std::exception& e) {
        outcome.error = algorithm + " threw on " + to_token(spec) + ": " + e.what();
        return outcome;
    }
    if (!check_sorted_output(work, oracle).empty()) {
        outcome.error = algorithm + " disagrees with the oracle on " + to_token(spec);
        return outcome;
    }

    using Clock = std::chrono::steady_clock;
    std::vector<std::uint64_t> samples;
    samples.reserve(runs);
    for (std::size_t r = 0; r < runs + 1; ++r) {  // first run is warmup
        work = data;
        const auto t0 = Clock::now();
        apply_algorithm(algorithm, work);
        const auto t1 = Clock::now();
        if (r == 0) continue;
        samples.push_back(static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    }
    std::sort(samples.begin(), samples.end());

    BenchRecord record;
    record.algorithm = algorithm;
    record.workload = to_token(spec);
    record.n = data.size();
    record.m = spec.m;
    record.runs = runs;
    record.median_ns = std::max<std::uint64_t>(1, samples[samples.size() / 2]);
    record.k_passes = k_passes;
    record.verified = true;
    outcome.record = record;
    return outcome;
}

std::string to_csv_line(const BenchRecord& record) {
    std::string line;
    line += record.algorithm;
    line += ',';
    line += record.workload;
    line += ',';
    line += std::to_string(record.n);
    line += ',';
    line += std::to_string(record.m);
    line += ',';
    line += std::to_string(record.runs);
    line += ',';
    line += std::to_string(record.median_ns);
    line += ',';
    line += std::to_string(record.k_passes);
    line += ',';
    line += record.verified ? "true" : "false";
    return line;
}

}  // namespace assoc::cli
