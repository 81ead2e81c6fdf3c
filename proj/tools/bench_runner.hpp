#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/datagen.hpp"
#include "assoc/word_model.hpp"

// Grid benchmark machinery. Each cell (algorithm x workload) is verified
// once against the comparison oracle, then timed on fresh copies: one
// warmup plus `runs` measured repetitions, median reported. Unverified
// timings are never emitted.

namespace assoc::cli {

inline constexpr std::string_view kCsvHeader =
    "algorithm,workload,n,m,runs,median_ns,k_passes,verified";

struct BenchRecord {
    std::string algorithm;
    std::string workload;  // spec token
    std::size_t n = 0;
    Word m = 0;
    std::size_t runs = 0;
    std::uint64_t median_ns = 0;
    std::size_t k_passes = 0;  // assoc only, 0 otherwise
    bool verified = false;
};

// "assoc" plus every baseline name.
const std::vector<std::string>& known_algorithms();
bool is_known_algorithm(std::string_view name);

struct CellOutcome {
    std::optional<BenchRecord> record;
    std::string error;     // verification or setup failure
    bool skipped = false;  // empty workload, rejected before timing
};

CellOutcome run_bench_cell(const std::string& algorithm, const WorkloadSpec& spec,
                           std::size_t runs);

std::string to_csv_line(const BenchRecord& record);

}  // namespace assoc::cli
