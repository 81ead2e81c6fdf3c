#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "assoc/word_model.hpp"

// Reference sorts: correctness oracles for differential testing and
// competitors for the benchmark grid.

namespace assoc {

enum class BaselineKind { comparison, counting, radix_lsd, bucket };

std::string_view to_string(BaselineKind kind) noexcept;
std::optional<BaselineKind> parse_baseline(std::string_view name) noexcept;

// Trusted comparison sort on a copy; the ground truth for every
// differential check.
std::vector<Word> oracle_sort(std::span<const Word> buffer);

inline constexpr std::size_t kCountingTableCap = std::size_t{1} << 28;

// Distribution counting sort with a Theta(range) count table. Throws
// std::runtime_error when the range exceeds max_table_entries.
void counting_sort(std::span<Word> buffer,
                   std::size_t max_table_entries = kCountingTableCap);

// Byte-wise LSD radix sort with a Theta(n) scratch buffer; passes whose
// digit is constant across the list are skipped.
void radix_sort_lsd(std::span<Word> buffer);

// n buckets over [min, max], insertion sort within each bucket.
void bucket_sort(std::span<Word> buffer);

}  // namespace assoc
