#pragma once

#include <cassert>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "assoc/word_model.hpp"

// In-place associative integer sort.
//
// One pass sorts every element of the interval [delta, delta+n-1], where
// delta is the minimum of the buffer, to the front of the buffer in O(n)
// time and O(1) extra space. A pass is the composition of four phases:
//
//   practice        map each in-interval value v to slot v-delta, creating
//                   a tagged node on first occurrence and counting further
//                   occurrences into the node's record
//   store_records   compact the node records to the buffer prefix with
//                   payload-only swaps (tag bits never move)
//   partition_idle  cluster the redundant duplicate payloads ahead of the
//                   out-of-interval payloads
//   retrieve        walk nodes right to left, pairing each with its stored
//                   record and expanding value (position+delta), record+1
//                   times, into the output region
//
// The driver repeats passes on the out-of-interval remainder until at most
// one element is left. Keys must fit in the low 63 bits (the MSB is the
// node tag); sort_full_universe lifts that restriction by partitioning
// around 2^63 and shifting the upper half down before sorting it.

namespace assoc {

// Counters for one pass over a sublist of length `length`. Every element
// is exactly one of: node creator, idle duplicate, or deferred to the next
// pass, so node_count + idle_count + deferred_count == length.
struct PassStats {
    std::size_t length = 0;       // n for this pass
    Word min_value = 0;           // delta, minimum of the sublist
    std::size_t node_count = 0;   // distinct practiced values
    std::size_t idle_count = 0;   // duplicate occurrences of practiced values
    std::size_t deferred_count = 0;  // out-of-interval elements
    Word deferred_min = kMaxPayload; // minimum deferred value; only
                                     // meaningful when deferred_count > 0

    // Elements emitted in sorted order by this pass.
    std::size_t emitted() const noexcept { return node_count + idle_count; }
};

struct SortReport {
    std::vector<PassStats> passes;
    std::size_t total_writes = 0;  // word stores; filled by the *_counted entry points
    double beta = 0.0;             // range/length ratio m/n of the original input

    std::size_t pass_count() const noexcept { return passes.size(); }
};

// Partial monotone bijective hash: slot for `value` in the interval
// [delta, delta+n-1], or nullopt when the value falls outside it.
// Requires value >= delta.
constexpr std::optional<std::size_t> hash_index(Word value, Word delta,
                                                std::size_t n) noexcept {
    assert(value >= delta);
    const Word offset = value - delta;
    if (offset >= n) return std::nullopt;
    return static_cast<std::size_t>(offset);
}

// Inverse of hash_index on the interval: the value a node at `position`
// stands for.
constexpr Word inverse_hash(std::size_t position, Word delta) noexcept {
    return delta + static_cast<Word>(position);
}

// Minimum of a non-empty untagged buffer. Throws std::invalid_argument on
// an empty span.
Word find_min(std::span<const Word> buffer);

// Phase entry points. Preconditions are caller contracts: `practice`
// expects an untagged buffer with delta == min, the later phases expect
// the buffer exactly as the previous phase left it.
PassStats practice(std::span<Word> buffer, Word delta);
void store_records(std::span<Word> buffer, std::size_t node_count);
void partition_idle(std::span<Word> buffer, const PassStats& stats);
void retrieve(std::span<Word> buffer, const PassStats& stats);

// practice -> store_records -> partition_idle -> retrieve. Afterwards the
// first emitted() payloads are sorted ascending, the tail holds the
// deferred values, and no tag bits are set.
PassStats sort_pass(std::span<Word> buffer, Word delta);

// Sorts the whole buffer ascending by repeated passes. All values must be
// <= kMaxPayload (throws std::invalid_argument otherwise). The _counted
// variant additionally tallies every word store into total_writes; the
// plain variant compiles the counting out.
SortReport assoc_sort(std::span<Word> buffer);
SortReport assoc_sort_counted(std::span<Word> buffer);

// Full 64-bit universe: unstable in-place partition around 2^63, shift the
// upper part down, sort both parts, shift back.
SortReport sort_full_universe(std::span<Word> buffer);

}  // namespace assoc
