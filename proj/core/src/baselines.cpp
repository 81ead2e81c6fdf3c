#include "assoc/baselines.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <stdexcept>
#include <string>

namespace assoc {

std::string_view to_string(BaselineKind kind) noexcept {
    switch (kind) {
        case BaselineKind::comparison: return "comparison";
        case BaselineKind::counting: return "counting";
        case BaselineKind::radix_lsd: return "radix_lsd";
        case BaselineKind::bucket: return "bucket";
    }
    return "?";
}

std::optional<BaselineKind> parse_baseline(std::string_view name) noexcept {
    if (name == "comparison") return BaselineKind::comparison;
    if (name == "counting") return BaselineKind::counting;
    if (name == "radix_lsd") return BaselineKind::radix_lsd;
    if (name == "bucket") return BaselineKind::bucket;
    return std::nullopt;
}

std::vector<Word> oracle_sort(std::span<const Word> buffer) {
    std::vector<Word> out(buffer.begin(), buffer.end());
    std::sort(out.begin(), out.end());
    return out;
}

void counting_sort(std::span<Word> buffer, std::size_t max_table_entries) {
    if (buffer.empty()) return;
    const auto [lo_it, hi_it] = std::minmax_element(buffer.begin(), buffer.end());
    const Word lo = *lo_it;
    const Word range = *hi_it - lo;  // m - 1
    if (range >= max_table_entries)
        throw std::runtime_error("counting_sort: range " + std::to_string(range + 1) +
                                 " exceeds the table cap " +
                                 std::to_string(max_table_entries));

    std::vector<std::size_t> counts(static_cast<std::size_t>(range) + 1, 0);
    for (const Word w : buffer) ++counts[static_cast<std::size_t>(w - lo)];

    std::size_t out = 0;
    for (std::size_t v = 0; v < counts.size(); ++v) {
        for (std::size_t c = counts[v]; c > 0; --c)
            buffer[out++] = lo + static_cast<Word>(v);
    }
}

void radix_sort_lsd(std::span<Word> buffer) {
    const std::size_t n = buffer.size();
    if (n < 2) return;

    constexpr unsigned kDigitBits = 8;
    constexpr std::size_t kBuckets = 1u << kDigitBits;
    constexpr unsigned kPasses = kWordBits / kDigitBits;

    // One scan builds the histograms of all digit positions.
    std::array<std::array<std::size_t, kBuckets>, kPasses> counts{};
    for (const Word w : buffer) {
        for (unsigned d = 0; d < kPasses; ++d)
            ++counts[d][(w >> (d * kDigitBits)) & (kBuckets - 1)];
    }

    std::vector<Word> scratch(n);
    Word* src = buffer.data();
    Word* dst = scratch.data();
    for (unsigned d = 0; d < kPasses; ++d) {
        auto& count = counts[d];
        // A pass whose digit is constant would be the identity permutation.
        const bool constant = std::any_of(count.begin(), count.end(),
                                          [n](std::size_t c) { return c == n; });
        if (constant) continue;

        std::size_t sum = 0;
        for (std::size_t b = 0; b < kBuckets; ++b) {
            const std::size_t c = count[b];
            count[b] = sum;
            sum += c;
        }
        const unsigned shift = d * kDigitBits;
        for (std::size_t i = 0; i < n; ++i)
            dst[count[(src[i] >> shift) & (kBuckets - 1)]++] = src[i];
        std::swap(src, dst);
    }
    if (src != buffer.data())
        std::memcpy(buffer.data(), src, n * sizeof(Word));
}

void bucket_sort(std::span<Word> buffer) {
    const std::size_t n = buffer.size();
    if (n < 2) return;
    const auto [lo_it, hi_it] = std::minmax_element(buffer.begin(), buffer.end());
    const Word lo = *lo_it;
    const Word hi = *hi_it;
    if (lo == hi) return;

    // bucket = floor((v - lo) * n / m); the 128-bit product keeps the full
    // 64-bit range exact.
    const unsigned __int128 m = static_cast<unsigned __int128>(hi - lo) + 1;
    std::vector<std::vector<Word>> buckets(n);
    for (const Word w : buffer) {
        const auto b = static_cast<std::size_t>(
            static_cast<unsigned __int128>(w - lo) * n / m);
        buckets[b].push_back(w);
    }

    std::size_t out = 0;
    for (auto& bucket : buckets) {
        for (std::size_t i = 1; i < bucket.size(); ++i) {  // insertion sort
            const Word key = bucket[i];
            std::size_t j = i;
            while (j > 0 && bucket[j - 1] > key) {
                bucket[j] = bucket[j - 1];
                --j;
            }
            bucket[j] = key;
        }
        for (const Word w : bucket) buffer[out++] = w;
    }
}

}  // namespace assoc
