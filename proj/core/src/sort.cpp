#include "assoc/sort.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoc {

namespace {

struct NoCounter {
    void add(std::size_t) noexcept {}
    static constexpr std::size_t total() noexcept { return 0; }
};

struct WriteCounter {
    std::size_t writes = 0;
    void add(std::size_t k) noexcept { writes += k; }
    std::size_t total() const noexcept { return writes; }
};

template <class Counter>
PassStats practice_impl(std::span<Word> s, Word delta, Counter& wc) {
    const std::size_t n = s.size();
    PassStats st;
    st.length = n;
    st.min_value = delta;

    std::size_t i = 0;
    while (i < n) {
        const Word w = s[i];
        if (is_tagged(w)) {  // already a node, skip
            ++i;
            continue;
        }
        assert(w >= delta);
        const Word offset = w - delta;
        if (offset >= n) {  // out of the practiced interval, defer
            ++st.deferred_count;
            st.deferred_min = std::min(st.deferred_min, w);
            ++i;
            continue;
        }
        const auto j = static_cast<std::size_t>(offset);
        if (!is_tagged(s[j])) {
            // First occurrence: the slot's old word parks at i, the slot
            // becomes a node. If the parked word came from the scanned
            // region it is already accounted for, so advance past it.
            s[i] = s[j];
            s[j] = make_node(0);
            wc.add(2);
            if (j <= i) ++i;
            ++st.node_count;
        } else {
            // Repeat occurrence: bump the record, leave the duplicate idle.
            s[j] = set_payload(s[j], payload(s[j]) + 1);
            wc.add(1);
            ++st.idle_count;
            ++i;
        }
    }
    assert(st.node_count + st.idle_count + st.deferred_count == n);
    return st;
}

template <class Counter>
void store_records_impl(std::span<Word> s, std::size_t node_count, Counter& wc) {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = node_count;
    while (k > 0) {
        assert(i < s.size());
        if (!is_tagged(s[i])) {
            ++i;
            continue;
        }
        swap_payloads(s[i], s[j]);
        wc.add(2);
        ++i;
        ++j;
        --k;
    }
}

template <class Counter>
void partition_idle_impl(std::span<Word> s, const PassStats& st, Counter& wc) {
    const Word delta = st.min_value;
    const Word n = st.length;
    std::size_t i = st.node_count;
    std::size_t j = st.node_count;
    std::size_t k = st.idle_count;
    while (k > 0) {
        assert(i < s.size());
        const Word v = payload(s[i]);
        assert(v >= delta);
        if (v - delta >= n) {  // out-of-interval payload stays behind
            ++i;
            continue;
        }
        swap_payloads(s[i], s[j]);
        wc.add(2);
        ++i;
        ++j;
        --k;
    }
}

template <class Counter>
void retrieve_impl(std::span<Word> s, const PassStats& st, Counter& wc) {
    std::size_t i = s.size();                         // scan cursor (one past)
    std::size_t rec = st.node_count;                  // next record slot (one past)
    std::size_t k = st.node_count + st.idle_count;    // write frontier (one past)
    while (k > 0) {
        assert(i > 0);
        --i;
        if (!is_tagged(s[i])) continue;
        const Word value = inverse_hash(i, st.min_value);
        // The write frontier may reach the record's own slot, so read the
        // record before the first store.
        const Word copies = payload(s[--rec]) + 1;
        for (Word c = 0; c < copies; ++c) {
            --k;
            s[k] = set_payload(s[k], value);
            wc.add(1);
        }
        s[i] = payload(s[i]);  // clear the tag, keep whatever payload is parked here
        wc.add(1);
    }
    assert(rec == 0);
}

template <class Counter>
PassStats sort_pass_impl(std::span<Word> s, Word delta, Counter& wc) {
    PassStats st = practice_impl(s, delta, wc);
    store_records_impl(s, st.node_count, wc);
    partition_idle_impl(s, st, wc);
    retrieve_impl(s, st, wc);
    return st;
}

template <class Counter>
SortReport assoc_sort_impl(std::span<Word> s, Counter& wc) {
    SortReport report;
    const std::size_t n = s.size();
    if (n == 0) return report;
    if (n > (std::size_t{1} << (kWordBits - 1)))
        throw std::invalid_argument("assoc_sort: length exceeds 2^63");

    Word lo = s[0];
    Word hi = s[0];
    for (const Word w : s) {
        if (is_tagged(w))
            throw std::invalid_argument(
                "assoc_sort: value exceeds the maximum payload 2^63-1");
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }
    report.beta = (static_cast<double>(hi - lo) + 1.0) / static_cast<double>(n);

    std::size_t start = 0;
    std::size_t remaining = n;
    Word delta = lo;
    while (remaining > 1) {
        const PassStats st = sort_pass_impl(s.subspan(start, remaining), delta, wc);
        report.passes.push_back(st);
        start += st.emitted();
        remaining = st.deferred_count;
        delta = st.deferred_min;
    }
    report.total_writes = wc.total();
    return report;
}

}  // namespace

Word find_min(std::span<const Word> buffer) {
    if (buffer.empty())
        throw std::invalid_argument("find_min: empty buffer");
    Word lo = buffer[0];
    for (const Word w : buffer) lo = std::min(lo, w);
    return lo;
}

PassStats practice(std::span<Word> buffer, Word delta) {
    NoCounter wc;
    return practice_impl(buffer, delta, wc);
}

void store_records(std::span<Word> buffer, std::size_t node_count) {
    NoCounter wc;
    store_records_impl(buffer, node_count, wc);
}

void partition_idle(std::span<Word> buffer, const PassStats& stats) {
    NoCounter wc;
    partition_idle_impl(buffer, stats, wc);
}

void retrieve(std::span<Word> buffer, const PassStats& stats) {
    NoCounter wc;
    retrieve_impl(buffer, stats, wc);
}

PassStats sort_pass(std::span<Word> buffer, Word delta) {
    NoCounter wc;
    return sort_pass_impl(buffer, delta, wc);
}

SortReport assoc_sort(std::span<Word> buffer) {
    NoCounter wc;
    return assoc_sort_impl(buffer, wc);
}

SortReport assoc_sort_counted(std::span<Word> buffer) {
    WriteCounter wc;
    return assoc_sort_impl(buffer, wc);
}

SortReport sort_full_universe(std::span<Word> buffer) {
    SortReport report;
    const std::size_t n = buffer.size();
    if (n == 0) return report;
    if (n > (std::size_t{1} << (kWordBits - 1)))
        throw std::invalid_argument("sort_full_universe: length exceeds 2^63");

    Word lo = buffer[0];
    Word hi = buffer[0];
    for (const Word w : buffer) {
        lo = std::min(lo, w);
        hi = std::max(hi, w);
    }

    const auto mid = std::partition(buffer.begin(), buffer.end(),
                                    [](Word w) { return w < kTagBit; });
    const auto low_size = static_cast<std::size_t>(mid - buffer.begin());
    const std::span<Word> low = buffer.first(low_size);
    const std::span<Word> high = buffer.subspan(low_size);

    for (Word& w : high) w -= kTagBit;
    SortReport low_report = assoc_sort(low);
    SortReport high_report = assoc_sort(high);
    for (Word& w : high) w += kTagBit;

    report.passes = std::move(low_report.passes);
    report.passes.insert(report.passes.end(), high_report.passes.begin(),
                         high_report.passes.end());
    report.total_writes = low_report.total_writes + high_report.total_writes;
    report.beta = (static_cast<double>(hi - lo) + 1.0) / static_cast<double>(n);
    return report;
}

}  // namespace assoc
