#include "assoc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "assoc/baselines.hpp"

namespace assoc {

namespace {

// Full multiset reconstruction is O(n log n) per pass; above this length
// the cheaper O(n) scans still cover counts, records, and tag accounting.
constexpr std::size_t kDeepCheckLimit = 4096;
constexpr std::size_t kMaxProblems = 16;

void note(std::vector<std::string>& problems, std::string msg) {
    if (problems.size() < kMaxProblems) problems.push_back(std::move(msg));
}

}  // namespace

std::vector<std::string> check_sorted_output(std::span<const Word> output,
                                             std::span<const Word> oracle) {
    std::vector<std::string> problems;
    if (output.size() != oracle.size()) {
        note(problems, "output length " + std::to_string(output.size()) +
                           " != oracle length " + std::to_string(oracle.size()));
        return problems;
    }
    for (std::size_t i = 0; i < output.size(); ++i) {
        if (output[i] != oracle[i]) {
            note(problems, "mismatch at index " + std::to_string(i) + ": got " +
                               std::to_string(output[i]) + ", oracle has " +
                               std::to_string(oracle[i]));
            break;
        }
    }
    return problems;
}

std::vector<std::string> check_report_invariants(const SortReport& report,
                                                 std::size_t n) {
    std::vector<std::string> problems;
    std::size_t emitted_total = 0;
    std::size_t length_total = 0;
    for (std::size_t t = 0; t < report.passes.size(); ++t) {
        const PassStats& pass = report.passes[t];
        const std::string tag = "pass " + std::to_string(t) + ": ";
        if (pass.node_count + pass.idle_count + pass.deferred_count != pass.length)
            note(problems, tag + "node+idle+deferred != length");
        if (pass.length >= 1 && pass.node_count == 0)
            note(problems, tag + "no node created");
        if (pass.deferred_count > 0 &&
            pass.deferred_min < pass.min_value + static_cast<Word>(pass.length))
            note(problems, tag + "deferred_min inside the practiced interval");
        if (t == 0 && pass.length != n)
            note(problems, tag + "first pass does not cover the input");
        if (t > 0) {
            const PassStats& prev = report.passes[t - 1];
            if (pass.length != prev.deferred_count)
                note(problems, tag + "length != previous deferred_count");
            if (pass.min_value != prev.deferred_min)
                note(problems, tag + "min != previous deferred_min");
        }
        emitted_total += pass.emitted();
        length_total += pass.length;
    }

    if (report.passes.empty()) {
        if (n > 1) note(problems, "no passes recorded for n > 1");
    } else {
        const std::size_t trailing = report.passes.back().deferred_count;
        if (trailing > 1)
            note(problems, "driver stopped with " + std::to_string(trailing) +
                               " elements left");
        if (emitted_total + trailing != n)
            note(problems, "emitted total " + std::to_string(emitted_total) +
                               " + trailing " + std::to_string(trailing) +
                               " != n " + std::to_string(n));
    }

    // Total work: the sum of pass lengths is bounded by (beta + 2) * n.
    if (n > 0 && static_cast<double>(length_total) >
                     (report.beta + 2.0) * static_cast<double>(n))
        note(problems, "total pass length " + std::to_string(length_total) +
                           " exceeds (beta+2)*n");
    return problems;
}

std::vector<std::string> checked_sort(std::span<Word> s) {
    std::vector<std::string> problems;
    const std::size_t n = s.size();
    if (n == 0) return problems;

    Word delta = s[0];
    for (const Word w : s) {
        if (is_tagged(w)) {
            note(problems, "input already carries a tag");
            return problems;
        }
        delta = std::min(delta, w);
    }

    std::vector<std::size_t> node_pos;
    std::vector<Word> node_rec;
    std::vector<Word> before;
    std::vector<Word> practiced;
    std::vector<Word> merged;
    std::vector<Word> deferred_values;

    std::size_t start = 0;
    std::size_t remaining = n;
    std::size_t pass_index = 0;
    while (remaining > 1 && problems.size() < kMaxProblems) {
        const std::span<Word> sub = s.subspan(start, remaining);
        // Multiset reconstruction sorts per pass; sample it so chains with
        // thousands of passes stay affordable. The O(n) scans run always.
        const bool deep = remaining <= kDeepCheckLimit &&
                          (pass_index < 8 || pass_index % 32 == 0);
        if (deep) before.assign(sub.begin(), sub.end());

        const PassStats st = practice(sub, delta);
        if (st.node_count + st.idle_count + st.deferred_count != remaining)
            note(problems, "practice: node+idle+deferred != length");
        if (st.node_count == 0) note(problems, "practice: no node created");

        node_pos.clear();
        node_rec.clear();
        deferred_values.clear();
        std::size_t record_sum = 0;
        std::size_t out_count = 0;
        Word out_min = kMaxPayload;
        for (std::size_t p = 0; p < sub.size(); ++p) {
            const Word w = sub[p];
            if (is_tagged(w)) {
                node_pos.push_back(p);
                node_rec.push_back(payload(w));
                record_sum += static_cast<std::size_t>(payload(w));
            } else if (w < delta) {
                note(problems, "practice: untagged value below delta");
            } else if (w - delta >= remaining) {
                ++out_count;
                out_min = std::min(out_min, w);
                if (deep) deferred_values.push_back(w);
            }
        }
        if (node_pos.size() != st.node_count)
            note(problems, "practice: tag count != node_count");
        if (record_sum != st.idle_count)
            note(problems, "practice: record sum != idle_count");
        if (out_count != st.deferred_count)
            note(problems, "practice: out-of-interval count != deferred_count");
        if (st.deferred_count > 0 && out_min != st.deferred_min)
            note(problems, "practice: deferred_min wrong");
        if (deep) {
            // node_pos is ascending, so the practiced expansion comes out
            // already sorted.
            practiced.clear();
            for (std::size_t t = 0; t < node_pos.size(); ++t) {
                const Word value = inverse_hash(node_pos[t], delta);
                for (Word c = 0; c <= node_rec[t]; ++c) practiced.push_back(value);
            }
            merged = practiced;
            merged.insert(merged.end(), deferred_values.begin(),
                          deferred_values.end());
            std::sort(merged.begin(), merged.end());
            std::sort(before.begin(), before.end());
            if (merged != before)
                note(problems, "practice: reconstructed multiset differs from input");
        }

        store_records(sub, st.node_count);
        {
            std::size_t cursor = 0;
            bool tags_ok = true;
            bool records_ok = true;
            for (std::size_t p = 0; p < sub.size(); ++p) {
                if (p < st.node_count && payload(sub[p]) != node_rec[p])
                    records_ok = false;
                if (is_tagged(sub[p])) {
                    if (cursor == node_pos.size() || node_pos[cursor] != p)
                        tags_ok = false;
                    else
                        ++cursor;
                }
            }
            if (!tags_ok || cursor != node_pos.size())
                note(problems, "store_records moved a tag bit");
            if (!records_ok)
                note(problems, "store_records: records not in node order");
        }

        partition_idle(sub, st);
        {
            std::size_t cursor = 0;
            bool tags_ok = true;
            bool sides_ok = true;
            for (std::size_t p = 0; p < sub.size(); ++p) {
                if (is_tagged(sub[p])) {
                    if (cursor == node_pos.size() || node_pos[cursor] != p)
                        tags_ok = false;
                    else
                        ++cursor;
                }
                if (p >= st.node_count) {
                    const Word v = payload(sub[p]);
                    const bool in_interval = v >= delta && v - delta < remaining;
                    if (in_interval != (p < st.node_count + st.idle_count))
                        sides_ok = false;
                }
            }
            if (!tags_ok || cursor != node_pos.size())
                note(problems, "partition_idle moved a tag bit");
            if (!sides_ok)
                note(problems, "partition_idle: idle/deferred split wrong");
        }

        retrieve(sub, st);
        const std::size_t emitted = st.emitted();
        {
            bool clean = true;
            bool ordered = true;
            for (std::size_t p = 0; p < sub.size(); ++p) {
                if (is_tagged(sub[p])) clean = false;
                if (p > 0 && p < emitted && sub[p - 1] > sub[p]) ordered = false;
            }
            if (!clean) note(problems, "retrieve left a residual tag");
            if (!ordered) note(problems, "retrieve: emitted prefix not sorted");
        }
        if (deep) {
            if (!std::equal(practiced.begin(), practiced.end(), sub.begin(),
                            sub.begin() + emitted))
                note(problems, "retrieve: emitted prefix multiset differs");
            std::sort(deferred_values.begin(), deferred_values.end());
            std::vector<Word> suffix(sub.begin() + emitted, sub.end());
            std::sort(suffix.begin(), suffix.end());
            if (suffix != deferred_values)
                note(problems, "retrieve: deferred suffix multiset differs");
        }

        start += emitted;
        remaining = st.deferred_count;
        delta = st.deferred_min;
        ++pass_index;
    }
    return problems;
}

std::vector<std::string> check_workload(const WorkloadSpec& spec,
                                        bool phase_checks) {
    std::vector<std::string> problems;
    std::vector<Word> data;
    try {
        data = generate(spec);
    } catch (const std::exception& e) {
        note(problems, std::string("generate threw: ") + e.what());
        return problems;
    }
    const std::vector<Word> oracle = oracle_sort(data);

    std::vector<Word> work = data;
    SortReport report;
    try {
        report = assoc_sort(work);
    } catch (const std::exception& e) {
        note(problems, std::string("assoc_sort threw: ") + e.what());
        return problems;
    }

    for (auto& p : check_sorted_output(work, oracle)) note(problems, std::move(p));
    for (auto& p : check_report_invariants(report, data.size()))
        note(problems, std::move(p));

    // One-pass law: when the whole range fits one interval, one pass sorts.
    if (data.size() >= 2) {
        const Word range = oracle.back() - oracle.front();
        if (range < data.size() && report.pass_count() != 1)
            note(problems, "range <= n but pass count is " +
                               std::to_string(report.pass_count()));
    }

    if (phase_checks) {
        std::vector<Word> replica = data;
        for (auto& p : checked_sort(replica)) note(problems, std::move(p));
        for (auto& p : check_sorted_output(replica, oracle))
            note(problems, "replica: " + std::move(p));
    }
    return problems;
}

VerifyResult run_verify(const VerifyOptions& options, const ProgressFn& progress) {
    static constexpr double kRatios[] = {0.01, 0.1, 1.0, 2.0, 10.0, 100.0};
    constexpr std::size_t kKinds = std::size(kAllWorkloadKinds);

    VerifyResult result;
    SplitMix64 rng(options.seed);
    for (std::size_t t = 0; t < options.trials; ++t) {
        const WorkloadKind kind = kAllWorkloadKinds[t % kKinds];
        const double ratio = kRatios[(t / kKinds) % std::size(kRatios)];
        const std::size_t cap = kind == WorkloadKind::worst_case
                                    ? std::min(options.max_n, options.max_n_worst_case)
                                    : options.max_n;

        WorkloadSpec spec;
        spec.kind = kind;
        // Log-skewed lengths: small inputs carry most of the edge cases,
        // while a sixteenth of the trials still span the full [0, cap].
        spec.n = static_cast<std::size_t>(rng.next_below(cap + 1) >>
                                          rng.next_below(16));
        spec.m = std::max<Word>(
            1, static_cast<Word>(std::llround(ratio * static_cast<double>(spec.n))));
        spec.seed = rng.next();

        const auto problems = check_workload(spec, options.phase_checks);
        ++result.trials_run;
        if (!problems.empty()) {
            ++result.failure_count;
            if (result.failures.size() < VerifyResult::kMaxStoredFailures)
                result.failures.push_back({spec, problems.front()});
        }
        if (progress) progress(t + 1, options.trials);
    }
    return result;
}

}  // namespace assoc
