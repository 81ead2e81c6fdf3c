#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "assoc/baselines.hpp"
#include "assoc/datagen.hpp"
#include "assoc/sort.hpp"
#include "assoc/verify.hpp"
#include "bench_runner.hpp"
#include "file_io.hpp"

// Exit statuses: 0 ok, 1 verification failure, 2 usage or I/O error.

namespace {

using namespace assoc;

struct SortOptions {
    std::string input;
    std::string output;
    std::string format = "text";
    unsigned word_bytes = 8;
    bool full_universe = false;
};

int run_sort(const SortOptions& opt) {
    if (opt.format == "text") {
        cli::TextData data = cli::read_text(opt.input, opt.full_universe);
        if (opt.full_universe || data.signed_values)
            sort_full_universe(data.values);
        else
            assoc_sort(data.values);
        cli::write_text(opt.output, data.values, data.signed_values);
    } else {
        std::vector<Word> values =
            cli::read_binary(opt.input, opt.word_bytes, opt.full_universe);
        if (opt.full_universe)
            sort_full_universe(values);
        else
            assoc_sort(values);
        cli::write_binary(opt.output, values, opt.word_bytes);
    }
    return 0;
}

struct VerifyCliOptions {
    std::size_t trials = 10000;
    std::size_t max_n = 100000;
    std::uint64_t seed = 1;
};

int run_verify_cmd(const VerifyCliOptions& opt) {
    VerifyOptions options;
    options.trials = opt.trials;
    options.max_n = opt.max_n;
    options.seed = opt.seed;

    const std::size_t step = std::max<std::size_t>(1, opt.trials / 10);
    const VerifyResult result =
        run_verify(options, [&](std::size_t done, std::size_t total) {
            if (done % step == 0 || done == total)
                std::fprintf(stderr, "verify: %zu/%zu trials\n", done, total);
        });

    for (const VerifyFailure& failure : result.failures)
        std::fprintf(stderr, "FAIL %s: %s\n", to_token(failure.spec).c_str(),
                     failure.reason.c_str());
    std::printf("verify: %zu trials, %zu failures (seed=%" PRIu64 ", max_n=%zu)\n",
                result.trials_run, result.failure_count, opt.seed, opt.max_n);
    return result.ok() ? 0 : 1;
}

struct BenchOptions {
    std::vector<std::string> algos;
    std::vector<std::string> kinds{"uniform"};
    std::vector<std::size_t> sizes{1000000};
    std::vector<double> ratios{1.0};
    std::size_t runs = 9;
    std::uint64_t seed = 1;
    std::string out;
};

int run_bench(const BenchOptions& opt) {
    std::vector<std::string> algos =
        opt.algos.empty() ? cli::known_algorithms() : opt.algos;
    for (const std::string& name : algos)
        if (!cli::is_known_algorithm(name))
            throw cli::IoError("unknown algorithm '" + name + "'");

    std::vector<WorkloadKind> kinds;
    for (const std::string& name : opt.kinds) {
        const auto kind = parse_workload_kind(name);
        if (!kind) throw cli::IoError("unknown workload kind '" + name + "'");
        kinds.push_back(*kind);
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (opt.out != "-") {
        file.open(opt.out, std::ios::binary);
        if (!file) throw cli::IoError(opt.out + ": cannot open for writing");
        out = &file;
    }
    *out << cli::kCsvHeader << '\n';

    bool verification_failed = false;
    for (const WorkloadKind kind : kinds) {
        for (const std::size_t n : opt.sizes) {
            for (const double ratio : opt.ratios) {
                WorkloadSpec spec;
                spec.kind = kind;
                spec.n = n;
                spec.m = std::max<Word>(
                    1, static_cast<Word>(std::llround(ratio * static_cast<double>(n))));
                spec.seed = opt.seed;
                for (const std::string& algo : algos) {
                    const cli::CellOutcome cell =
                        cli::run_bench_cell(algo, spec, opt.runs);
                    if (cell.skipped) {
                        std::fprintf(stderr, "bench: skipping %s on %s (nothing to time)\n",
                                     algo.c_str(), to_token(spec).c_str());
                        continue;
                    }
                    if (!cell.record) {
                        std::fprintf(stderr, "bench: FAIL %s\n", cell.error.c_str());
                        verification_failed = true;
                        continue;
                    }
                    *out << cli::to_csv_line(*cell.record) << '\n';
                    std::fprintf(stderr, "bench: %s %s median %" PRIu64 " ns\n",
                                 algo.c_str(), cell.record->workload.c_str(),
                                 cell.record->median_ns);
                }
            }
        }
    }
    out->flush();
    if (!*out) throw cli::IoError(opt.out + ": write failed");
    return verification_failed ? 1 : 0;
}

int run_trace(const std::string& token) {
    const auto spec = parse_token(token);
    if (!spec) {
        std::fprintf(stderr, "error: invalid workload token '%s' "
                             "(expected kind:n:m:seed[:rate])\n",
                     token.c_str());
        return 2;
    }
    std::vector<Word> data = generate(*spec);
    if (data.empty()) {
        std::printf("empty workload, nothing to trace\n");
        return 0;
    }
    const auto [lo, hi] = std::minmax_element(data.begin(), data.end());
    const Word m = *hi - *lo + 1;

    const SortReport report = assoc_sort_counted(data);

    std::printf("%6s %11s %11s %12s %9s %9s %9s %12s\n", "pass", "start", "n",
                "min", "nodes", "idle", "deferred", "next_min");
    std::size_t start = 0;
    std::size_t emitted = 0;
    for (std::size_t t = 0; t < report.passes.size(); ++t) {
        const PassStats& pass = report.passes[t];
        std::printf("%6zu %11zu %11zu %12" PRIu64 " %9zu %9zu %9zu ",
                    t + 1, start, pass.length, pass.min_value, pass.node_count,
                    pass.idle_count, pass.deferred_count);
        if (pass.deferred_count > 0)
            std::printf("%12" PRIu64 "\n", pass.deferred_min);
        else
            std::printf("%12s\n", "-");
        start += pass.emitted();
        emitted += pass.emitted();
    }
    const std::size_t trailing = data.size() - emitted;
    std::printf("passes=%zu emitted=%zu trailing=%zu total_writes=%zu\n",
                report.pass_count(), emitted, trailing, report.total_writes);
    std::printf("beta=%.3f (n=%zu, m=%" PRIu64 ")\n", report.beta, data.size(), m);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"In-place associative integer sorting toolkit"};
    app.require_subcommand(1);

    SortOptions sort_opt;
    CLI::App* sort_cmd = app.add_subcommand("sort", "Sort a file of integers");
    sort_cmd->add_option("input", sort_opt.input, "Input file")->required();
    sort_cmd->add_option("output", sort_opt.output, "Output file")->required();
    sort_cmd->add_option("--format", sort_opt.format, "File format")
        ->check(CLI::IsMember({"text", "binary"}))
        ->capture_default_str();
    sort_cmd->add_option("--word-bytes", sort_opt.word_bytes,
                         "Bytes per binary word")
        ->check(CLI::IsMember({1, 2, 4, 8}))
        ->capture_default_str();
    sort_cmd->add_flag("--full-universe", sort_opt.full_universe,
                       "Accept the full 64-bit value range");

    VerifyCliOptions verify_opt;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Differential fuzzing of the sort against the oracle");
    verify_cmd->add_option("--trials", verify_opt.trials, "Number of trials")
        ->capture_default_str();
    verify_cmd->add_option("--max-n", verify_opt.max_n, "Largest input length")
        ->capture_default_str();
    verify_cmd->add_option("--seed", verify_opt.seed, "Campaign seed")
        ->envname("ASSOC_SORT_SEED")
        ->capture_default_str();

    BenchOptions bench_opt;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "Time a grid of algorithms x workloads");
    bench_cmd->add_option("--algos", bench_opt.algos,
                          "Algorithms (default: all)")
        ->delimiter(',');
    bench_cmd->add_option("--kinds", bench_opt.kinds, "Workload kinds")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--sizes", bench_opt.sizes, "Input lengths n")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--ratios", bench_opt.ratios, "Range ratios m/n")
        ->delimiter(',')
        ->capture_default_str();
    bench_cmd->add_option("--runs", bench_opt.runs, "Timed repetitions per cell")
        ->capture_default_str();
    bench_cmd->add_option("--seed", bench_opt.seed, "Workload seed")
        ->envname("ASSOC_SORT_SEED")
        ->capture_default_str();
    bench_cmd->add_option("--out", bench_opt.out, "CSV output path ('-' = stdout)")
        ->required();

    std::string trace_token;
    CLI::App* trace_cmd =
        app.add_subcommand("trace", "Print per-pass statistics for a workload");
    trace_cmd->add_option("token", trace_token, "Workload token kind:n:m:seed[:rate]")
        ->required();

    int rc = 0;
    sort_cmd->callback([&] { rc = run_sort(sort_opt); });
    verify_cmd->callback([&] { rc = run_verify_cmd(verify_opt); });
    bench_cmd->callback([&] { rc = run_bench(bench_opt); });
    trace_cmd->callback([&] { rc = run_trace(trace_token); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return rc;
}
