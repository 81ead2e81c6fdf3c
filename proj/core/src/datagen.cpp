#include "assoc/datagen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace assoc {

namespace {

std::vector<Word> make_uniform(std::size_t n, Word m, SplitMix64& rng) {
    std::vector<Word> out(n);
    for (Word& w : out) w = rng.next_below(m);
    return out;
}

std::vector<Word> make_geometric(std::size_t n, double rate, SplitMix64& rng) {
    std::vector<Word> out(n);
    for (Word& w : out) {
        const double x = std::floor(-std::log(rng.next_unit()) / rate);
        w = x >= static_cast<double>(kMaxPayload) ? kMaxPayload
                                                  : static_cast<Word>(x);
    }
    return out;
}

// a1 = 0, a_{j+1} = a_j + (n - j + 1): each pass's interval holds exactly
// one value, so the sort needs n-1 passes. The chain stops early if a step
// would leave the payload range.
std::vector<Word> make_worst_case(std::size_t n, SplitMix64& rng) {
    std::vector<Word> out;
    out.reserve(n);
    Word value = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        out.push_back(value);
        if (j == n) break;
        const Word step = static_cast<Word>(n - j + 1);
        if (kMaxPayload - value < step) break;  // truncate at the bound
        value += step;
    }
    // Fisher-Yates; pass behavior only depends on the value multiset.
    for (std::size_t i = out.size(); i > 1; --i)
        std::swap(out[i - 1], out[rng.next_below(i)]);
    return out;
}

}  // namespace

std::string_view to_string(WorkloadKind kind) noexcept {
    switch (kind) {
        case WorkloadKind::uniform: return "uniform";
        case WorkloadKind::geometric: return "geometric";
        case WorkloadKind::worst_case: return "worst_case";
        case WorkloadKind::best_case: return "best_case";
        case WorkloadKind::constant: return "constant";
        case WorkloadKind::sorted: return "sorted";
        case WorkloadKind::reversed: return "reversed";
    }
    return "?";
}

std::optional<WorkloadKind> parse_workload_kind(std::string_view name) noexcept {
    for (const WorkloadKind kind : kAllWorkloadKinds)
        if (name == to_string(kind)) return kind;
    return std::nullopt;
}

bool WorkloadSpec::uses_m() const noexcept {
    switch (kind) {
        case WorkloadKind::uniform:
        case WorkloadKind::constant:
        case WorkloadKind::sorted:
        case WorkloadKind::reversed:
            return true;
        default:
            return false;
    }
}

std::string to_token(const WorkloadSpec& spec) {
    std::string token(to_string(spec.kind));
    token += ':';
    token += std::to_string(spec.n);
    token += ':';
    token += std::to_string(spec.m);
    token += ':';
    token += std::to_string(spec.seed);
    if (spec.kind == WorkloadKind::geometric && spec.rate != 0.0) {
        token += ':';
        token += std::to_string(spec.rate);
    }
    return token;
}

std::optional<WorkloadSpec> parse_token(std::string_view token) {
    std::vector<std::string_view> fields;
    while (!token.empty()) {
        const std::size_t pos = token.find(':');
        fields.push_back(token.substr(0, pos));
        if (pos == std::string_view::npos) break;
        token.remove_prefix(pos + 1);
        if (token.empty()) return std::nullopt;  // trailing ':'
    }
    if (fields.size() < 4 || fields.size() > 5) return std::nullopt;

    WorkloadSpec spec;
    const auto kind = parse_workload_kind(fields[0]);
    if (!kind) return std::nullopt;
    spec.kind = *kind;

    const auto parse_u64 = [](std::string_view f, auto& out) {
        const auto* end = f.data() + f.size();
        const auto [ptr, ec] = std::from_chars(f.data(), end, out);
        return ec == std::errc{} && ptr == end;
    };
    if (!parse_u64(fields[1], spec.n)) return std::nullopt;
    if (!parse_u64(fields[2], spec.m)) return std::nullopt;
    if (!parse_u64(fields[3], spec.seed)) return std::nullopt;
    if (fields.size() == 5) {
        if (spec.kind != WorkloadKind::geometric) return std::nullopt;
        try {
            spec.rate = std::stod(std::string(fields[4]));
        } catch (...) {
            return std::nullopt;
        }
        if (!(spec.rate > 0.0)) return std::nullopt;
    }
    return spec;
}

std::vector<Word> generate(const WorkloadSpec& spec) {
    if (spec.uses_m() && (spec.m == 0 || spec.m - 1 > kMaxPayload))
        throw std::invalid_argument("generate: m must be in [1, 2^63] for " +
                                    std::string(to_string(spec.kind)));
    if (spec.rate < 0.0 || !std::isfinite(spec.rate))
        throw std::invalid_argument("generate: rate must be finite and >= 0");

    SplitMix64 rng(spec.seed);
    const std::size_t n = spec.n;
    switch (spec.kind) {
        case WorkloadKind::uniform:
            return make_uniform(n, spec.m, rng);
        case WorkloadKind::geometric: {
            if (n == 0) return {};
            const double rate =
                spec.rate > 0.0 ? spec.rate : 1.0 / static_cast<double>(n);
            return make_geometric(n, rate, rng);
        }
        case WorkloadKind::worst_case:
            return make_worst_case(n, rng);
        case WorkloadKind::best_case:
            return n == 0 ? std::vector<Word>{}
                          : make_uniform(n, static_cast<Word>(n), rng);
        case WorkloadKind::constant:
            return std::vector<Word>(n, rng.next_below(spec.m));
        case WorkloadKind::sorted: {
            auto out = make_uniform(n, spec.m, rng);
            std::sort(out.begin(), out.end());
            return out;
        }
        case WorkloadKind::reversed: {
            auto out = make_uniform(n, spec.m, rng);
            std::sort(out.begin(), out.end(), std::greater<>{});
            return out;
        }
    }
    throw std::invalid_argument("generate: unknown workload kind");
}

}  // namespace assoc
