#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/word_model.hpp"

// Deterministic, seeded workload generation. Identical specs produce
// identical buffers on every run and platform: all randomness comes from
// the splitmix recurrence below, written out in full so other
// implementations can reproduce the streams bit for bit.

namespace assoc {

// state += 0x9E3779B97F4A7C15
// z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
// z = (z ^ z>>27) * 0x94D049BB133111EB
// output z ^ z>>31
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by modulo; bound must be nonzero.
    constexpr std::uint64_t next_below(std::uint64_t bound) noexcept {
        return next() % bound;
    }

    // Uniform double in (0, 1], 53 significant bits.
    double next_unit() noexcept {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

enum class WorkloadKind {
    uniform,     // i.i.d. values in [0, m-1]
    geometric,   // floor(Exp(rate)), clamped to the payload range
    worst_case,  // adversarial chain: one sortable element per pass
    best_case,   // i.i.d. values in [0, n-1]: a single pass suffices
    constant,    // one repeated value drawn from [0, m-1]
    sorted,      // uniform draw, ascending
    reversed,    // uniform draw, descending
};

std::string_view to_string(WorkloadKind kind) noexcept;
std::optional<WorkloadKind> parse_workload_kind(std::string_view name) noexcept;

struct WorkloadSpec {
    WorkloadKind kind = WorkloadKind::uniform;
    std::size_t n = 0;
    Word m = 1;               // range width; ignored by kinds that fix their own
    std::uint64_t seed = 0;
    double rate = 0.0;        // geometric only; 0 means the default 1/n

    bool uses_m() const noexcept;
};

// CSV-safe single-token form "kind:n:m:seed", with ":rate" appended when a
// non-default geometric rate is set.
std::string to_token(const WorkloadSpec& spec);
std::optional<WorkloadSpec> parse_token(std::string_view token);

// Deterministic buffer for the spec. Throws std::invalid_argument on an
// invalid spec (e.g. m == 0 for a kind that draws from [0, m-1]). The
// worst_case chain is truncated where it would exceed kMaxPayload, so the
// returned size is authoritative.
std::vector<Word> generate(const WorkloadSpec& spec);

inline constexpr WorkloadKind kAllWorkloadKinds[] = {
    WorkloadKind::uniform,    WorkloadKind::geometric, WorkloadKind::worst_case,
    WorkloadKind::best_case,  WorkloadKind::constant,  WorkloadKind::sorted,
    WorkloadKind::reversed,
};

}  // namespace assoc
