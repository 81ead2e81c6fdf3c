#pragma once

#include <cassert>
#include <cstdint>

// Tagged-word encoding used by the in-place associative sort. A word is
// either a plain integer (MSB clear, the value itself) or a node (MSB set,
// low w-1 bits hold the node's record). All operations are branch-free
// mask arithmetic on a fixed 64-bit word.

namespace assoc {

using Word = std::uint64_t;

inline constexpr unsigned kWordBits = 64;
inline constexpr Word kTagBit = Word{1} << (kWordBits - 1);
inline constexpr Word kPayloadMask = kTagBit - 1;
inline constexpr Word kMaxPayload = kPayloadMask;  // 2^(w-1) - 1

// True iff the word is a node.
constexpr bool is_tagged(Word w) noexcept { return (w & kTagBit) != 0; }

// A node whose record is `count`. Requires count <= kMaxPayload.
constexpr Word make_node(Word count) noexcept {
    assert(count <= kMaxPayload);
    return kTagBit | count;
}

// Low w-1 bits, tag ignored.
constexpr Word payload(Word w) noexcept { return w & kPayloadMask; }

// Replaces the low w-1 bits, leaving the tag bit as it was.
constexpr Word set_payload(Word w, Word value) noexcept {
    assert(value <= kMaxPayload);
    return (w & kTagBit) | value;
}

// Exchanges the payloads of two words; both tag bits stay put.
constexpr void swap_payloads(Word& a, Word& b) noexcept {
    const Word pa = a & kPayloadMask;
    const Word pb = b & kPayloadMask;
    a = (a & kTagBit) | pb;
    b = (b & kTagBit) | pa;
}

}  // namespace assoc
