#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "assoc/word_model.hpp"

// File formats for the sort command. Text is one decimal per LF-terminated
// line; a file containing any '-' sign is parsed as signed 64-bit values
// and mapped onto the unsigned order by adding 2^63 (undone on output).
// Binary is little-endian fixed-width words.

namespace assoc::cli {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TextData {
    std::vector<Word> values;
    bool signed_values = false;  // values carry the +2^63 bias
};

// `full_universe` lifts the 2^63-1 payload cap on unsigned values.
TextData read_text(const std::string& path, bool full_universe);
void write_text(const std::string& path, std::span<const Word> values,
                bool signed_values);

std::vector<Word> read_binary(const std::string& path, unsigned word_bytes,
                              bool full_universe);
void write_binary(const std::string& path, std::span<const Word> values,
                  unsigned word_bytes);

}  // namespace assoc::cli
