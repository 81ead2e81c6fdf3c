#include "file_io.hpp"

#include <charconv>
#include <cstring>
#include <fstream>
#include <limits>

namespace assoc::cli {

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError(path + ": cannot open for reading");
    std::string data((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    if (in.bad()) throw IoError(path + ": read failed");
    return data;
}

[[noreturn]] void parse_fail(const std::string& path, std::size_t line,
                             std::string_view token) {
    throw IoError(path + ":" + std::to_string(line) + ": cannot parse '" +
                  std::string(token) + "'");
}

template <class Int, class Emit>
void parse_lines(const std::string& path, std::string_view text, Emit&& emit) {
    std::size_t line = 0;
    while (!text.empty()) {
        ++line;
        const std::size_t eol = text.find('\n');
        std::string_view tok = text.substr(0, eol);
        text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
        if (!tok.empty() && tok.back() == '\r') tok.remove_suffix(1);
        if (tok.empty()) {
            if (text.empty()) break;  // trailing blank line at EOF
            parse_fail(path, line, tok);
        }
        Int value{};
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
        if (ec != std::errc{} || ptr != tok.data() + tok.size())
            parse_fail(path, line, tok);
        emit(value, line);
    }
}

void check_payload_bound(const std::string& path, Word value, std::size_t line) {
    if (value > kMaxPayload)
        throw IoError(path + ":" + std::to_string(line) + ": value " +
                      std::to_string(value) + " exceeds the maximum payload " +
                      std::to_string(kMaxPayload) +
                      " (2^63-1); pass --full-universe to sort the full range");
}

}  // namespace

TextData read_text(const std::string& path, bool full_universe) {
    const std::string text = slurp(path);
    TextData out;
    out.signed_values = std::memchr(text.data(), '-', text.size()) != nullptr;
    if (out.signed_values) {
        parse_lines<std::int64_t>(path, text, [&](std::int64_t v, std::size_t) {
            out.values.push_back(static_cast<Word>(v) ^ kTagBit);  // bias +2^63
        });
    } else {
        parse_lines<Word>(path, text, [&](Word v, std::size_t line) {
            if (!full_universe) check_payload_bound(path, v, line);
            out.values.push_back(v);
        });
    }
    return out;
}

void write_text(const std::string& path, std::span<const Word> values,
                bool signed_values) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw IoError(path + ": cannot open for writing");
    std::string buf;
    buf.reserve(1 << 16);
    char digits[24];
    for (const Word w : values) {
        char* end;
        if (signed_values) {
            const auto v = static_cast<std::int64_t>(w ^ kTagBit);  // undo the bias
            end = std::to_chars(digits, digits + sizeof digits, v).ptr;
        } else {
            end = std::to_chars(digits, digits + sizeof digits, w).ptr;
        }
        buf.append(digits, end);
        buf.push_back('\n');
        if (buf.size() > (1 << 16) - 32) {
            outf.write(buf.data(), static_cast<std::streamsize>(buf.size()));
            buf.clear();
        }
    }
    outf.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!outf) throw IoError(path + ": write failed");
}

std::vector<Word> read_binary(const std::string& path, unsigned word_bytes,
                              bool full_universe) {
    if (word_bytes != 1 && word_bytes != 2 && word_bytes != 4 && word_bytes != 8)
        throw IoError("--word-bytes must be 1, 2, 4, or 8");
    const std::string raw = slurp(path);
    if (raw.size() % word_bytes != 0)
        throw IoError(path + ": size " + std::to_string(raw.size()) +
                      " is not a multiple of " + std::to_string(word_bytes) +
                      " bytes");
    std::vector<Word> values(raw.size() / word_bytes);
    const auto* bytes = reinterpret_cast<const unsigned char*>(raw.data());
    for (std::size_t i = 0; i < values.size(); ++i) {
        Word v = 0;
        for (unsigned b = 0; b < word_bytes; ++b)
            v |= static_cast<Word>(bytes[i * word_bytes + b]) << (8 * b);
        if (!full_universe) check_payload_bound(path, v, i + 1);
        values[i] = v;
    }
    return values;
}

void write_binary(const std::string& path, std::span<const Word> values,
                  unsigned word_bytes) {
    std::ofstream outf(path, std::ios::binary);
    if (!outf) throw IoError(path + ": cannot open for writing");
    const Word limit = word_bytes == 8
                           ? std::numeric_limits<Word>::max()
                           : (Word{1} << (8 * word_bytes)) - 1;
    std::vector<char> buf;
    buf.reserve(values.size() * word_bytes);
    for (const Word w : values) {
        if (w > limit)
            throw IoError(path + ": value " + std::to_string(w) +
                          " does not fit in " + std::to_string(word_bytes) +
                          " bytes");
        for (unsigned b = 0; b < word_bytes; ++b)
            buf.push_back(static_cast<char>((w >> (8 * b)) & 0xFF));
    }
    outf.write(buf.data(), static_cast<std::streamsize>(buf.size()));
    if (!outf) throw IoError(path + ": write failed");
}

}  // namespace assoc::cli
