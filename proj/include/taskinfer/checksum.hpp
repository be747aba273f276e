#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace taskinfer {

// 64-bit FNV-1a over a byte string.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= static_cast<std::uint64_t>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

// Canonical form of an input document: CR bytes removed, so CRLF and LF
// sources hash identically. Checksums are always taken over this form.
inline std::string canonical_document(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (char c : raw) {
        if (c != '\r') out.push_back(c);
    }
    return out;
}

std::string checksum_hex(std::uint64_t value);

// Parses a 16-digit lowercase hex checksum. Throws FormatError on anything else.
std::uint64_t parse_checksum_hex(std::string_view text);

}  // namespace taskinfer
