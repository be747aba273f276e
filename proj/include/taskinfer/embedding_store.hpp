#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "taskinfer/vec.hpp"

namespace taskinfer {

// Normalization applied to every piece of text before lookup: lowercase,
// split on any non-alphanumeric byte, drop empty tokens. ASCII-only and
// locale-free so every run tokenizes identically.
std::vector<std::string> tokenize(std::string_view text);

// Immutable token -> vector table loaded from the embedding text format:
//
//   <count> <dimension>
//   <token> <d1> ... <dD>
//   ...
//
// Safe for unlimited concurrent readers once loaded.
class EmbeddingStore {
public:
    static constexpr std::string_view kNormalizationRule = "lowercase-alnum-v1";

    // Throws FormatError on a malformed header, a line whose vector length
    // differs from the header dimension (reported with its line number), or
    // an entry count that disagrees with the header. Partial loads are not
    // permitted. Duplicate tokens keep the first occurrence.
    static EmbeddingStore load(std::string_view raw);
    static EmbeddingStore load(std::istream& in);

    std::uint32_t dimension() const { return dimension_; }
    std::size_t size() const { return tokens_.size(); }

    // Row pointer for a normalized token, nullptr when out of vocabulary.
    const double* find(std::string_view token) const;

    std::span<const double> vector_at(std::size_t entry) const {
        return {data_.data() + entry * dimension_, dimension_};
    }
    const std::string& token_at(std::size_t entry) const { return tokens_[entry]; }

    // Unweighted mean over the in-vocabulary tokens of the text; absent when
    // no token is in vocabulary. Out-of-vocabulary tokens are skipped, never
    // zero-filled.
    std::optional<Vec> embed_text(std::string_view text) const;

    // Writes the embedding text format back out. Components are printed with
    // shortest round-trip formatting, so load(save(...)) reproduces every
    // vector bit-exactly.
    void save(std::ostream& out) const;

    // FNV-1a 64 of the canonical source document.
    std::uint64_t source_checksum() const { return source_checksum_; }
    const std::string& source_document() const { return source_; }

private:
    std::uint32_t dimension_ = 0;
    std::vector<double> data_;                            // row-major, one row per token
    std::vector<std::string> tokens_;                     // insertion order
    std::unordered_map<std::string, std::uint32_t> lookup_;
    std::string source_;
    std::uint64_t source_checksum_ = 0;
};

}  // namespace taskinfer
