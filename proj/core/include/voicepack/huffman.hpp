#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "voicepack/bytes.hpp"

namespace voicepack {

/// Node of the merge forest. Leaves carry a symbol; internal nodes carry the
/// sum of their two children's weights.
struct HuffmanNode {
  std::uint64_t weight = 0;
  std::optional<std::uint8_t> symbol;
  std::uint8_t min_symbol = 0;  // smallest octet in the subtree, used for ties
  std::unique_ptr<HuffmanNode> left;
  std::unique_ptr<HuffmanNode> right;

  bool is_leaf() const noexcept { return !left; }
};

using FrequencyTable = std::map<std::uint8_t, std::uint64_t>;

/// Canonical prefix code. Entries with length 0 are absent symbols.
struct HuffmanCode {
  std::array<std::uint8_t, 256> length{};
  std::array<std::uint64_t, 256> bits{};

  std::string bit_string(std::uint8_t symbol) const;
};

/// Repeatedly joins the two lowest-weight roots until one tree remains. Ties
/// prefer the root whose subtree holds the smaller octet. Throws EmptyAlphabet
/// when no symbol has a positive count.
std::unique_ptr<HuffmanNode> build_huffman_tree(const FrequencyTable& freqs);

/// Code lengths from the merge tree, assigned canonical code words. A single
/// symbol alphabet gets the one-bit code "0".
HuffmanCode build_huffman_table(const FrequencyTable& freqs);

/// Payload: symbol count (u16 BE), then (symbol, count u32 BE) per symbol in
/// ascending octet order, then the packed code bits.
Bytes huffman_encode(ByteView input);

/// Throws CorruptStream on a malformed header, a bit underrun, or when the
/// header's counts do not sum to `expected_len`.
Bytes huffman_decode(ByteView payload, std::size_t expected_len);

/// Number of body bits huffman_encode emits after the header.
std::uint64_t huffman_body_bits(ByteView input);

}  // namespace voicepack
