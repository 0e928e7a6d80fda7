#include "voicepack/lzw.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "voicepack/bit_io.hpp"
#include "voicepack/error.hpp"

namespace voicepack {

namespace {

constexpr std::uint32_t kFirstFree = 256;

std::uint32_t capacity(int max_code_bits) noexcept { return 1u << max_code_bits; }

}  // namespace

int lzw_code_width(std::size_t index, int max_code_bits) noexcept {
  // Before the code at `index` is emitted the encoder holds 256 + index
  // entries (frozen at capacity), so the largest legal value is one less.
  const std::uint64_t entries =
      std::min<std::uint64_t>(kFirstFree + index, capacity(max_code_bits));
  return std::max(9, static_cast<int>(std::bit_width(entries - 1)));
}

LzwCodes lzw_encode(ByteView input, int max_code_bits) {
  LzwCodes codes;
  if (input.empty()) return codes;

  // (prefix code, next octet) -> code
  std::unordered_map<std::uint64_t, std::uint32_t> dictionary;
  auto key = [](std::uint32_t prefix, std::uint8_t octet) {
    return (std::uint64_t{prefix} << 8) | octet;
  };
  std::uint32_t next_code = kFirstFree;
  std::uint32_t current = input[0];
  for (std::size_t i = 1; i < input.size(); ++i) {
    const auto octet = input[i];
    if (auto it = dictionary.find(key(current, octet)); it != dictionary.end()) {
      current = it->second;
      continue;
    }
    codes.push_back(current);
    if (next_code < capacity(max_code_bits)) dictionary.emplace(key(current, octet), next_code++);
    current = octet;
  }
  codes.push_back(current);
  return codes;
}

Bytes lzw_decode(const LzwCodes& codes, int max_code_bits) {
  Bytes out;
  if (codes.empty()) return out;

  // Entry i >= 256 is (prefix code, last octet); strings are rebuilt backwards.
  std::vector<std::uint32_t> prefix;
  std::vector<std::uint8_t> last;
  std::vector<std::uint8_t> first;
  const auto limit = capacity(max_code_bits);

  Bytes scratch;
  auto expand = [&](std::uint32_t code) {
    scratch.clear();
    while (code >= kFirstFree) {
      scratch.push_back(last[code - kFirstFree]);
      code = prefix[code - kFirstFree];
    }
    scratch.push_back(static_cast<std::uint8_t>(code));
    out.insert(out.end(), scratch.rbegin(), scratch.rend());
  };
  auto first_octet = [&](std::uint32_t code) {
    return code < kFirstFree ? static_cast<std::uint8_t>(code) : first[code - kFirstFree];
  };

  if (codes[0] >= kFirstFree) {
    fail(ErrorKind::CorruptStream, "lzw first code " + std::to_string(codes[0]) + " is not a literal");
  }
  std::uint32_t previous = codes[0];
  out.push_back(static_cast<std::uint8_t>(previous));

  for (std::size_t i = 1; i < codes.size(); ++i) {
    const auto code = codes[i];
    const auto next_free = static_cast<std::uint32_t>(kFirstFree + prefix.size());
    const bool frozen = next_free >= limit;
    if (code > next_free || (frozen && code == next_free)) {
      fail(ErrorKind::CorruptStream, "lzw code " + std::to_string(code) +
                                         " exceeds next free slot " + std::to_string(next_free));
    }
    // KwKwK: the code being defined right now is previous + previous[0].
    const std::uint8_t head = code == next_free ? first_octet(previous) : first_octet(code);
    if (!frozen) {
      prefix.push_back(previous);
      last.push_back(head);
      first.push_back(first_octet(previous));
    }
    expand(code);
    previous = code;
  }
  return out;
}

Bytes lzw_pack(const LzwCodes& codes, int max_code_bits) {
  BitWriter out;
  for (std::size_t i = 0; i < codes.size(); ++i) out.put_bits(codes[i], lzw_code_width(i, max_code_bits));
  return std::move(out).finish();
}

LzwCodes lzw_unpack(ByteView packed, int max_code_bits) {
  BitReader in(packed);
  LzwCodes codes;
  for (;;) {
    const int width = lzw_code_width(codes.size(), max_code_bits);
    if (in.remaining() < static_cast<std::size_t>(width)) break;
    codes.push_back(in.get_bits(width));
  }
  return codes;
}

}  // namespace voicepack
