#include "voicepack/bwt.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <vector>

#include "voicepack/ac.hpp"
#include "voicepack/error.hpp"
#include "voicepack/mtf_rle.hpp"

namespace voicepack {

BwtBlock bwt_forward(ByteView block) {
  const std::size_t n = block.size();
  if (n == 0) return {};

  // Prefix doubling over cyclic rotations: after the pass with stride k the
  // ranks order rotations by their first 2k octets.
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::vector<std::uint32_t> rank(block.begin(), block.end());
  std::vector<std::uint32_t> next_rank(n);
  for (std::size_t k = 1; k < n; k <<= 1) {
    auto key = [&](std::uint32_t i) {
      return std::pair{rank[i], rank[(i + k) % n]};
    };
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
    next_rank[order[0]] = 0;
    for (std::size_t j = 1; j < n; ++j) {
      next_rank[order[j]] = next_rank[order[j - 1]] + (key(order[j - 1]) < key(order[j]) ? 1 : 0);
    }
    rank.swap(next_rank);
    if (rank[order[n - 1]] == n - 1) break;
  }
  // Equal rotations (periodic input) keep starting-position order.
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return rank[a] != rank[b] ? rank[a] < rank[b] : a < b;
  });

  BwtBlock out;
  out.data.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.data[j] = block[(order[j] + n - 1) % n];
    if (order[j] == 0) out.primary_index = static_cast<std::uint32_t>(j);
  }
  return out;
}

Bytes bwt_inverse(const BwtBlock& block) {
  const auto& last = block.data;
  const std::size_t n = last.size();
  if (n == 0) {
    if (block.primary_index != 0) fail(ErrorKind::CorruptStream, "primary index on empty block");
    return {};
  }
  if (block.primary_index >= n) {
    fail(ErrorKind::CorruptStream, "primary index " + std::to_string(block.primary_index) +
                                       " >= block length " + std::to_string(n));
  }
  std::array<std::uint32_t, 256> starts{};
  for (const auto octet : last) ++starts[octet];
  std::uint32_t sum = 0;
  for (auto& c : starts) {
    const auto count = c;
    c = sum;
    sum += count;
  }
  // Last-to-first mapping: row i's last octet begins row lf[i].
  std::vector<std::uint32_t> lf(n);
  for (std::size_t i = 0; i < n; ++i) lf[i] = starts[last[i]]++;

  Bytes out(n);
  std::size_t row = block.primary_index;
  for (std::size_t t = n; t-- > 0;) {
    out[t] = last[row];
    row = lf[row];
  }
  return out;
}

Bytes bwt_encode(ByteView input, const CodecConfig& cfg) {
  Bytes out;
  for (std::size_t start = 0; start < input.size(); start += cfg.bwt_block_size()) {
    const auto chunk = input.subspan(start, std::min<std::size_t>(cfg.bwt_block_size(), input.size() - start));
    const auto transformed = bwt_forward(chunk);
    const auto stream = ac_encode(mtf_rle_encode(transformed.data));
    put_u32_be(out, static_cast<std::uint32_t>(chunk.size()));
    put_u32_be(out, transformed.primary_index);
    put_u32_be(out, static_cast<std::uint32_t>(stream.size()));
    out.insert(out.end(), stream.begin(), stream.end());
  }
  return out;
}

Bytes bwt_decode(ByteView payload, std::size_t expected_len, const CodecConfig& cfg) {
  Bytes out;
  out.reserve(expected_len);
  std::size_t at = 0;
  while (at < payload.size()) {
    if (payload.size() - at < 12) fail(ErrorKind::CorruptStream, "bwt block header truncated");
    const auto block_len = get_u32_be(payload, at);
    const auto primary = get_u32_be(payload, at + 4);
    const auto stream_len = get_u32_be(payload, at + 8);
    at += 12;
    if (block_len == 0 || block_len > cfg.bwt_block_size() || block_len > expected_len - out.size()) {
      fail(ErrorKind::CorruptStream, "bwt block length " + std::to_string(block_len) + " invalid");
    }
    if (primary >= block_len) fail(ErrorKind::CorruptStream, "bwt primary index out of range");
    if (stream_len > payload.size() - at) fail(ErrorKind::CorruptStream, "bwt stream truncated");

    // Each rank costs at most two run-length tokens.
    const auto tokens = ac_decode(payload.subspan(at, stream_len), 2 * std::size_t{block_len});
    at += stream_len;
    auto ranks = rle0_decode(tokens, block_len);
    if (ranks.size() != block_len) fail(ErrorKind::CorruptStream, "bwt block decodes to wrong length");
    const auto restored = bwt_inverse({mtf_decode(ranks), primary});
    out.insert(out.end(), restored.begin(), restored.end());
  }
  if (out.size() != expected_len) fail(ErrorKind::CorruptStream, "bwt blocks cover wrong length");
  return out;
}

}  // namespace voicepack
