#include "voicepack/huffman.hpp"

#include <algorithm>
#include <queue>
#include <vector>

#include "voicepack/bit_io.hpp"
#include "voicepack/error.hpp"

namespace voicepack {

std::string HuffmanCode::bit_string(std::uint8_t symbol) const {
  std::string text;
  for (int i = length[symbol] - 1; i >= 0; --i) text.push_back(((bits[symbol] >> i) & 1u) ? '1' : '0');
  return text;
}

namespace {

struct HeavierFirst {
  bool operator()(const std::unique_ptr<HuffmanNode>& a, const std::unique_ptr<HuffmanNode>& b) const {
    if (a->weight != b->weight) return a->weight > b->weight;
    return a->min_symbol > b->min_symbol;
  }
};

void collect_lengths(const HuffmanNode& node, int depth, HuffmanCode& code) {
  if (node.is_leaf()) {
    code.length[*node.symbol] = static_cast<std::uint8_t>(std::max(depth, 1));
    return;
  }
  collect_lengths(*node.left, depth + 1, code);
  collect_lengths(*node.right, depth + 1, code);
}

FrequencyTable count_octets(ByteView input) {
  std::array<std::uint64_t, 256> counts{};
  for (const auto octet : input) ++counts[octet];
  FrequencyTable freqs;
  for (int s = 0; s < 256; ++s) {
    if (counts[s] > 0) freqs.emplace(static_cast<std::uint8_t>(s), counts[s]);
  }
  return freqs;
}

}  // namespace

std::unique_ptr<HuffmanNode> build_huffman_tree(const FrequencyTable& freqs) {
  // A priority_queue cannot hand out move-only elements, so keep a heap by hand.
  std::vector<std::unique_ptr<HuffmanNode>> forest;
  for (const auto& [symbol, count] : freqs) {
    if (count == 0) continue;
    auto leaf = std::make_unique<HuffmanNode>();
    leaf->weight = count;
    leaf->symbol = symbol;
    leaf->min_symbol = symbol;
    forest.push_back(std::move(leaf));
  }
  if (forest.empty()) fail(ErrorKind::EmptyAlphabet, "no symbol has a positive count");

  const HeavierFirst cmp;
  std::make_heap(forest.begin(), forest.end(), cmp);
  auto pop = [&] {
    std::pop_heap(forest.begin(), forest.end(), cmp);
    auto node = std::move(forest.back());
    forest.pop_back();
    return node;
  };
  while (forest.size() > 1) {
    auto first = pop();
    auto second = pop();
    auto parent = std::make_unique<HuffmanNode>();
    parent->weight = first->weight + second->weight;
    parent->min_symbol = std::min(first->min_symbol, second->min_symbol);
    parent->left = std::move(first);
    parent->right = std::move(second);
    forest.push_back(std::move(parent));
    std::push_heap(forest.begin(), forest.end(), cmp);
  }
  return std::move(forest.front());
}

HuffmanCode build_huffman_table(const FrequencyTable& freqs) {
  const auto root = build_huffman_tree(freqs);
  HuffmanCode code;
  collect_lengths(*root, 0, code);

  std::vector<std::uint8_t> order;
  for (int s = 0; s < 256; ++s) {
    if (code.length[s] > 0) order.push_back(static_cast<std::uint8_t>(s));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint8_t a, std::uint8_t b) { return code.length[a] < code.length[b]; });
  std::uint64_t next = 0;
  int prev_len = code.length[order.front()];
  for (const auto s : order) {
    next <<= (code.length[s] - prev_len);
    prev_len = code.length[s];
    code.bits[s] = next++;
  }
  return code;
}

std::uint64_t huffman_body_bits(ByteView input) {
  if (input.empty()) return 0;
  const auto freqs = count_octets(input);
  const auto code = build_huffman_table(freqs);
  std::uint64_t bits = 0;
  for (const auto& [s, c] : freqs) bits += c * code.length[s];
  return bits;
}

Bytes huffman_encode(ByteView input) {
  const auto freqs = count_octets(input);
  Bytes header;
  header.push_back(static_cast<std::uint8_t>(freqs.size() >> 8));
  header.push_back(static_cast<std::uint8_t>(freqs.size()));
  for (const auto& [s, c] : freqs) {
    header.push_back(s);
    put_u32_be(header, static_cast<std::uint32_t>(c));
  }
  if (freqs.empty()) return header;

  const auto code = build_huffman_table(freqs);
  BitWriter body;
  for (const auto octet : input) {
    for (int i = code.length[octet] - 1; i >= 0; --i) body.put_bit(static_cast<unsigned>(code.bits[octet] >> i) & 1u);
  }
  auto packed = std::move(body).finish();
  header.insert(header.end(), packed.begin(), packed.end());
  return header;
}

Bytes huffman_decode(ByteView payload, std::size_t expected_len) {
  if (payload.size() < 2) fail(ErrorKind::CorruptStream, "huffman header truncated");
  const std::size_t n = (std::size_t{payload[0]} << 8) | payload[1];
  if (n > 256 || payload.size() < 2 + 5 * n) fail(ErrorKind::CorruptStream, "huffman header truncated");

  FrequencyTable freqs;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto at = 2 + 5 * i;
    const std::uint8_t symbol = payload[at];
    const std::uint32_t count = get_u32_be(payload, at + 1);
    if (count == 0 || (i > 0 && symbol <= payload[at - 5])) {
      fail(ErrorKind::CorruptStream, "huffman header not strictly ascending with positive counts");
    }
    freqs.emplace(symbol, count);
    total += count;
  }
  if (total != expected_len) fail(ErrorKind::CorruptStream, "huffman counts disagree with length");
  if (n == 0) return {};

  // Decoding trie over the canonical code words.
  const auto code = build_huffman_table(freqs);
  std::vector<std::array<int, 2>> trie(1, {-1, -1});
  std::vector<int> leaf_symbol(1, -1);
  for (int s = 0; s < 256; ++s) {
    if (code.length[s] == 0) continue;
    int node = 0;
    for (int i = code.length[s] - 1; i >= 0; --i) {
      const auto bit = static_cast<unsigned>(code.bits[s] >> i) & 1u;
      if (trie[node][bit] < 0) {
        trie[node][bit] = static_cast<int>(trie.size());
        trie.push_back({-1, -1});
        leaf_symbol.push_back(-1);
      }
      node = trie[node][bit];
    }
    leaf_symbol[node] = s;
  }

  BitReader in(payload.subspan(2 + 5 * n));
  Bytes out;
  out.reserve(expected_len);
  while (out.size() < expected_len) {
    int node = 0;
    while (leaf_symbol[node] < 0) {
      if (in.remaining() == 0) fail(ErrorKind::CorruptStream, "huffman bit-reader underrun");
      node = trie[node][in.get_bit()];
      if (node < 0) fail(ErrorKind::CorruptStream, "huffman code not in table");
    }
    out.push_back(static_cast<std::uint8_t>(leaf_symbol[node]));
  }
  return out;
}

}  // namespace voicepack
