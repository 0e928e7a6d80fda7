#include "voicepack/ppm.hpp"

#include <algorithm>

#include "voicepack/ac.hpp"
#include "voicepack/arithmetic_coder.hpp"
#include "voicepack/error.hpp"

namespace voicepack {

std::uint32_t ContextStats::count(std::uint8_t symbol) const noexcept {
  for (const auto& [s, c] : symbols) {
    if (s == symbol) return c;
  }
  return 0;
}

ContextModel::ContextModel(int order) : order_(order), tables_(static_cast<std::size_t>(order) + 1) {}

std::uint64_t ContextModel::pack(std::span<const std::uint8_t> context) noexcept {
  std::uint64_t key = 0;
  for (const auto octet : context) key = (key << 8) | octet;
  return key;
}

const ContextStats* ContextModel::find(std::span<const std::uint8_t> context) const {
  if (context.size() > static_cast<std::size_t>(order_)) return nullptr;
  const auto& table = tables_[context.size()];
  const auto it = table.find(pack(context));
  return it == table.end() ? nullptr : &it->second;
}

std::uint32_t ContextModel::count(std::span<const std::uint8_t> context, std::uint8_t symbol) const {
  const auto* stats = find(context);
  return stats ? stats->count(symbol) : 0;
}

void ContextModel::update(std::span<const std::uint8_t> history, std::uint8_t symbol, int lowest) {
  const auto top = std::min(history.size(), static_cast<std::size_t>(order_));
  for (auto len = static_cast<std::size_t>(std::max(lowest, 0)); len <= top; ++len) {
    auto& stats = tables_[len][pack(history.last(len))];
    auto it = std::find_if(stats.symbols.begin(), stats.symbols.end(),
                           [&](const auto& entry) { return entry.first == symbol; });
    if (it == stats.symbols.end()) {
      stats.symbols.emplace_back(symbol, 1);
    } else {
      ++it->second;
    }
    ++stats.total;
    if (stats.total > kRescaleLimit) {
      stats.total = 0;
      for (auto& entry : stats.symbols) {
        entry.second = std::max(1u, entry.second / 2);
        stats.total += entry.second;
      }
    }
  }
}

namespace {

constexpr int kAlphabet = 257;  // 256 octets + end-of-stream
using Exclusions = std::bitset<kAlphabet>;

/// Frequencies of the non-excluded symbols of one context.
struct Visible {
  std::uint32_t total = 0;
  std::uint32_t escape = 0;
};

Visible visible(const ContextStats& stats, const Exclusions& excluded) {
  Visible v{0, stats.escape()};
  for (const auto& [s, c] : stats.symbols) {
    if (!excluded[s]) v.total += c;
  }
  return v;
}

void exclude_all(const ContextStats& stats, Exclusions& excluded) {
  for (const auto& entry : stats.symbols) excluded.set(entry.first);
}

/// Returns the order of the context that coded the symbol, -1 for the fallback.
int encode_symbol(const ContextModel& model, std::span<const std::uint8_t> history, int symbol,
                  ArithmeticEncoder& enc) {
  Exclusions excluded;
  const auto top = std::min(history.size(), static_cast<std::size_t>(model.order()));
  for (auto len = static_cast<std::ptrdiff_t>(top); len >= 0; --len) {
    const auto* stats = model.find(history.last(static_cast<std::size_t>(len)));
    if (!stats) continue;
    const auto v = visible(*stats, excluded);
    if (v.total == 0) continue;
    std::uint32_t cum = 0;
    for (const auto& [s, c] : stats->symbols) {
      if (excluded[s]) continue;
      if (s == symbol) {
        enc.encode(cum, cum + c, v.total + v.escape);
        return static_cast<int>(len);
      }
      cum += c;
    }
    enc.encode(v.total, v.total + v.escape, v.total + v.escape);
    exclude_all(*stats, excluded);
  }
  // Order -1: uniform over whatever has not been excluded.
  std::uint32_t rank = 0;
  for (int s = 0; s < symbol; ++s) rank += excluded[s] ? 0 : 1;
  const auto remaining = static_cast<std::uint32_t>(kAlphabet - excluded.count());
  enc.encode(rank, rank + 1, remaining);
  return -1;
}

struct Decoded {
  int symbol;
  int order;
};

Decoded decode_symbol(const ContextModel& model, std::span<const std::uint8_t> history,
                      ArithmeticDecoder& dec) {
  Exclusions excluded;
  const auto top = std::min(history.size(), static_cast<std::size_t>(model.order()));
  for (auto len = static_cast<std::ptrdiff_t>(top); len >= 0; --len) {
    const auto* stats = model.find(history.last(static_cast<std::size_t>(len)));
    if (!stats) continue;
    const auto v = visible(*stats, excluded);
    if (v.total == 0) continue;
    const auto target = dec.target(v.total + v.escape);
    if (target < v.total) {
      std::uint32_t cum = 0;
      for (const auto& [s, c] : stats->symbols) {
        if (excluded[s]) continue;
        if (target < cum + c) {
          dec.consume(cum, cum + c, v.total + v.escape);
          return {s, static_cast<int>(len)};
        }
        cum += c;
      }
    }
    dec.consume(v.total, v.total + v.escape, v.total + v.escape);
    exclude_all(*stats, excluded);
  }
  const auto remaining = static_cast<std::uint32_t>(kAlphabet - excluded.count());
  const auto target = dec.target(remaining);
  std::uint32_t rank = 0;
  for (int s = 0; s < kAlphabet; ++s) {
    if (excluded[s]) continue;
    if (rank == target) {
      dec.consume(rank, rank + 1, remaining);
      return {s, -1};
    }
    ++rank;
  }
  fail(ErrorKind::CorruptStream, "ppm order -1 target out of range");
}

constexpr std::size_t kMaxOverrunBits = 64;

}  // namespace

Bytes ppm_encode(ByteView input, int order) {
  ContextModel model(order);
  ArithmeticEncoder enc;
  for (std::size_t pos = 0; pos < input.size(); ++pos) {
    const auto history = input.first(pos);
    const int coded_at = encode_symbol(model, history, input[pos], enc);
    model.update(history, input[pos], coded_at);
  }
  encode_symbol(model, input, kEndOfStream, enc);
  return std::move(enc).finish();
}

Bytes ppm_decode(ByteView stream, int order, std::size_t expected_len) {
  ContextModel model(order);
  ArithmeticDecoder dec(stream);
  Bytes out;
  out.reserve(expected_len);
  for (;;) {
    const auto [symbol, coded_at] = decode_symbol(model, out, dec);
    if (dec.overrun() > kMaxOverrunBits) fail(ErrorKind::CorruptStream, "ppm stream underrun");
    if (symbol == kEndOfStream) break;
    if (out.size() == expected_len) fail(ErrorKind::CorruptStream, "ppm end marker missing");
    const auto octet = static_cast<std::uint8_t>(symbol);
    model.update(out, octet, coded_at);
    out.push_back(octet);
  }
  if (out.size() != expected_len) fail(ErrorKind::CorruptStream, "ppm stream ended early");
  return out;
}

}  // namespace voicepack
