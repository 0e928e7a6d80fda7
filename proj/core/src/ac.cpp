#include "voicepack/ac.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "voicepack/arithmetic_coder.hpp"
#include "voicepack/error.hpp"

namespace voicepack {

AdaptiveFrequencyModel::AdaptiveFrequencyModel(int symbols, std::uint32_t increment,
                                               std::uint32_t limit)
    : counts_(static_cast<std::size_t>(symbols), 1u),
      tree_(static_cast<std::size_t>(symbols) + 1, 0u),
      increment_(increment),
      limit_(limit) {
  top_bit_ = static_cast<int>(std::bit_floor(static_cast<unsigned>(symbols)));
  rebuild();
}

void AdaptiveFrequencyModel::rebuild() {
  std::fill(tree_.begin(), tree_.end(), 0u);
  total_ = 0;
  const auto n = counts_.size();
  for (std::size_t i = 1; i <= n; ++i) {
    tree_[i] += counts_[i - 1];
    total_ += counts_[i - 1];
    const auto parent = i + (i & (~i + 1));
    if (parent <= n) tree_[parent] += tree_[i];
  }
}

std::uint32_t AdaptiveFrequencyModel::prefix(int end) const noexcept {
  std::uint32_t sum = 0;
  for (auto i = static_cast<std::size_t>(end); i > 0; i &= i - 1) sum += tree_[i];
  return sum;
}

AdaptiveFrequencyModel::Slice AdaptiveFrequencyModel::slice(int symbol) const noexcept {
  const auto lo = prefix(symbol);
  return {lo, lo + counts_[symbol]};
}

int AdaptiveFrequencyModel::find(std::uint32_t target) const noexcept {
  std::size_t pos = 0;
  for (auto step = static_cast<std::size_t>(top_bit_); step > 0; step >>= 1) {
    const auto next = pos + step;
    if (next < tree_.size() && tree_[next] <= target) {
      pos = next;
      target -= tree_[next];
    }
  }
  return static_cast<int>(pos);
}

void AdaptiveFrequencyModel::update(int symbol) {
  counts_[symbol] += increment_;
  total_ += increment_;
  if (total_ > limit_) {
    for (auto& c : counts_) c = std::max(1u, c / 2);
    rebuild();
    return;
  }
  for (auto i = static_cast<std::size_t>(symbol) + 1; i < tree_.size(); i += i & (~i + 1)) {
    tree_[i] += increment_;
  }
}

namespace {

constexpr std::size_t kMaxOverrunBits = 64;

}  // namespace

Bytes ac_encode(ByteView input) {
  AdaptiveFrequencyModel model(257);
  ArithmeticEncoder enc;
  for (const auto octet : input) {
    const auto s = model.slice(octet);
    enc.encode(s.lo, s.hi, model.total());
    model.update(octet);
  }
  const auto s = model.slice(kEndOfStream);
  enc.encode(s.lo, s.hi, model.total());
  return std::move(enc).finish();
}

Bytes ac_decode(ByteView stream, std::size_t max_symbols) {
  AdaptiveFrequencyModel model(257);
  ArithmeticDecoder dec(stream);
  Bytes out;
  for (;;) {
    const int symbol = model.find(dec.target(model.total()));
    const auto s = model.slice(symbol);
    dec.consume(s.lo, s.hi, model.total());
    if (dec.overrun() > kMaxOverrunBits) fail(ErrorKind::CorruptStream, "arithmetic stream underrun");
    if (symbol == kEndOfStream) break;
    if (out.size() == max_symbols) {
      fail(ErrorKind::CorruptStream,
           "arithmetic stream longer than " + std::to_string(max_symbols) + " symbols");
    }
    out.push_back(static_cast<std::uint8_t>(symbol));
    model.update(symbol);
  }
  return out;
}

}  // namespace voicepack
