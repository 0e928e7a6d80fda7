#include "voicepack/mtf_rle.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "voicepack/error.hpp"

namespace voicepack {

namespace {

std::array<std::uint8_t, 256> identity_list() {
  std::array<std::uint8_t, 256> list{};
  std::iota(list.begin(), list.end(), std::uint8_t{0});
  return list;
}

void flush_run(Bytes& out, std::size_t run) {
  while (run > 0) {
    --run;
    out.push_back((run & 1u) ? kRunB : kRunA);
    run >>= 1;
  }
}

}  // namespace

Bytes mtf_encode(ByteView input) {
  auto list = identity_list();
  Bytes out;
  out.reserve(input.size());
  for (const auto octet : input) {
    const auto it = std::find(list.begin(), list.end(), octet);
    out.push_back(static_cast<std::uint8_t>(it - list.begin()));
    std::rotate(list.begin(), it, it + 1);
  }
  return out;
}

Bytes mtf_decode(ByteView ranks) {
  auto list = identity_list();
  Bytes out;
  out.reserve(ranks.size());
  for (const auto rank : ranks) {
    const auto it = list.begin() + rank;
    out.push_back(*it);
    std::rotate(list.begin(), it, it + 1);
  }
  return out;
}

Bytes rle0_encode(ByteView ranks) {
  Bytes out;
  std::size_t run = 0;
  for (const auto rank : ranks) {
    if (rank == 0) {
      ++run;
      continue;
    }
    flush_run(out, run);
    run = 0;
    if (rank <= 253) {
      out.push_back(static_cast<std::uint8_t>(rank + 1));
    } else {
      out.push_back(kRankEscape);
      out.push_back(static_cast<std::uint8_t>(rank - 254));
    }
  }
  flush_run(out, run);
  return out;
}

Bytes rle0_decode(ByteView tokens, std::size_t max_len) {
  Bytes out;
  std::size_t run = 0;
  std::size_t weight = 1;
  auto finish_run = [&] {
    if (run > max_len - out.size()) fail(ErrorKind::CorruptStream, "run-length expansion too long");
    out.insert(out.end(), run, std::uint8_t{0});
    run = 0;
    weight = 1;
  };
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto token = tokens[i];
    if (token == kRunA || token == kRunB) {
      run += weight * (token == kRunA ? 1u : 2u);
      weight <<= 1;
      if (weight > (std::size_t{1} << 40)) fail(ErrorKind::CorruptStream, "zero run too long");
      continue;
    }
    finish_run();
    if (out.size() == max_len) fail(ErrorKind::CorruptStream, "run-length expansion too long");
    if (token != kRankEscape) {
      out.push_back(static_cast<std::uint8_t>(token - 1));
      continue;
    }
    if (i + 1 >= tokens.size() || tokens[i + 1] > 1) {
      fail(ErrorKind::CorruptStream, "malformed rank escape in run-length stream");
    }
    out.push_back(static_cast<std::uint8_t>(254 + tokens[++i]));
  }
  finish_run();
  return out;
}

Bytes mtf_rle_encode(ByteView input) { return rle0_encode(mtf_encode(input)); }

Bytes mtf_rle_decode(ByteView tokens, std::size_t max_len) {
  return mtf_decode(rle0_decode(tokens, max_len));
}

}  // namespace voicepack
