#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "voicepack/bwt.hpp"
#include "voicepack/codec_config.hpp"
#include "voicepack/error.hpp"
#include "voicepack/mtf_rle.hpp"

using namespace voicepack;

TEST(Bwt, Banana) {
  const auto block = bwt_forward(as_bytes("banana"));
  EXPECT_EQ(block.data, to_bytes("nnbaaa"));
  EXPECT_EQ(block.primary_index, 3u);
  EXPECT_EQ(bwt_inverse({to_bytes("nnbaaa"), 3}), to_bytes("banana"));
}

TEST(Bwt, EqualRotationsKeepOriginalFirst) {
  const auto block = bwt_forward(as_bytes("aaaa"));
  EXPECT_EQ(block.data, to_bytes("aaaa"));
  EXPECT_EQ(block.primary_index, 0u);
}

TEST(Bwt, Empty) {
  const auto block = bwt_forward({});
  EXPECT_TRUE(block.data.empty());
  EXPECT_EQ(block.primary_index, 0u);
  EXPECT_TRUE(bwt_inverse({}).empty());
}

TEST(Bwt, PrimaryOutOfRangeIsCorrupt) {
  try {
    bwt_inverse({to_bytes("ab"), 5});
    FAIL() << "expected CorruptStream";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CorruptStream);
  }
}

TEST(Bwt, MatchesSortedRotationsExhaustively) {
  for (std::size_t len = 0; len <= 8; ++len) {
    std::size_t combos = 1;
    for (std::size_t i = 0; i < len; ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      Bytes s(len);
      auto c = code;
      for (auto& b : s) {
        b = static_cast<std::uint8_t>('a' + c % 3);
        c /= 3;
      }
      const auto [data, primary] = oracle::bwt(s);
      const auto block = bwt_forward(s);
      ASSERT_EQ(block.data, data);
      ASSERT_EQ(block.primary_index, primary);
      ASSERT_EQ(bwt_inverse(block), s);
    }
  }
}

TEST(Bwt, MatchesOracleOnRandomBlocks) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 40; ++t) {
    const auto s = oracle::mixed_payload(rng, 1 + rng() % 300);
    const auto [data, primary] = oracle::bwt(s);
    const auto block = bwt_forward(s);
    ASSERT_EQ(block.data, data);
    ASSERT_EQ(block.primary_index, primary);
  }
}

TEST(Bwt, MultiBlockRoundTrip) {
  const CodecConfig cfg({.bwt_block_size = 1000});
  std::mt19937_64 rng(14);
  for (int t = 0; t < 10; ++t) {
    const auto input = oracle::mixed_payload(rng, rng() % 5000);
    EXPECT_EQ(bwt_decode(bwt_encode(input, cfg), input.size(), cfg), input);
  }
}

TEST(Mtf, HandTraces) {
  EXPECT_EQ(mtf_encode(as_bytes("aaa")), (Bytes{97, 0, 0}));
  EXPECT_EQ(mtf_encode(as_bytes("nnbaaa")), (Bytes{110, 0, 99, 99, 0, 0}));
  EXPECT_TRUE(mtf_encode({}).empty());
}

TEST(Mtf, InverseIsIdentity) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 100; ++t) {
    const auto input = oracle::mixed_payload(rng, rng() % 2000);
    ASSERT_EQ(mtf_decode(mtf_encode(input)), input);
  }
}

TEST(Rle0, InverseIsIdentityOnArbitraryRanks) {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 200; ++t) {
    Bytes ranks(rng() % 3000);
    for (auto& r : ranks) r = rng() % 3 == 0 ? static_cast<std::uint8_t>(rng()) : 0;
    ASSERT_EQ(rle0_decode(rle0_encode(ranks)), ranks);
  }
  const Bytes high = {254, 255, 0, 253, 0, 0, 255};
  EXPECT_EQ(rle0_decode(rle0_encode(high)), high);
}

TEST(Rle0, ZeroRunsUseBijectiveDigits) {
  // 1 -> A, 2 -> B, 3 -> AA, 4 -> BA, 7 -> AAA.
  EXPECT_EQ(rle0_encode(Bytes(1, 0)), (Bytes{kRunA}));
  EXPECT_EQ(rle0_encode(Bytes(2, 0)), (Bytes{kRunB}));
  EXPECT_EQ(rle0_encode(Bytes(3, 0)), (Bytes{kRunA, kRunA}));
  EXPECT_EQ(rle0_encode(Bytes(4, 0)), (Bytes{kRunB, kRunA}));
  EXPECT_EQ(rle0_encode(Bytes(7, 0)), (Bytes{kRunA, kRunA, kRunA}));
  EXPECT_EQ(rle0_encode(Bytes{5}), (Bytes{6}));
}

TEST(Rle0, DanglingEscapeIsCorrupt) {
  EXPECT_THROW(rle0_decode(Bytes{kRankEscape}), Error);
  EXPECT_THROW(rle0_decode(Bytes{kRankEscape, 7}), Error);
}

TEST(Rle0, ExpansionLimit) { EXPECT_THROW(rle0_decode(Bytes(40, kRunB), 1000), Error); }
