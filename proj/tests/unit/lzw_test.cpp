#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "voicepack/error.hpp"
#include "voicepack/lzw.hpp"

using namespace voicepack;

TEST(Lzw, EncodesAbababa) {
  EXPECT_EQ(lzw_encode(as_bytes("ABABABA"), 14), (LzwCodes{65, 66, 256, 258}));
}

TEST(Lzw, EncodesRunWithSelfReference) {
  EXPECT_EQ(lzw_encode(as_bytes("aaaa"), 14), (LzwCodes{97, 256, 97}));
}

TEST(Lzw, EmptyInputHasNoCodes) { EXPECT_TRUE(lzw_encode({}, 14).empty()); }

TEST(Lzw, DecodesHandTraces) {
  EXPECT_EQ(lzw_decode({65, 66, 256, 258}, 14), to_bytes("ABABABA"));
  EXPECT_EQ(lzw_decode({97, 256, 97}, 14), to_bytes("aaaa"));
}

TEST(Lzw, CodePastNextFreeSlotIsCorrupt) {
  try {
    lzw_decode({97, 300}, 14);
    FAIL() << "expected CorruptStream";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CorruptStream);
  }
}

TEST(Lzw, CodesFitTheirWidthAndWidthIsCapped) {
  std::mt19937_64 rng(5);
  for (const int bits : {9, 10, 12, 16}) {
    const auto input = oracle::mixed_payload(rng, 20000);
    const auto codes = lzw_encode(input, bits);
    for (std::size_t i = 0; i < codes.size(); ++i) {
      const int w = lzw_code_width(i, bits);
      ASSERT_GE(w, 9);
      ASSERT_LE(w, bits);
      ASSERT_LT(codes[i], 1u << w) << "code " << i;
    }
    EXPECT_EQ(lzw_decode(codes, bits), input);
  }
}

TEST(Lzw, WidthTracksLargestPossibleCode) {
  // Code i can name at most entry 255 + i, and never beyond the full table.
  for (const int bits : {9, 12, 14, 16}) {
    int previous = 9;
    for (std::size_t i = 0; i < 70000; ++i) {
      const std::uint64_t largest = std::min<std::uint64_t>(255 + i, (std::uint64_t{1} << bits) - 1);
      int expected = 9;
      while ((std::uint64_t{1} << expected) <= largest) ++expected;
      const int w = lzw_code_width(i, bits);
      ASSERT_EQ(w, expected) << "index " << i << " bits " << bits;
      ASSERT_GE(w, previous);
      previous = w;
    }
  }
}

TEST(Lzw, PackUnpackRoundTrip) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    const int bits = 9 + static_cast<int>(rng() % 8);
    const auto input = oracle::mixed_payload(rng, rng() % 5000);
    const auto codes = lzw_encode(input, bits);
    EXPECT_EQ(lzw_unpack(lzw_pack(codes, bits), bits), codes);
  }
}

TEST(Lzw, FrozenDictionaryStillRoundTrips) {
  std::mt19937_64 rng(3);
  const auto input = oracle::random_bytes(rng, 4000);
  EXPECT_EQ(lzw_decode(lzw_encode(input, 9), 9), input);
}
