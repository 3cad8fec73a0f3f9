#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "lpbus/codec.hpp"
#include "lpbus/combinatorics.hpp"
#include "lpbus/errors.hpp"
#include "lpbus/lp_codes.hpp"
#include "lpbus/trace.hpp"

using lpbus::BitWord;
using lpbus::CodecConfig;
using lpbus::Count;
using lpbus::Trace;
using lpbus::decode;
using lpbus::encode;
using lpbus::minimal_width;

TEST_CASE("minimal_width") {
  const auto id = minimal_width(5, 5);
  CHECK(id.n == 5);
  CHECK(id.alpha.num == 1);
  CHECK(id.alpha.den == 1);

  const auto spread = minimal_width(5, 4);
  CHECK(spread.n == 8);
  CHECK(spread.alpha.num == 8);
  CHECK(spread.alpha.den == 5);

  CHECK(minimal_width(4, 9).n == 4);       // whole space qualifies
  CHECK(minimal_width(12, 2).n == 4095);   // one-hot regime: N(n, 2) = n + 1
  CHECK(minimal_width(12, 4).n == 90);
  CHECK(minimal_width(12, 6).n == 30);
  CHECK(minimal_width(1, 1).n == 1);

  CHECK_THROWS_AS(minimal_width(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(minimal_width(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(minimal_width(30, 2), lpbus::resource_limit_error);
}

TEST_CASE("codec config shape") {
  const CodecConfig cfg = CodecConfig::make(5, 4);
  CHECK(cfg.n() == 8);
  CHECK(cfg.max_weight() == 2);
  CHECK(cfg.capacity() == Count{37});
  const auto& start = cfg.layer_start();
  REQUIRE(start.size() == 4);
  CHECK(start[0] == Count{0});
  CHECK(start[1] == Count{1});
  CHECK(start[2] == Count{9});
  CHECK(start[3] == Count{37});

  // a width too small for the source is rejected up front
  CHECK_THROWS_AS(CodecConfig::make(5, 4, 6), std::invalid_argument);
  CHECK_THROWS_AS(CodecConfig::make(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(CodecConfig::make(4, 0), std::invalid_argument);

  const CodecConfig odd = CodecConfig::make(4, 3);
  CHECK(odd.n() == 8);  // capacity 2n = 16 = 2^4 exactly
  CHECK(odd.max_weight() == 2);
  CHECK(odd.odd_top());
  CHECK(odd.capacity() == Count{16});
}

TEST_CASE("encode spot values") {
  const CodecConfig cfg = CodecConfig::make(5, 4);
  CHECK(encode(cfg, BitWord::from_value(5, 0)) == BitWord(8));
  CHECK(encode(cfg, BitWord::from_value(5, 22)).str() == "00010100");
  CHECK(encode(cfg, BitWord::from_value(5, 1)).str() == "10000000");
  CHECK_THROWS_AS(encode(cfg, BitWord::from_value(4, 3)), std::invalid_argument);
}

TEST_CASE("decode spot values and rejections") {
  const CodecConfig cfg = CodecConfig::make(5, 4);
  CHECK(decode(cfg, BitWord(8)).value() == 0);
  CHECK(decode(cfg, BitWord::from_support(8, {4, 6})).value() == 22);

  // weight above the code's maximum
  CHECK_THROWS_AS(decode(cfg, BitWord::from_support(8, {1, 2, 3})), lpbus::codeword_error);
  // valid low-weight word, but its ordinal 9 + 27 = 36 is past the 2^5 prefix
  CHECK_THROWS_AS(decode(cfg, BitWord::from_support(8, {7, 8})), lpbus::codeword_error);
  CHECK_THROWS_AS(decode(cfg, BitWord(7)), std::invalid_argument);

  const CodecConfig odd = CodecConfig::make(4, 3);
  // top-layer words must contain the fixed point (wire 1)
  CHECK_THROWS_AS(decode(odd, BitWord::from_support(8, {2, 3})), lpbus::codeword_error);
}

TEST_CASE("round trip over every source word") {
  for (int k = 1; k <= 10; ++k) {
    for (int delta : {2, 3, 4, 5, 6}) {
      if (delta == 2 && k > 10) continue;
      CAPTURE(k);
      CAPTURE(delta);
      const CodecConfig cfg = CodecConfig::make(k, delta);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
        const BitWord src = BitWord::from_value(k, x);
        const BitWord enc = encode(cfg, src);
        CHECK(enc.weight() <= cfg.max_weight());
        CHECK(decode(cfg, enc) == src);
      }
    }
  }
}

TEST_CASE("encoder image is the canonical prefix of the extremal code") {
  for (int k = 1; k <= 8; ++k) {
    for (int delta : {2, 3, 4, 5, 6}) {
      CAPTURE(k);
      CAPTURE(delta);
      const CodecConfig cfg = CodecConfig::make(k, delta);
      const lpbus::Code extremal = lpbus::kleitman_code(cfg.n(), cfg.delta(), 1);
      REQUIRE(Count{extremal.size()} >= Count::pow2(k));
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
        CHECK(encode(cfg, BitWord::from_value(k, x)) ==
              extremal.words()[static_cast<std::size_t>(x)]);
      }
    }
  }
}

TEST_CASE("encode_trace and decode_trace") {
  const CodecConfig cfg = CodecConfig::make(5, 4);

  const Trace empty{5, {}, ""};
  CHECK(lpbus::encode_trace(cfg, empty).words.empty());

  const Trace extremes{5, {BitWord::from_value(5, 0), BitWord::from_value(5, 31)}, ""};
  const Trace enc = lpbus::encode_trace(cfg, extremes);
  REQUIRE(enc.words.size() == 2);
  CHECK(enc.width == 8);
  CHECK(lpbus::hamming_distance(enc.words[0], enc.words[1]) <= 4);
  CHECK(lpbus::decode_trace(cfg, enc).words == extremes.words);

  CHECK_THROWS_AS(lpbus::encode_trace(cfg, Trace{4, {BitWord(4)}, ""}), std::invalid_argument);

  // decode errors carry the offending word index
  Trace bad{8, {BitWord(8), BitWord::from_support(8, {1, 2, 3})}, ""};
  try {
    lpbus::decode_trace(cfg, bad);
    FAIL("expected parse_error");
  } catch (const lpbus::parse_error& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("wide-bus regime: k = 12 at delta = 2 uses one-hot layers") {
  const CodecConfig cfg = CodecConfig::make(12, 2);
  CHECK(cfg.n() == 4095);
  const BitWord src = BitWord::from_value(12, 1234);
  const BitWord enc = encode(cfg, src);
  CHECK(enc.weight() == 1);
  CHECK(enc.support() == std::vector<int>{1234});
  CHECK(decode(cfg, enc) == src);
}
