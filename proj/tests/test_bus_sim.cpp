#include <cmath>
#include <sstream>
#include <stdexcept>

#include "doctest.h"
#include "lpbus/bus_sim.hpp"
#include "lpbus/errors.hpp"

using lpbus::BitWord;
using lpbus::BusParams;
using lpbus::Trace;
using lpbus::TraceKind;
using lpbus::synth_trace;

TEST_CASE("count_switches") {
  const Trace flip = synth_trace(TraceKind::alternating, 5, 3, 0);
  CHECK(lpbus::count_switches(flip) == std::vector<int>{5, 5});

  const BitWord u = BitWord::from_string("0110");
  CHECK(lpbus::count_switches(lpbus::make_trace(4, {u, u, u})) == std::vector<int>{0, 0});

  const Trace pair = lpbus::make_trace(
      6, {BitWord::from_string("000111"), BitWord::from_string("111000")});
  CHECK(lpbus::count_switches(pair) == std::vector<int>{6});

  CHECK(lpbus::count_switches(lpbus::make_trace(4, {u})).empty());
  CHECK_THROWS_AS(lpbus::count_switches(Trace{4, {}, ""}), std::invalid_argument);
  CHECK_THROWS_AS(lpbus::make_trace(4, {BitWord(5)}), std::invalid_argument);
}

TEST_CASE("energy arithmetic") {
  const Trace flip = synth_trace(TraceKind::alternating, 5, 3, 0);  // 10 switches
  const BusParams params{10e-12, 3.3, std::nullopt};
  const auto report = lpbus::energy(flip, params);
  CHECK(report.total_switches == 10);
  CHECK(report.max_switches == 5);
  CHECK(report.energy_joules == doctest::Approx(1.089e-9).epsilon(1e-12));
  CHECK_FALSE(report.avg_power_watts.has_value());

  // exact integer recovery from the float
  const double recovered = report.energy_joules / (10e-12 * 3.3 * 3.3);
  CHECK(std::abs(recovered - 10.0) < 1e-9);

  const auto single = lpbus::energy(lpbus::make_trace(3, {BitWord(3)}), params);
  CHECK(single.cycles == 0);
  CHECK(single.energy_joules == 0.0);

  // the all-switch trace reproduces the pessimistic N*k*C*V^2 model
  const Trace worst = synth_trace(TraceKind::alternating, 8, 101, 0);
  const auto wr = lpbus::energy(worst, params);
  CHECK(wr.total_switches == 100u * 8u);

  CHECK_THROWS_AS(lpbus::energy(flip, BusParams{0.0, 3.3, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(lpbus::energy(flip, BusParams{1e-12, -1.0, std::nullopt}),
                  std::invalid_argument);
  CHECK_THROWS_AS(lpbus::energy(flip, BusParams{1e-12, 3.3, -5.0}), std::invalid_argument);
}

TEST_CASE("average power") {
  const Trace flip = synth_trace(TraceKind::alternating, 4, 5, 0);  // 4 cycles, 16 switches
  const BusParams params{1e-12, 2.0, 1e9};
  const auto report = lpbus::energy(flip, params);
  REQUIRE(report.avg_power_watts.has_value());
  // per-cycle energy 4 * 1e-12 * 4 at 1 GHz
  CHECK(*report.avg_power_watts == doctest::Approx(16e-3).epsilon(1e-9));
}

TEST_CASE("compare raw vs encoded") {
  const lpbus::CodecConfig cfg = lpbus::CodecConfig::make(5, 4);
  const BusParams params{10e-12, 1.0, std::nullopt};

  const Trace adversarial = synth_trace(TraceKind::alternating, 5, 64, 0);
  const auto result = lpbus::compare(adversarial, cfg, params);
  CHECK(result.raw.max_switches == 5);
  CHECK(result.encoded.max_switches <= 4);
  CHECK(result.delta_guarantee == 4);
  CHECK(result.encoded.width == 8);

  const BitWord constant = BitWord::from_string("10101");
  const auto quiet = lpbus::compare(lpbus::make_trace(5, {constant, constant, constant}),
                                    cfg, params);
  CHECK(quiet.raw.total_switches == 0);
  CHECK(quiet.encoded.total_switches == 0);

  CHECK_THROWS_AS(lpbus::compare(synth_trace(TraceKind::alternating, 4, 4, 0), cfg, params),
                  std::invalid_argument);
}

TEST_CASE("synth_trace kinds") {
  const Trace alt = synth_trace(TraceKind::alternating, 4, 3, 0);
  REQUIRE(alt.words.size() == 3);
  CHECK(alt.words[0].str() == "0000");
  CHECK(alt.words[1].str() == "1111");
  CHECK(alt.words[2].str() == "0000");

  const Trace counter = synth_trace(TraceKind::counter, 3, 4, 0);
  CHECK(counter.words[0].str() == "000");
  CHECK(counter.words[1].str() == "001");
  CHECK(counter.words[2].str() == "010");
  CHECK(counter.words[3].str() == "011");
  // wraps modulo 2^width
  CHECK(synth_trace(TraceKind::counter, 2, 6, 0).words[4].str() == "00");

  const Trace r1 = synth_trace(TraceKind::random, 16, 50, 42);
  const Trace r2 = synth_trace(TraceKind::random, 16, 50, 42);
  CHECK(r1.words == r2.words);
  const Trace r3 = synth_trace(TraceKind::random, 16, 50, 43);
  CHECK(r1.words != r3.words);

  CHECK_THROWS_AS(synth_trace(TraceKind::random, 4, 0, 1), std::invalid_argument);
}

TEST_CASE("trace text format") {
  std::istringstream in(
      "# a comment\n"
      "00011010\n"
      "\n"
      "0x1A\n"
      "0xff\n");
  const Trace t = lpbus::read_trace(in);
  REQUIRE(t.words.size() == 3);
  CHECK(t.width == 8);
  CHECK(t.words[1].str() == "00011010");  // 0x1A expanded MSB-first
  CHECK(t.words[2].str() == "11111111");

  std::ostringstream out;
  lpbus::write_trace(out, t);
  std::istringstream again(out.str());
  CHECK(lpbus::read_trace(again).words == t.words);

  // hex first needs an explicit width
  std::istringstream hex_first("0x1A\n");
  CHECK_THROWS_AS(lpbus::read_trace(hex_first), lpbus::parse_error);
  std::istringstream hex_hinted("0x1A\n");
  CHECK(lpbus::read_trace(hex_hinted, 8).words[0].str() == "00011010");

  std::istringstream overflowing("0x1FF\n");
  CHECK_THROWS_AS(lpbus::read_trace(overflowing, 8), lpbus::parse_error);

  std::istringstream mixed("0101\n011\n");
  try {
    lpbus::read_trace(mixed);
    FAIL("expected parse_error");
  } catch (const lpbus::parse_error& e) {
    CHECK(e.line() == 2);
  }
}
