#include "lpbus/bus_sim.hpp"

#include <random>
#include <stdexcept>

#include "lpbus/hamming.hpp"

namespace lpbus {

std::vector<int> count_switches(const Trace& trace) {
  if (trace.words.empty()) throw std::invalid_argument("count_switches: empty trace");
  std::vector<int> switches;
  switches.reserve(trace.words.size() - 1);
  for (std::size_t i = 0; i + 1 < trace.words.size(); ++i) {
    switches.push_back(hamming_distance(trace.words[i], trace.words[i + 1]));
  }
  return switches;
}

EnergyReport energy(const Trace& trace, const BusParams& params) {
  if (params.capacitance <= 0.0 || params.vdd <= 0.0) {
    throw std::invalid_argument("energy: capacitance and vdd must be positive");
  }
  if (params.frequency && *params.frequency <= 0.0) {
    throw std::invalid_argument("energy: frequency must be positive");
  }
  EnergyReport report;
  report.width = trace.width;
  report.per_cycle = count_switches(trace);
  report.cycles = report.per_cycle.size();
  for (int k : report.per_cycle) {
    report.total_switches += static_cast<std::uint64_t>(k);
    if (k > report.max_switches) report.max_switches = k;
  }
  report.energy_joules =
      static_cast<double>(report.total_switches) * params.capacitance * params.vdd * params.vdd;
  if (params.frequency) {
    report.avg_power_watts =
        report.cycles == 0
            ? 0.0
            : report.energy_joules * *params.frequency / static_cast<double>(report.cycles);
  }
  return report;
}

CompareResult compare(const Trace& raw, const CodecConfig& cfg, const BusParams& params) {
  if (raw.width != cfg.k()) {
    throw std::invalid_argument("compare: raw trace width does not match the codec source");
  }
  CompareResult result;
  result.raw = energy(raw, params);
  result.encoded = energy(encode_trace(cfg, raw), params);
  result.delta_guarantee = cfg.delta();
  if (result.encoded.max_switches > cfg.delta()) {
    throw std::logic_error("compare: encoded activity violated the delta guarantee");
  }
  return result;
}

Trace synth_trace(TraceKind kind, int width, std::size_t length, std::uint64_t seed) {
  if (width < 0) throw std::invalid_argument("synth_trace: negative width");
  if (length < 1) throw std::invalid_argument("synth_trace: length must be >= 1");
  std::vector<BitWord> words;
  words.reserve(length);
  switch (kind) {
    case TraceKind::alternating: {
      BitWord zeros(width);
      BitWord ones(width);
      for (int p = 1; p <= width; ++p) ones.set(p);
      for (std::size_t i = 0; i < length; ++i) words.push_back(i % 2 == 0 ? zeros : ones);
      return Trace{width, std::move(words), "synth:alternating"};
    }
    case TraceKind::counter: {
      if (width > 64) throw std::invalid_argument("synth_trace: counter width exceeds 64");
      const std::uint64_t mask =
          width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
      for (std::size_t i = 0; i < length; ++i) {
        words.push_back(BitWord::from_value(width, static_cast<std::uint64_t>(i) & mask));
      }
      return Trace{width, std::move(words), "synth:counter"};
    }
    case TraceKind::random: {
      std::mt19937_64 rng(seed);
      for (std::size_t i = 0; i < length; ++i) {
        BitWord w(width);
        int p = 1;
        while (p <= width) {
          const std::uint64_t block = rng();  // one draw per 64 positions
          for (int b = 0; b < 64 && p <= width; ++b, ++p) {
            if ((block >> b) & 1u) w.set(p);
          }
        }
        words.push_back(std::move(w));
      }
      return Trace{width, std::move(words), "synth:random:" + std::to_string(seed)};
    }
  }
  throw std::invalid_argument("synth_trace: unknown kind");
}

}  // namespace lpbus
