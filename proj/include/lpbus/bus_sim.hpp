#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpbus/codec.hpp"
#include "lpbus/trace.hpp"

namespace lpbus {

// Physical bus parameters: per-wire capacitance (farads), supply voltage
// (volts), optional operating frequency (hertz).
struct BusParams {
  double capacitance = 0.0;
  double vdd = 0.0;
  std::optional<double> frequency;
};

// Per-trace switching activity and energy. A trace of N words has N-1
// transitions; per_cycle[i] counts the wires flipping into word i+2.
struct EnergyReport {
  int width = 0;
  std::size_t cycles = 0;
  std::vector<int> per_cycle;
  std::uint64_t total_switches = 0;
  int max_switches = 0;
  double energy_joules = 0.0;
  std::optional<double> avg_power_watts;
};

// k_i = hamming distance between consecutive words; empty for length <= 1.
std::vector<int> count_switches(const Trace& trace);

// energy = total_switches * C * Vdd^2; average power (when f is given) is the
// mean per-cycle energy times f.
EnergyReport energy(const Trace& trace, const BusParams& params);

struct CompareResult {
  EnergyReport raw;
  EnergyReport encoded;
  int delta_guarantee = 0;
};

// Raw trace vs the same trace run through the encoder; checks that the
// encoded activity honors the delta guarantee on every cycle.
CompareResult compare(const Trace& raw, const CodecConfig& cfg, const BusParams& params);

enum class TraceKind { random, alternating, counter };

// Deterministic synthetic traces. `alternating` starts at all-zeros and flips
// every wire each cycle; `counter` emits 0, 1, 2, ... mod 2^width (width <=
// 64); `random` draws uniform words from a seeded mt19937_64.
Trace synth_trace(TraceKind kind, int width, std::size_t length, std::uint64_t seed);

}  // namespace lpbus
