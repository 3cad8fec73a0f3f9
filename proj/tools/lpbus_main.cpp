// lpbus: construct optimal low-power bus codes, run the table-free
// encoder/decoder, verify constructions against brute-force searches, and
// simulate switching energy on transmission traces.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpbus/bus_sim.hpp"
#include "lpbus/codec.hpp"
#include "lpbus/cw_codes.hpp"
#include "lpbus/errors.hpp"
#include "lpbus/hamming.hpp"
#include "lpbus/lp_codes.hpp"
#include "lpbus/oracle.hpp"
#include "lpbus/trace.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitBudget = 2;

constexpr std::size_t kDiameterScanCap = 60000;

struct ConstructOptions {
  int n = 0;
  int delta = 0;
  int states = 1;
  int weight = -1;
  int x = 1;
  std::vector<int> T;
  std::string output;
};

struct CodecOptions {
  int k = 0;
  int delta = 0;
  int n = 0;
  int x0 = 1;
  std::string input;
  std::string output;
};

struct SimulateOptions {
  std::string input;
  std::string synth;
  int width = 0;
  std::uint64_t length = 0;
  std::optional<std::uint64_t> seed;
  bool encode = false;
  int k = 0;
  int delta = 0;
  int n = 0;
  double capacitance = 0.0;
  double vdd = 0.0;
  std::optional<double> freq;
  std::string json_out;
};

struct VerifyOptions {
  int n = 0;
  int delta = 0;
  int weight = -1;
  int t = -1;
  bool pair = false;
  int max_order = 0;
  double time_limit = 60.0;
  std::uint64_t node_limit = 10'000'000;
};

struct TableOptions {
  int max_n = 0;
  int max_delta = 0;
  int weight = -1;
  std::string output;
};

int measured_diameter(const lpbus::Code& code, bool kleitman_shape, int n, int delta) {
  if (code.size() <= kDiameterScanCap) return lpbus::diameter(code);
  if (kleitman_shape) return lpbus::extremal_diameter(n, delta);
  throw lpbus::resource_limit_error(
      "diameter measurement above desk scale for this code; see README");
}

int run_construct(const ConstructOptions& opt) {
  if (opt.delta > opt.n) {
    std::cerr << "note: delta " << opt.delta << " clamped to n = " << opt.n << "\n";
  }
  std::vector<lpbus::Code> codes;
  bool optimal = true;
  bool certified = true;
  if (opt.weight < 0) {
    if (opt.states == 1) {
      codes.push_back(lpbus::kleitman_code(opt.n, opt.delta, opt.x));
    } else {
      lpbus::LpCodeFamily fam = lpbus::stateful_optimal(opt.n, opt.delta, opt.x);
      codes = fam.subcodes;
    }
  } else {
    if (opt.states == 1) {
      codes.push_back(lpbus::cw_stateless_code(opt.n, opt.weight, opt.delta));
    } else {
      lpbus::CwStatefulCode cw =
          lpbus::cw_stateful_code(opt.n, opt.weight, opt.delta, opt.T);
      codes = cw.family.subcodes;
      certified = cw.certified;
      optimal = cw.certified;
    }
  }

  const bool kleitman_shape = opt.weight < 0;
  const int diam = measured_diameter(codes.front(), kleitman_shape, opt.n, opt.delta);
  json sidecar = {
      {"n", opt.n},
      {"delta", std::min(opt.delta, opt.n)},
      {"states", opt.states},
      {"size", codes.front().size()},
      {"diameter_or_crossdiameter", diam},
      {"optimal", optimal},
      {"certified", certified},
  };

  if (opt.output.empty()) {
    if (opt.states == 1) {
      lpbus::write_code(std::cout, codes.front());
    } else {
      for (std::size_t i = 0; i < codes.size(); ++i) {
        std::cout << "# state " << i << "\n";
        lpbus::write_code(std::cout, codes[i]);
      }
    }
    std::cerr << sidecar.dump() << "\n";
  } else {
    if (opt.states == 1) {
      lpbus::write_code_file(opt.output + ".code", codes.front());
    } else {
      for (std::size_t i = 0; i < codes.size(); ++i) {
        lpbus::write_code_file(opt.output + "_" + std::to_string(i) + ".code", codes[i]);
      }
    }
    std::ofstream js(opt.output + ".json");
    if (!js) throw std::runtime_error("cannot write sidecar: " + opt.output + ".json");
    js << sidecar.dump(2) << "\n";
    std::cout << sidecar.dump() << "\n";
  }
  return kExitOk;
}

int run_codec(const CodecOptions& opt, bool encoding) {
  const lpbus::CodecConfig cfg = lpbus::CodecConfig::make(opt.k, opt.delta, opt.n, opt.x0);
  const int in_width = encoding ? cfg.k() : cfg.n();
  const lpbus::Trace in = lpbus::read_trace_file(opt.input, in_width);
  const lpbus::Trace out =
      encoding ? lpbus::encode_trace(cfg, in) : lpbus::decode_trace(cfg, in);
  lpbus::write_trace_file(opt.output, out);
  return kExitOk;
}

json report_json(const lpbus::EnergyReport& r) {
  json j = {
      {"width", r.width},
      {"cycles", r.cycles},
      {"per_cycle", r.per_cycle},
      {"total_switches", r.total_switches},
      {"max_switches", r.max_switches},
      {"energy_joules", r.energy_joules},
      {"cycle_convention",
       "a trace of N words yields N-1 transitions; per_cycle[i] is the "
       "transition from word i+1 to word i+2"},
  };
  if (r.avg_power_watts) j["avg_power_watts"] = *r.avg_power_watts;
  return j;
}

void print_report(std::ostream& os, const std::string& label, const lpbus::EnergyReport& r) {
  os << label << ": width " << r.width << ", cycles " << r.cycles << ", total switches "
     << r.total_switches << ", max switches/cycle " << r.max_switches << ", energy "
     << r.energy_joules << " J";
  if (r.avg_power_watts) os << ", avg power " << *r.avg_power_watts << " W";
  os << "\n";
}

int run_simulate(const SimulateOptions& opt) {
  lpbus::Trace trace;
  if (!opt.input.empty()) {
    trace = lpbus::read_trace_file(opt.input, opt.width);
  } else {
    lpbus::TraceKind kind;
    if (opt.synth == "random") {
      kind = lpbus::TraceKind::random;
      if (!opt.seed) throw std::invalid_argument("--synth random requires --seed");
    } else if (opt.synth == "alternating") {
      kind = lpbus::TraceKind::alternating;
    } else if (opt.synth == "counter") {
      kind = lpbus::TraceKind::counter;
    } else {
      throw std::invalid_argument("--synth must be random, alternating, or counter");
    }
    trace = lpbus::synth_trace(kind, opt.width, opt.length, opt.seed.value_or(0));
  }

  const lpbus::BusParams params{opt.capacitance, opt.vdd, opt.freq};
  json out;
  if (opt.encode) {
    const lpbus::CodecConfig cfg = lpbus::CodecConfig::make(opt.k, opt.delta, opt.n);
    const lpbus::CompareResult cmp = lpbus::compare(trace, cfg, params);
    print_report(std::cout, "raw", cmp.raw);
    print_report(std::cout, "encoded", cmp.encoded);
    std::cout << "delta guarantee: " << cmp.delta_guarantee << " (encoded max "
              << cmp.encoded.max_switches << ")\n";
    out = {{"raw", report_json(cmp.raw)},
           {"encoded", report_json(cmp.encoded)},
           {"delta_guarantee", cmp.delta_guarantee}};
  } else {
    const lpbus::EnergyReport report = lpbus::energy(trace, params);
    print_report(std::cout, "trace", report);
    out = report_json(report);
  }
  if (!opt.json_out.empty()) {
    if (opt.json_out == "-") {
      std::cout << out.dump(2) << "\n";
    } else {
      std::ofstream js(opt.json_out);
      if (!js) throw std::runtime_error("cannot write JSON report: " + opt.json_out);
      js << out.dump(2) << "\n";
    }
  }
  return kExitOk;
}

int run_verify(const VerifyOptions& opt) {
  lpbus::SearchBudget budget{opt.max_order, opt.time_limit, opt.node_limit};
  json out = {{"n", opt.n}, {"delta", opt.delta}};
  lpbus::SearchStatus status = lpbus::SearchStatus::exact;
  lpbus::Count constructed, oracle;

  if (opt.weight >= 0 || opt.t >= 0) {
    if (opt.weight < 0 || opt.t < 0) {
      throw std::invalid_argument("verify: --weight and --t must be given together");
    }
    const lpbus::IntersectParams p{opt.n, opt.weight, opt.t};
    constructed = lpbus::max_intersecting_size(p);
    const auto result = lpbus::max_t_intersecting(opt.n, opt.weight, opt.t, budget);
    oracle = result.size;
    status = result.status;
    out["weight"] = opt.weight;
    out["t"] = opt.t;
    out["mode"] = "intersect";
    out["nodes"] = result.nodes;
  } else if (opt.pair) {
    constructed = lpbus::kleitman_size(opt.n, opt.delta);
    const auto result = lpbus::max_delta_pair(opt.n, opt.delta, budget);
    oracle = result.min_size;
    status = result.status;
    out["mode"] = "pair";
  } else {
    constructed = lpbus::kleitman_size(opt.n, opt.delta);
    const auto result = lpbus::max_diameter_code(opt.n, opt.delta, budget);
    oracle = result.size;
    status = result.status;
    out["mode"] = "diameter";
    out["nodes"] = result.nodes;
  }

  out["constructed"] = constructed.as_u64();
  out["oracle"] = oracle.as_u64();
  if (status == lpbus::SearchStatus::exact) {
    out["status"] = "exact";
    out["match"] = constructed == oracle;
  } else {
    out["status"] = "budget_exceeded";
    out["match"] = nullptr;
  }
  std::cout << out.dump() << "\n";
  return status == lpbus::SearchStatus::exact ? kExitOk : kExitBudget;
}

int run_table(const TableOptions& opt) {
  if (opt.max_n < 1 || opt.max_n > 64) {
    throw std::invalid_argument("table: --max-n must be in [1, 64]");
  }
  if (opt.max_delta < 0) throw std::invalid_argument("table: --max-delta must be >= 0");

  std::ostringstream csv;
  csv << "n\\delta";
  for (int d = 0; d <= opt.max_delta; ++d) csv << "," << d;
  csv << "\n";
  for (int n = 1; n <= opt.max_n; ++n) {
    csv << n;
    for (int d = 0; d <= opt.max_delta; ++d) {
      csv << ",";
      if (opt.weight < 0) {
        csv << lpbus::kleitman_size(n, d).str();
      } else if (opt.weight > n || d % 2 != 0) {
        // blank: no weight-w words, or odd delta (constant-weight diameters are even)
      } else {
        const int t = opt.weight - d / 2;
        if (t <= 0) {
          csv << lpbus::binomial(n, opt.weight).str();
        } else {
          csv << lpbus::max_intersecting_size(lpbus::IntersectParams{n, opt.weight, t}).str();
        }
      }
    }
    csv << "\n";
  }
  if (opt.output.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(opt.output);
    if (!f) throw std::runtime_error("cannot write table: " + opt.output);
    f << csv.str();
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal memoryless low-power bus codes"};
  app.require_subcommand(1);

  ConstructOptions construct_opt;
  auto* construct = app.add_subcommand("construct", "emit an optimal code");
  construct->add_option("--n", construct_opt.n, "bus width (wires)")->required();
  construct->add_option("--delta", construct_opt.delta, "max transitions per cycle")->required();
  construct->add_option("--states", construct_opt.states, "1 (stateless) or 2 (stateful)")
      ->check(CLI::IsMember({1, 2}));
  construct->add_option("--weight", construct_opt.weight, "constant codeword weight");
  construct->add_option("--x", construct_opt.x, "fixed point for odd delta (default 1)");
  construct->add_option("--T", construct_opt.T, "fixed t-subset for the stateful star")
      ->delimiter(',');
  construct->add_option("--output", construct_opt.output, "file prefix (stdout when omitted)");

  CodecOptions encode_opt;
  auto* encode = app.add_subcommand("encode", "encode a k-bit trace onto n wires");
  encode->add_option("--k", encode_opt.k, "source bits")->required();
  encode->add_option("--delta", encode_opt.delta, "transition guarantee")->required();
  encode->add_option("--n", encode_opt.n, "bus width (default: minimal)");
  encode->add_option("--x0", encode_opt.x0, "fixed point for odd delta");
  encode->add_option("--input", encode_opt.input, "source trace file")->required();
  encode->add_option("--output", encode_opt.output, "encoded trace file")->required();

  CodecOptions decode_opt;
  auto* decode = app.add_subcommand("decode", "decode an encoded trace back to k bits");
  decode->add_option("--k", decode_opt.k, "source bits")->required();
  decode->add_option("--delta", decode_opt.delta, "transition guarantee")->required();
  decode->add_option("--n", decode_opt.n, "bus width (default: minimal)");
  decode->add_option("--x0", decode_opt.x0, "fixed point for odd delta");
  decode->add_option("--input", decode_opt.input, "encoded trace file")->required();
  decode->add_option("--output", decode_opt.output, "decoded trace file")->required();

  SimulateOptions sim_opt;
  auto* simulate = app.add_subcommand("simulate", "switching-activity energy simulation");
  auto* sim_input = simulate->add_option("--input", sim_opt.input, "trace file");
  auto* sim_synth =
      simulate->add_option("--synth", sim_opt.synth, "random | alternating | counter");
  sim_input->excludes(sim_synth);
  simulate->add_option("--width", sim_opt.width, "trace width (required for --synth or hex-only files)");
  simulate->add_option("--length", sim_opt.length, "synthetic trace length");
  simulate->add_option("--seed", sim_opt.seed, "rng seed (required for --synth random)");
  simulate->add_flag("--encode", sim_opt.encode, "compare raw vs encoded transmission");
  simulate->add_option("--k", sim_opt.k, "source bits (with --encode)");
  simulate->add_option("--delta", sim_opt.delta, "transition guarantee (with --encode)");
  simulate->add_option("--n", sim_opt.n, "bus width (with --encode; default minimal)");
  simulate->add_option("--capacitance", sim_opt.capacitance, "per-wire capacitance, farads")
      ->required();
  simulate->add_option("--vdd", sim_opt.vdd, "supply voltage, volts")->required();
  simulate->add_option("--freq", sim_opt.freq, "bus frequency, hertz");
  simulate->add_option("--json", sim_opt.json_out, "JSON report path ('-' for stdout)");

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "oracle vs closed-form comparison");
  verify->add_option("--n", verify_opt.n, "order")->required();
  verify->add_option("--delta", verify_opt.delta, "max distance")->required();
  verify->add_option("--weight", verify_opt.weight, "uniform block size (with --t)");
  verify->add_option("--t", verify_opt.t, "intersection threshold (with --weight)");
  verify->add_flag("--pair", verify_opt.pair, "delta-pair sweep instead of diameter search");
  verify->add_option("--max-order", verify_opt.max_order, "override the search's n cap");
  verify->add_option("--time-limit", verify_opt.time_limit, "seconds per search");
  verify->add_option("--node-limit", verify_opt.node_limit, "branch-and-bound node cap");

  TableOptions table_opt;
  auto* table = app.add_subcommand("table", "CSV of optimal code sizes");
  table->add_option("--max-n", table_opt.max_n, "largest order (<= 64)")->required();
  table->add_option("--max-delta", table_opt.max_delta, "largest delta column")->required();
  table->add_option("--weight", table_opt.weight, "tabulate constant-weight sizes instead");
  table->add_option("--output", table_opt.output, "CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (app.got_subcommand(construct)) return run_construct(construct_opt);
    if (app.got_subcommand(encode)) return run_codec(encode_opt, /*encoding=*/true);
    if (app.got_subcommand(decode)) return run_codec(decode_opt, /*encoding=*/false);
    if (app.got_subcommand(simulate)) return run_simulate(sim_opt);
    if (app.got_subcommand(verify)) return run_verify(verify_opt);
    if (app.got_subcommand(table)) return run_table(table_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
