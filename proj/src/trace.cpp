#include "lpbus/trace.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "lpbus/errors.hpp"

namespace lpbus {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

BitWord parse_hex(const std::string& line, int width, int lineno) {
  if (width <= 0) {
    throw parse_error("hex word before the trace width is known; "
                      "start with a bit-string line or pass an explicit width",
                      lineno);
  }
  if (line.size() <= 2) throw parse_error("empty hex value", lineno);
  BitWord w(width);
  int bit_from_right = 0;  // numeric bit index, 0 = least significant
  for (std::size_t i = line.size(); i-- > 2;) {
    const int d = hex_digit(line[i]);
    if (d < 0) throw parse_error("invalid hex digit", lineno);
    for (int b = 0; b < 4; ++b, ++bit_from_right) {
      if (((d >> b) & 1) == 0) continue;
      if (bit_from_right >= width) {
        throw parse_error("hex value exceeds the trace width", lineno);
      }
      w.set(width - bit_from_right);
    }
  }
  return w;
}

}  // namespace

Trace make_trace(int width, std::vector<BitWord> words, std::string source) {
  if (width < 0) throw std::invalid_argument("Trace: negative width");
  for (const BitWord& w : words) {
    if (w.width() != width) throw std::invalid_argument("Trace: word width mismatch");
  }
  return Trace{width, std::move(words), std::move(source)};
}

Trace read_trace(std::istream& in, int expected_width) {
  std::vector<BitWord> words;
  int width = expected_width > 0 ? expected_width : -1;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    BitWord w;
    if (line.size() > 2 && line[0] == '0' && (line[1] == 'x' || line[1] == 'X')) {
      w = parse_hex(line, width, lineno);
    } else {
      try {
        w = BitWord::from_string(line);
      } catch (const std::invalid_argument& e) {
        throw parse_error(e.what(), lineno);
      }
      if (width == -1) {
        width = w.width();
      } else if (w.width() != width) {
        throw parse_error("word width differs from the trace width", lineno);
      }
    }
    words.push_back(std::move(w));
  }
  if (width == -1) width = 0;
  return Trace{width, std::move(words), ""};
}

Trace read_trace_file(const std::string& path, int expected_width) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);
  Trace t = read_trace(in, expected_width);
  t.source = path;
  return t;
}

void write_trace(std::ostream& out, const Trace& trace) {
  for (const BitWord& w : trace.words) out << w.str() << '\n';
}

void write_trace_file(const std::string& path, const Trace& trace) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open trace file for writing: " + path);
  write_trace(out, trace);
}

}  // namespace lpbus
