#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lpbus/bitword.hpp"

namespace lpbus {

// An ordered sequence of equal-width words; N words make N-1 transitions.
struct Trace {
  int width = 0;
  std::vector<BitWord> words;
  std::string source;  // file path or generator descriptor
};

// Validates that every word has the given width.
Trace make_trace(int width, std::vector<BitWord> words, std::string source = "");

// Text format: one word per line, either a fixed-width bit string or a
// 0x-prefixed hex value expanded MSB-first to the trace width; '#' lines are
// comments, blank lines are skipped. Pass expected_width > 0 when the file
// may open with a hex line (bit-string lines establish the width themselves).
Trace read_trace(std::istream& in, int expected_width = 0);
Trace read_trace_file(const std::string& path, int expected_width = 0);
void write_trace(std::ostream& out, const Trace& trace);
void write_trace_file(const std::string& path, const Trace& trace);

}  // namespace lpbus
