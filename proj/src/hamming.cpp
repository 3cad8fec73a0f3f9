#include "lpbus/hamming.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lpbus/errors.hpp"

namespace lpbus {

namespace {

void check_widths(int n, const std::vector<BitWord>& words, const char* what) {
  for (const BitWord& w : words) {
    if (w.width() != n) {
      throw std::invalid_argument(std::string(what) + ": word width does not match n");
    }
  }
}

std::vector<BitWord> canonicalize(std::vector<BitWord> words) {
  std::sort(words.begin(), words.end(), canonical_less);
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

// Max pairwise distance between two word lists (or within one when they
// alias). Uses a flattened single-limb scan for widths <= 64.
int max_pair_distance(const std::vector<BitWord>& a, const std::vector<BitWord>& b, int width,
                      bool same) {
  int best = 0;
  if (width <= 64) {
    auto flatten = [](const std::vector<BitWord>& ws) {
      std::vector<std::uint64_t> m;
      m.reserve(ws.size());
      for (const BitWord& w : ws) m.push_back(w.width() == 0 ? 0 : w.limbs()[0]);
      return m;
    };
    const std::vector<std::uint64_t> ma = flatten(a);
    const std::vector<std::uint64_t> mb = same ? std::vector<std::uint64_t>{} : flatten(b);
    const std::vector<std::uint64_t>& rb = same ? ma : mb;
    for (std::size_t i = 0; i < ma.size(); ++i) {
      const std::uint64_t u = ma[i];
      const std::size_t j0 = same ? i + 1 : 0;
      for (std::size_t j = j0; j < rb.size(); ++j) {
        const int d = std::popcount(u ^ rb[j]);
        if (d > best) {
          best = d;
          if (best == width) return best;
        }
      }
    }
    return best;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t j0 = same ? i + 1 : 0;
    for (std::size_t j = j0; j < b.size(); ++j) {
      const int d = hamming_distance(a[i], b[j]);
      if (d > best) {
        best = d;
        if (best == width) return best;
      }
    }
  }
  return best;
}

}  // namespace

Code::Code(int n, std::vector<BitWord> words) : n_(n) {
  if (n < 0) throw std::invalid_argument("Code: negative width");
  check_widths(n, words, "Code");
  words_ = canonicalize(std::move(words));
}

bool Code::contains(const BitWord& word) const {
  return std::binary_search(words_.begin(), words_.end(), word, canonical_less);
}

SetSystem::SetSystem(int n, std::vector<BitWord> blocks) : n_(n) {
  if (n < 0) throw std::invalid_argument("SetSystem: negative order");
  check_widths(n, blocks, "SetSystem");
  blocks_ = canonicalize(std::move(blocks));
}

int diameter(const Code& code) {
  if (code.empty()) throw std::invalid_argument("diameter: empty code");
  return max_pair_distance(code.words(), code.words(), code.n(), /*same=*/true);
}

int cross_diameter(const Code& c1, const Code& c2) {
  if (c1.empty() || c2.empty()) throw std::invalid_argument("cross_diameter: empty code");
  if (c1.n() != c2.n()) throw std::invalid_argument("cross_diameter: width mismatch");
  if (&c1 == &c2 || c1 == c2) {
    return max_pair_distance(c1.words(), c1.words(), c1.n(), /*same=*/true);
  }
  return max_pair_distance(c1.words(), c2.words(), c1.n(), /*same=*/false);
}

SetSystem to_set_system(const Code& code) { return SetSystem(code.n(), code.words()); }

Code from_set_system(const SetSystem& system) { return Code(system.n(), system.blocks()); }

Code read_code(std::istream& in) {
  std::vector<BitWord> words;
  std::string line;
  int width = -1;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    BitWord w;
    try {
      w = BitWord::from_string(line);
    } catch (const std::invalid_argument& e) {
      throw parse_error(e.what(), lineno);
    }
    if (width == -1) {
      width = w.width();
    } else if (w.width() != width) {
      throw parse_error("word width differs from earlier lines", lineno);
    }
    words.push_back(std::move(w));
  }
  if (width == -1) width = 0;
  return Code(width, std::move(words));
}

Code read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open code file: " + path);
  return read_code(in);
}

void write_code(std::ostream& out, const Code& code) {
  for (const BitWord& w : code.words()) out << w.str() << '\n';
}

void write_code_file(const std::string& path, const Code& code) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open code file for writing: " + path);
  write_code(out, code);
}

}  // namespace lpbus
