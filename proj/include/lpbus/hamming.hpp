#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "lpbus/bitword.hpp"

namespace lpbus {

// A finite set of distinct equal-width words, stored deduplicated in
// canonical (weight, colex) order so identical codes compare equal and
// print identically.
class Code {
 public:
  Code() = default;
  Code(int n, std::vector<BitWord> words);

  int n() const { return n_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  const std::vector<BitWord>& words() const { return words_; }
  bool contains(const BitWord& word) const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  int n_ = 0;
  std::vector<BitWord> words_;
};

// The set-system mirror of a code: blocks of [n] as incidence words,
// deduplicated and canonically ordered by (size, colex).
class SetSystem {
 public:
  SetSystem() = default;
  SetSystem(int n, std::vector<BitWord> blocks);

  int n() const { return n_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }
  const std::vector<BitWord>& blocks() const { return blocks_; }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  int n_ = 0;
  std::vector<BitWord> blocks_;
};

// Max pairwise distance; a singleton has diameter 0, an empty code is an error.
int diameter(const Code& code);

// Max distance across the pair; cross_diameter(c, c) == diameter(c).
int cross_diameter(const Code& c1, const Code& c2);

SetSystem to_set_system(const Code& code);
Code from_set_system(const SetSystem& system);

// Text format: one fixed-width bit string per line; '#' starts a comment
// line; blank lines are ignored.
Code read_code(std::istream& in);
Code read_code_file(const std::string& path);
void write_code(std::ostream& out, const Code& code);
void write_code_file(const std::string& path, const Code& code);

}  // namespace lpbus
