#pragma once

#include <cstdint>
#include <vector>

#include "ncpit/error.hpp"
#include "ncpit/ncpoly.hpp"

namespace ncpit {

// Strictly increasing 1-based positions within a common word length.
using IndexSet = std::vector<std::uint32_t>;

struct IsolationStep {
  std::uint32_t position = 0;   // first position where survivors disagree
  std::uint32_t chosen_bit = 0; // side kept (x0 on ties)
  std::size_t surviving = 0;    // survivor count after the step
};

struct IsolationResult {
  IndexSet index_set;
  Word isolated;
  std::vector<IsolationStep> trace;
};

// Halving procedure: repeatedly split the surviving set at the first
// disagreeing position, keep the smaller side (ties keep the x0 side),
// record the position; stops at a singleton. |index_set| <= ceil(log2 |M|).
// A singleton input yields the empty index set.
IsolationResult isolating_index_set(const std::vector<Word>& words);

// Definition check, brute force: true iff every other word of M differs
// from m at some position of I.
bool check_isolating(const std::vector<Word>& words, const IndexSet& index_set, const Word& m);

}  // namespace ncpit
