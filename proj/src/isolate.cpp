#include "ncpit/isolate.hpp"

#include <algorithm>
#include <set>

namespace ncpit {

namespace {

std::vector<Word> validated_distinct(const std::vector<Word>& words) {
  if (words.empty()) fail(Errc::EmptySet, "isolating_index_set: empty word set");
  const std::size_t len = words[0].degree();
  for (const Word& w : words) {
    if (w.alphabet != Alphabet::X)
      fail(Errc::Config, "isolating_index_set: words must be over the bivariate alphabet");
    if (w.degree() != len)
      fail(Errc::MixedLengths, "isolating_index_set: words of differing lengths");
  }
  std::set<Word> dedup(words.begin(), words.end());
  return {dedup.begin(), dedup.end()};
}

}  // namespace

IsolationResult isolating_index_set(const std::vector<Word>& words) {
  std::vector<Word> surviving = validated_distinct(words);
  const std::size_t len = surviving[0].degree();

  IsolationResult result;
  while (surviving.size() > 1) {
    // First position where not all survivors agree. Positions recorded in
    // earlier rounds cannot disagree again, so scanning from 1 is safe.
    std::uint32_t pos = 0;
    for (std::uint32_t i = 1; i <= len; ++i) {
      std::uint32_t first = surviving[0].at(i);
      bool all_agree = std::all_of(surviving.begin(), surviving.end(),
                                   [&](const Word& w) { return w.at(i) == first; });
      if (!all_agree) {
        pos = i;
        break;
      }
    }
    // Distinct equal-length words must disagree somewhere.
    if (pos == 0) fail(Errc::Config, "isolating_index_set: no disagreement among distinct words");

    std::vector<Word> side0, side1;
    for (Word& w : surviving) (w.at(pos) == 0 ? side0 : side1).push_back(std::move(w));
    std::uint32_t kept_bit = side0.size() <= side1.size() ? 0 : 1;
    surviving = kept_bit == 0 ? std::move(side0) : std::move(side1);

    result.index_set.push_back(pos);
    result.trace.push_back({pos, kept_bit, surviving.size()});
  }
  result.isolated = surviving[0];
  return result;
}

bool check_isolating(const std::vector<Word>& words, const IndexSet& index_set, const Word& m) {
  for (const Word& other : words) {
    if (other == m) continue;
    bool differs = false;
    for (std::uint32_t i : index_set) {
      if (other.at(i) != m.at(i)) {
        differs = true;
        break;
      }
    }
    if (!differs) return false;
  }
  return true;
}

}  // namespace ncpit
