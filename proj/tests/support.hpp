#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <random>
#include <unordered_set>

#include "schubert/rootsys.hpp"
#include "schubert/weyl.hpp"

namespace schubert::test {

// Tests write words the way they are printed: 1-based letters.
inline Word w1(std::initializer_list<std::size_t> letters) {
  Word w;
  for (std::size_t l : letters) w.push_back(l - 1);
  return w;
}

inline RootSystem rs_of(const char* name) { return RootSystem(CartanType::parse(name)); }

// Every element represented by a reduced subword of w's canonical word.
inline std::unordered_set<WeylElement, WeylElementHash> subword_ideal(const WeylGroup& g, const WeylElement& w) {
  std::unordered_set<WeylElement, WeylElementHash> out;
  const Word& word = w.word();
  for (std::uint32_t mask = 0; mask < (1u << word.size()); ++mask) {
    Word sub;
    for (std::size_t k = 0; k < word.size(); ++k)
      if (mask & (1u << k)) sub.push_back(word[k]);
    const WeylElement u = g.from_word(sub);
    if (u.length() == sub.size()) out.insert(u);
  }
  return out;
}

// A reduced word for w built by peeling random right descents. Returns
// nullopt if a few attempts only reproduce the canonical word.
inline std::optional<Word> other_reduced_word(const WeylGroup& g, const WeylElement& w, std::mt19937& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    Word word(w.length());
    WeylElement cur = w;
    for (std::size_t pos = w.length(); pos-- > 0;) {
      std::vector<std::size_t> descents;
      for (std::size_t i = 0; i < g.rank(); ++i)
        if (g.is_right_descent(cur, i)) descents.push_back(i);
      const std::size_t i = descents[std::uniform_int_distribution<std::size_t>(0, descents.size() - 1)(rng)];
      word[pos] = i;
      cur = g.multiply(cur, g.simple_reflection(i));
    }
    if (word != w.word()) return word;
  }
  return std::nullopt;
}

}  // namespace schubert::test
