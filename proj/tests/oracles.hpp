#pragma once

// Brute-force reference implementations used to check the library. They
// avoid the lattice code under test: simples come from enumerating
// permutations, divisibility from rewriting positive words with the braid
// relations, and word length from breadth-first search.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "garside/braid.hpp"
#include "garside/element.hpp"

namespace oracle {

using garside::Element;
using garside::ElementHash;
using garside::Simple;
using Word = std::vector<int>;  // positive, 1-based

/// Every permutation of 0..n-1 in lexicographic order.
inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// A reduced word for the permutation braid sending the strand at position i
/// to position p[i], found by bubble sort.
inline Word bubble_word(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> at(n);  // at[k] = strand currently at position k
  for (int i = 0; i < n; ++i) at[i] = i;
  Word w;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (int k = 0; k + 1 < n; ++k) {
      if (p[at[k]] > p[at[k + 1]]) {
        std::swap(at[k], at[k + 1]);
        w.push_back(k + 1);
        swapped = true;
      }
    }
  }
  return w;
}

/// All positive words equal to w in Bₙ⁺, by closing under the braid
/// relations.
inline std::set<Word> braid_class(const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> todo{w};
  while (!todo.empty()) {
    const Word u = todo.front();
    todo.pop_front();
    auto visit = [&](Word v) {
      if (seen.insert(v).second) todo.push_back(std::move(v));
    };
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      const int a = u[i];
      const int b = u[i + 1];
      if (std::abs(a - b) >= 2) {
        Word v = u;
        std::swap(v[i], v[i + 1]);
        visit(std::move(v));
      }
      if (i + 2 < u.size() && std::abs(a - b) == 1 && u[i + 2] == a) {
        Word v = u;
        v[i] = b;
        v[i + 1] = a;
        v[i + 2] = b;
        visit(std::move(v));
      }
    }
  }
  return seen;
}

inline bool positive_equal(const Word& a, const Word& b) {
  if (a.size() != b.size()) return false;
  return braid_class(a).count(b) > 0;
}

/// d ≤_L w for positive words: some spelling of w starts with d.
inline bool prefix_divides(const Word& d, const std::set<Word>& w_class) {
  for (const Word& u : w_class) {
    if (u.size() >= d.size() && std::equal(d.begin(), d.end(), u.begin())) {
      return true;
    }
  }
  return false;
}

/// The simples of Bₙ, each with an independently computed word.
struct SimpleTable {
  std::vector<Word> words;
  std::vector<std::vector<int>> perms;
};

inline SimpleTable simple_table(int n) {
  SimpleTable t;
  for (const auto& p : permutations(n)) {
    t.perms.push_back(p);
    t.words.push_back(bubble_word(p));
  }
  return t;
}

/// Greatest common left divisor among simples, by exhaustive prefix search.
inline Word simple_meet(const SimpleTable& t, const Word& a, const Word& b) {
  const auto ca = braid_class(a);
  const auto cb = braid_class(b);
  Word best;
  for (const Word& d : t.words) {
    if (d.size() > best.size() && prefix_divides(d, ca) &&
        prefix_divides(d, cb)) {
      best = d;
    }
  }
  return best;
}

/// Least common right multiple among simples.
inline Word simple_join(const SimpleTable& t, const Word& a, const Word& b) {
  std::optional<Word> best;
  for (const Word& c : t.words) {
    const auto cc = braid_class(c);
    if (prefix_divides(a, cc) && prefix_divides(b, cc) &&
        (!best || c.size() < best->size())) {
      best = c;
    }
  }
  return *best;
}

/// Left-greedy normal form of a positive word as factor words: repeatedly
/// strip the longest simple prefix.
inline std::vector<Word> greedy_factors(const SimpleTable& t, Word w) {
  std::vector<Word> out;
  while (!w.empty()) {
    const auto cw = braid_class(w);
    Word best;
    Word rest = w;
    for (const Word& d : t.words) {
      if (d.size() <= best.size()) continue;
      for (const Word& u : cw) {
        if (u.size() >= d.size() && std::equal(d.begin(), d.end(), u.begin())) {
          best = d;
          rest.assign(u.begin() + static_cast<std::ptrdiff_t>(d.size()),
                      u.end());
          break;
        }
      }
    }
    out.push_back(best);
    w = rest;
  }
  return out;
}

/// Distances from the identity in the Cayley graph over simples and their
/// inverses, up to `radius`.
inline std::unordered_map<Element, int, ElementHash> word_length_ball(
    const std::shared_ptr<const garside::Structure>& S, int radius) {
  std::vector<Element> gens;
  const int n = static_cast<const garside::BraidStructure&>(*S).strands();
  for (const auto& p : permutations(n)) {
    const Word w = bubble_word(p);
    if (w.empty()) continue;
    const Element s = garside::normalize(S, w);
    gens.push_back(s);
    gens.push_back(garside::inverse(s));
  }
  std::unordered_map<Element, int, ElementHash> dist{{Element(S), 0}};
  std::vector<Element> frontier{Element(S)};
  for (int r = 1; r <= radius; ++r) {
    std::vector<Element> next;
    for (const Element& x : frontier) {
      for (const Element& g : gens) {
        Element y = garside::multiply(x, g);
        if (dist.emplace(y, r).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return dist;
}

/// Random element Δ^r·(random simples), normalized; 1 < len ≤ max_len need
/// not hold exactly since normalization may merge factors.
inline Element random_element(const std::shared_ptr<const garside::Structure>& S,
                              std::mt19937_64& rng, int max_len,
                              int max_abs_delta) {
  const int n = static_cast<const garside::BraidStructure&>(*S).strands();
  static thread_local std::map<int, std::vector<std::vector<int>>> cache;
  auto& perms = cache[n];
  if (perms.empty()) perms = permutations(n);
  std::uniform_int_distribution<int> len_d(0, max_len);
  std::uniform_int_distribution<int> delta_d(-max_abs_delta, max_abs_delta);
  std::uniform_int_distribution<std::size_t> simple_d(1, perms.size() - 2);
  const auto& B = static_cast<const garside::BraidStructure&>(*S);
  std::vector<Simple> f;
  const int k = len_d(rng);
  for (int i = 0; i < k; ++i) {
    // perms are lexicographic: index 0 is the identity and the last is Δ.
    f.push_back(B.simple_from_permutation(perms[simple_d(rng)]));
  }
  return Element(S, delta_d(rng), std::move(f));
}

/// Random signed word of the given length.
inline std::vector<int> random_word(int atoms, std::size_t length,
                                    std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, atoms);
  std::bernoulli_distribution sign(0.5);
  std::vector<int> w;
  for (std::size_t i = 0; i < length; ++i) {
    const int a = d(rng);
    w.push_back(sign(rng) ? -a : a);
  }
  return w;
}

}  // namespace oracle
