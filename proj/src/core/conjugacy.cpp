#include "garside/conjugacy.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "garside/errors.hpp"
#include "garside/simultaneous.hpp"

namespace garside {

namespace {

using ElementSet = std::unordered_set<Element, ElementHash>;

template <typename Step, typename Better>
void improve(Element& h, Element& x, StepCounter& steps, Step step,
             Better better) {
  for (;;) {
    ElementSet seen{h};
    Element cur = h;
    Element cur_x = x;
    bool improved = false;
    for (;;) {
      steps.tick();
      Conjugation next = step(cur);
      cur_x = multiply(cur_x, next.conjugator);
      if (better(h, next.element)) {
        h = std::move(next.element);
        x = std::move(cur_x);
        improved = true;
        break;
      }
      if (!seen.insert(next.element).second) break;
      cur = std::move(next.element);
    }
    if (!improved) return;
  }
}

Simple as_simple(const Element& s) {
  const Structure& S = s.structure();
  if (s.inf() >= 1) return S.delta();
  if (s.factors().empty()) return S.identity();
  return s.factors().front();
}

// Joins in the lower bounds that any admissible c ≥ s must satisfy:
//   inf(c⁻¹hc) ≥ p  ⇔  τ^p(c) ≤_L X c               ⇒  c ≥ X⁻¹ τ^p(s)
//   sup(c⁻¹hc) ≤ p+l ⇔  X c ≤_L Δ^l τ^{p+l}(c)        ⇒  c ≥ τ^{-(p+l)}(Δ^{-l} X s)
// where p = inf h, l = len h, X = Δ^{-p} h.
Simple super_fixpoint(std::span<const Element> constraints, const Simple& start,
                      StepCounter& steps) {
  const auto& ptr = constraints.front().structure_ptr();
  Element s = from_simple(ptr, start);
  for (;;) {
    steps.tick();
    Element next = s;
    for (const Element& h : constraints) {
      const std::int64_t p = h.inf();
      const auto l = static_cast<std::int64_t>(h.canonical_length());
      const Element X = multiply(delta_element(ptr, -p), h);
      const Element from_inf = multiply(inverse(X), tau(s, p));
      const Element from_sup =
          tau(multiply(delta_element(ptr, -l), multiply(X, s)), -(p + l));
      next = left_join(next, left_join(from_inf, from_sup));
    }
    if (next == s) break;
    s = std::move(next);
  }
  return as_simple(s);
}

bool all_return_under_cycling(std::span<const Element> hs, const Element& c,
                              const SearchLimits& limits) {
  for (const Element& h : hs) {
    if (!returns_under_cycling(conjugate(h, c), limits)) return false;
  }
  return true;
}

std::vector<Element> constraints_for(const Element& h, SummitKind kind) {
  if (kind != SummitKind::stable) return {h};
  std::vector<Element> powers;
  const int top = h.structure().delta_length();
  powers.reserve(static_cast<std::size_t>(top));
  Element p = h;
  for (int n = 1; n <= top; ++n) {
    powers.push_back(p);
    p = multiply(p, h);
  }
  return powers;
}

SummitSet close_summit_set(const Conjugation& seed, SummitKind kind,
                           const SearchLimits& limits) {
  const auto& ptr = seed.element.structure_ptr();
  const Structure& S = *ptr;
  std::vector<Element> members{seed.element};
  std::vector<Element> witnesses{seed.conjugator};
  std::unordered_map<Element, std::size_t, ElementHash> index{
      {seed.element, 0}};
  std::vector<SummitEdge> edges;
  const bool ultra = kind == SummitKind::ultra;

  for (std::size_t i = 0; i < members.size(); ++i) {
    const Element h = members[i];
    const std::vector<Element> constraints = constraints_for(h, kind);
    for (int a = 0; a < S.atom_count(); ++a) {
      const Simple c =
          minimal_simple_conjugator(constraints, S.atom(a), ultra, limits);
      const Element ce = from_simple(ptr, c);
      Element next = conjugate(h, ce);
      auto [it, inserted] = index.try_emplace(next, members.size());
      if (inserted) {
        members.push_back(std::move(next));
        witnesses.push_back(multiply(witnesses[i], ce));
        check_set_size(members.size(), limits, "summit_set");
      }
      edges.push_back({i, c, it->second});
    }
  }

  std::vector<std::size_t> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return canonical_less(members[a], members[b]);
  });
  std::vector<std::size_t> rank(members.size());
  SummitSet out;
  out.kind = kind;
  out.inf_s = seed.element.inf();
  out.sup_s = seed.element.sup();
  for (std::size_t r = 0; r < order.size(); ++r) {
    rank[order[r]] = r;
    out.members.push_back(members[order[r]]);
    out.witnesses.push_back(witnesses[order[r]]);
  }
  for (SummitEdge& e : edges) {
    e.from = rank[e.from];
    e.to = rank[e.to];
  }
  std::sort(edges.begin(), edges.end(),
            [&](const SummitEdge& a, const SummitEdge& b) {
              if (a.from != b.from) return a.from < b.from;
              if (a.to != b.to) return a.to < b.to;
              return S.word(a.label) < S.word(b.label);
            });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.edges = std::move(edges);
  return out;
}

}  // namespace

std::string_view to_string(SummitKind kind) {
  switch (kind) {
    case SummitKind::super:
      return "super";
    case SummitKind::ultra:
      return "ultra";
    case SummitKind::stable:
      return "stable";
  }
  return "unknown";
}

// ---------------------------------------------------------------- cycling --

Conjugation cycling_step(const Element& x) {
  const auto& ptr = x.structure_ptr();
  if (x.factors().empty()) return {x, Element(ptr)};
  const Structure& S = *ptr;
  const auto& f = x.factors();
  const Simple moved = S.tau(f.front(), -x.delta_power());
  std::vector<Simple> rest(f.begin() + 1, f.end());
  rest.push_back(moved);
  return {Element(ptr, x.delta_power(), std::move(rest)), from_simple(ptr, moved)};
}

Conjugation decycling_step(const Element& x) {
  const auto& ptr = x.structure_ptr();
  if (x.factors().empty()) return {x, Element(ptr)};
  const Structure& S = *ptr;
  const auto& f = x.factors();
  std::vector<Simple> rest;
  rest.reserve(f.size());
  rest.push_back(S.tau(f.back(), x.delta_power()));
  rest.insert(rest.end(), f.begin(), f.end() - 1);
  return {Element(ptr, x.delta_power(), std::move(rest)),
          inverse(from_simple(ptr, f.back()))};
}

Conjugation summit_seek(const Element& g, const SearchLimits& limits) {
  StepCounter steps(limits, "summit_seek");
  Element h = g;
  Element x(g.structure_ptr());
  if (g.is_delta_power()) return {h, x};

  improve(h, x, steps, cycling_step,
          [](const Element& old, const Element& now) {
            return now.inf() > old.inf();
          });
  improve(h, x, steps, decycling_step,
          [](const Element& old, const Element& now) {
            return now.sup() < old.sup();
          });

  std::vector<Element> trail{h};
  std::vector<Element> trail_x{x};
  std::unordered_map<Element, std::size_t, ElementHash> seen{{h, 0}};
  for (;;) {
    steps.tick();
    Conjugation next = cycling_step(trail.back());
    auto it = seen.find(next.element);
    if (it != seen.end()) return {trail[it->second], trail_x[it->second]};
    seen.emplace(next.element, trail.size());
    trail_x.push_back(multiply(trail_x.back(), next.conjugator));
    trail.push_back(std::move(next.element));
  }
}

SummitInvariants summit_invariants(const Element& g,
                                   const SearchLimits& limits) {
  const Conjugation c = summit_seek(g, limits);
  return {c.element.inf(), c.element.sup()};
}

bool is_super_summit(const Element& h, const SearchLimits& limits) {
  const SummitInvariants inv = summit_invariants(h, limits);
  return h.inf() == inv.inf_s && h.sup() == inv.sup_s;
}

bool returns_under_cycling(const Element& h, const SearchLimits& limits) {
  StepCounter steps(limits, "returns_under_cycling");
  ElementSet seen;
  Element cur = cycling(h);
  while (!(cur == h)) {
    steps.tick();
    if (!seen.insert(cur).second) return false;
    cur = cycling(cur);
  }
  return true;
}

bool is_ultra_summit(const Element& h, const SearchLimits& limits) {
  return is_super_summit(h, limits) && returns_under_cycling(h, limits);
}

// ---------------------------------------------------- minimal conjugators --

Simple minimal_simple_conjugator(std::span<const Element> constraints,
                                 const Simple& start, bool ultra,
                                 const SearchLimits& limits) {
  if (constraints.empty()) return start;
  StepCounter steps(limits, "minimal_simple_conjugator");
  const auto& ptr = constraints.front().structure_ptr();
  const Structure& S = *ptr;
  const Simple lowest = super_fixpoint(constraints, start, steps);
  if (!ultra) return lowest;

  // The ultra-admissible simples are a ∧_L-closed subset of the
  // super-admissible ones, so their minimum above `start` is reached by
  // climbing one atom at a time and re-closing; the first admissible simple
  // popped in order of length is that minimum.
  std::set<std::pair<int, Simple>> frontier{{S.length(lowest), lowest}};
  std::set<Simple> visited{lowest};
  while (!frontier.empty()) {
    steps.tick();
    const Simple c = frontier.begin()->second;
    frontier.erase(frontier.begin());
    if (all_return_under_cycling(constraints, from_simple(ptr, c), limits)) {
      return c;
    }
    const Simple room = S.right_complement(c);
    for (int a = 0; a < S.atom_count(); ++a) {
      if (!S.atom_left_divides(a, room)) continue;
      const Simple up =
          super_fixpoint(constraints, S.product(c, S.atom(a)), steps);
      if (visited.insert(up).second) frontier.insert({S.length(up), up});
    }
  }
  // Δ is always admissible, so the loop returns before exhausting.
  return S.delta();
}

Simple min_conjugator(const Element& h, int atom, SummitKind kind,
                      const SearchLimits& limits) {
  const Structure& S = h.structure();
  if (atom < 1 || atom > S.atom_count()) {
    throw InputError("atom s" + std::to_string(atom) + " out of range for " +
                     S.name());
  }
  const std::vector<Element> constraints = constraints_for(h, kind);
  for (const Element& c : constraints) {
    if (!is_super_summit(c, limits)) {
      throw DomainError("element is not in its own " +
                        std::string(to_string(kind)) + " summit set");
    }
  }
  if (kind == SummitKind::ultra && !returns_under_cycling(h, limits)) {
    throw DomainError("element is not in its own ultra summit set");
  }
  return minimal_simple_conjugator(constraints, S.atom(atom - 1),
                                   kind == SummitKind::ultra, limits);
}

// ------------------------------------------------------------ summit sets --

std::optional<std::size_t> SummitSet::index_of(const Element& h) const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] == h) return i;
  }
  return std::nullopt;
}

SummitSet summit_set(const Element& g, SummitKind kind,
                     const SearchLimits& limits) {
  const Conjugation seed = kind == SummitKind::stable
                               ? stable_representative(g, limits)
                               : summit_seek(g, limits);
  return close_summit_set(seed, kind, limits);
}

SummitSet conjugacy_graph(const Element& g, SummitKind kind,
                          const SearchLimits& limits) {
  SummitSet set = summit_set(g, kind, limits);
  const Structure& S = g.structure();
  std::vector<SummitEdge> minimal;
  for (const SummitEdge& e : set.edges) {
    bool dominated = false;
    for (const SummitEdge& other : set.edges) {
      if (other.from != e.from || other.label == e.label) continue;
      if (S.left_divides(other.label, e.label)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) minimal.push_back(e);
  }
  set.edges = std::move(minimal);
  return set;
}

std::optional<Element> is_conjugate(const Element& x, const Element& y,
                                    const SearchLimits& limits) {
  require_same_structure(x, y);
  if (x == y) return Element(x.structure_ptr());
  const Conjugation sx = summit_seek(x, limits);
  const Conjugation sy = summit_seek(y, limits);
  if (sx.element.inf() != sy.element.inf() ||
      sx.element.sup() != sy.element.sup()) {
    return std::nullopt;
  }
  const Element back = inverse(sy.conjugator);
  if (sx.element == sy.element) return multiply(sx.conjugator, back);
  const SummitSet uss = close_summit_set(sx, SummitKind::ultra, limits);
  const auto idx = uss.index_of(sy.element);
  if (!idx) return std::nullopt;
  return multiply(uss.witnesses[*idx], back);
}

}  // namespace garside
