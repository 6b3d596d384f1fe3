#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "garside/element.hpp"
#include "garside/limits.hpp"

namespace garside {

enum class SummitKind { super, ultra, stable };

std::string_view to_string(SummitKind kind);

/// `element` equals conjugator⁻¹ · g · conjugator for the g it was derived
/// from.
struct Conjugation {
  Element element;
  Element conjugator;
};

/// c(x) = Δ^r s₂⋯s_k τ^{-r}(s₁), realized by conjugating with τ^{-r}(s₁).
/// Δ-powers are fixed, with identity conjugator.
Conjugation cycling_step(const Element& x);
/// d(x) = Δ^r τ^r(s_k) s₁⋯s_{k-1}, realized by conjugating with s_k⁻¹.
Conjugation decycling_step(const Element& x);

inline Element cycling(const Element& x) { return cycling_step(x).element; }
inline Element decycling(const Element& x) { return decycling_step(x).element; }

/// Cycles until inf stops improving, decycles until sup stops improving, then
/// cycles into a closed orbit. The returned element lies in the ultra summit
/// set of g.
///
/// Each improvement phase keeps the trajectory seen since the last
/// improvement; revisiting an element without improving means no further
/// cycling (decycling) can help, so inf (sup) is already inf_s (sup_s).
Conjugation summit_seek(const Element& g, const SearchLimits& limits = {});

struct SummitInvariants {
  std::int64_t inf_s;
  std::int64_t sup_s;
};

SummitInvariants summit_invariants(const Element& g,
                                   const SearchLimits& limits = {});
bool is_super_summit(const Element& h, const SearchLimits& limits = {});
bool is_ultra_summit(const Element& h, const SearchLimits& limits = {});
/// True iff cᵏ(h) = h for some k ≥ 1.
bool returns_under_cycling(const Element& h, const SearchLimits& limits = {});

struct SummitEdge {
  std::size_t from;
  Simple label;
  std::size_t to;

  friend bool operator==(const SummitEdge&, const SummitEdge&) = default;
};

struct SummitSet {
  SummitKind kind = SummitKind::super;
  /// Sorted by canonical_less.
  std::vector<Element> members;
  /// witnesses[i]⁻¹ · g · witnesses[i] = members[i], g being the input.
  std::vector<Element> witnesses;
  /// label⁻¹ · members[from] · label = members[to]; sorted by (from, to,
  /// label word).
  std::vector<SummitEdge> edges;
  std::int64_t inf_s = 0;
  std::int64_t sup_s = 0;

  std::optional<std::size_t> index_of(const Element& h) const;
  bool contains(const Element& h) const { return index_of(h).has_value(); }
};

/// Smallest simple c ≥_L `start` such that c⁻¹ h c stays in its super summit
/// set for every h in `constraints` (and, when `ultra`, on a closed cycling
/// orbit as well). Every constraint must already be a super (ultra) summit
/// element.
///
/// Uses the fact that the admissible simples are closed under ∧_L: lower
/// bounds forced by the inf and sup conditions are joined in until a fixed
/// point, which is then the minimum. For the ultra case the search continues
/// upward from that minimum in order of atom length.
Simple minimal_simple_conjugator(std::span<const Element> constraints,
                                 const Simple& start, bool ultra,
                                 const SearchLimits& limits = {});

/// ρ_a(h) for the 1-based atom `atom`. Throws DomainError when h is not in
/// its own summit set of the requested kind.
Simple min_conjugator(const Element& h, int atom, SummitKind kind,
                      const SearchLimits& limits = {});

/// The complete summit set of g with witnesses and every (member, atom)
/// minimal-conjugator edge. Throws BudgetExceeded past limits.max_set_size.
SummitSet summit_set(const Element& g, SummitKind kind,
                     const SearchLimits& limits = {});

/// summit_set restricted to the minimal conjugacy graph: for each member only
/// the labels that have no other label of that member as a proper prefix.
SummitSet conjugacy_graph(const Element& g, SummitKind kind,
                          const SearchLimits& limits = {});

/// A conjugator w with w⁻¹ x w = y, or nullopt when x and y are not
/// conjugate.
std::optional<Element> is_conjugate(const Element& x, const Element& y,
                                    const SearchLimits& limits = {});

}  // namespace garside
