#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "garside/conjugacy.hpp"
#include "garside/element.hpp"
#include "garside/limits.hpp"

namespace garside {

/// A non-empty list of pairwise commuting elements over one structure.
class CommutingTuple {
 public:
  /// Throws DomainError when the list is empty or two entries do not
  /// commute, StructureMismatch on mixed structures.
  explicit CommutingTuple(std::vector<Element> elements);

  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Element& operator[](std::size_t i) const { return elements_[i]; }

  /// x⁻¹ tᵢ x for every coordinate.
  CommutingTuple conjugated(const Element& x) const;

  friend bool operator==(const CommutingTuple&, const CommutingTuple&) = default;

 private:
  struct Trusted {};
  CommutingTuple(std::vector<Element> elements, Trusted)
      : elements_(std::move(elements)) {}

  std::vector<Element> elements_;
};

struct TupleConjugation {
  CommutingTuple tuple;
  /// conjugator⁻¹ · tᵢ · conjugator = tuple[i] for every i.
  Element conjugator;
};

/// Moves every coordinate into its ultra summit set with one conjugator.
/// Coordinates are handled left to right with cycling/decycling conjugators
/// of the current coordinate, which keep the earlier ones ultra summit.
TupleConjugation tuple_to_uss(const CommutingTuple& t,
                              const SearchLimits& limits = {});

/// A simultaneous conjugator w with w⁻¹ t₁ᵢ w = t₂ᵢ for all i, or nullopt.
/// Throws DomainError when the tuples differ in length.
std::optional<Element> is_simultaneously_conjugate(
    const CommutingTuple& t1, const CommutingTuple& t2,
    const SearchLimits& limits = {});

/// hⁿ is a super summit element for n = 1..L_Δ.
bool is_stable(const Element& h, const SearchLimits& limits = {});
/// Same test with an explicit power range 1..max_power.
bool is_stable_up_to(const Element& h, int max_power,
                     const SearchLimits& limits = {});

/// A stable super summit conjugate of g: the first coordinate of
/// tuple_to_uss(g, g², …, g^{L_Δ}).
Conjugation stable_representative(const Element& g,
                                  const SearchLimits& limits = {});

/// The stable super summit set, with minimal-conjugator edges.
SummitSet stable_sss(const Element& g, const SearchLimits& limits = {});

}  // namespace garside
