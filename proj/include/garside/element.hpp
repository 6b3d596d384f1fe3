#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

/// A group element in left-greedy normal form Δ^r s₁⋯s_k, with every sᵢ a
/// simple other than 1 and Δ, and (sᵢ⋯s_k) ∧_L Δ = sᵢ.
///
/// Elements are immutable values. Constructing one from arbitrary factors
/// goes through normalization, so every Element in existence is normal.
class Element {
 public:
  /// The identity of `structure`.
  explicit Element(std::shared_ptr<const Structure> structure);

  /// Δ^delta_power · f₁⋯f_m for arbitrary simples fᵢ, normalized.
  Element(std::shared_ptr<const Structure> structure, std::int64_t delta_power,
          std::vector<Simple> factors);

  const Structure& structure() const { return *structure_; }
  const std::shared_ptr<const Structure>& structure_ptr() const {
    return structure_;
  }

  std::int64_t delta_power() const noexcept { return delta_power_; }
  const std::vector<Simple>& factors() const noexcept { return factors_; }

  std::int64_t inf() const noexcept { return delta_power_; }
  std::int64_t sup() const noexcept {
    return delta_power_ + static_cast<std::int64_t>(factors_.size());
  }
  std::size_t canonical_length() const noexcept { return factors_.size(); }

  bool is_identity() const noexcept {
    return delta_power_ == 0 && factors_.empty();
  }
  bool is_delta_power() const noexcept { return factors_.empty(); }

  std::size_t hash() const noexcept;

  /// Same structure name, same normal form.
  friend bool operator==(const Element& x, const Element& y);

 private:
  std::shared_ptr<const Structure> structure_;
  std::int64_t delta_power_ = 0;
  std::vector<Simple> factors_;
};

struct ElementHash {
  std::size_t operator()(const Element& x) const noexcept { return x.hash(); }
};

/// Deterministic total order: Δ-power first, then the factor sequences
/// compared lexicographically, each factor by its atom word.
bool canonical_less(const Element& x, const Element& y);

struct Invariants {
  std::int64_t inf;
  std::int64_t sup;
  std::uint64_t len;
};

// Construction ---------------------------------------------------------------

Element delta_element(std::shared_ptr<const Structure> structure,
                      std::int64_t power = 1);
Element from_simple(std::shared_ptr<const Structure> structure,
                    const Simple& s);
/// σ_index for 1-based `index`.
Element atom_element(std::shared_ptr<const Structure> structure, int index);

/// Normal form of a word of signed 1-based atoms (k means σₖ, -k means σₖ⁻¹).
/// Throws InputError on an out-of-range atom.
Element normalize(std::shared_ptr<const Structure> structure,
                  std::span<const int> word);

/// Signed 1-based word spelling x: |r| copies of the Δ word (inverted when
/// r < 0) followed by each factor's atom word.
std::vector<int> spell(const Element& x);

// Group operations -----------------------------------------------------------

/// Throws StructureMismatch when x and y live over different structures.
void require_same_structure(const Element& x, const Element& y);

Element multiply(const Element& x, const Element& y);
Element inverse(const Element& x);
Element power(const Element& x, std::int64_t n);
/// x⁻¹ g x.
Element conjugate(const Element& g, const Element& x);
/// Word problem; throws StructureMismatch on mixed structures.
bool equals(const Element& x, const Element& y);
bool commute(const Element& x, const Element& y);

// Lattice --------------------------------------------------------------------

/// x ≤_L y, i.e. x⁻¹y is positive.
bool left_divides(const Element& x, const Element& y);
Element left_meet(const Element& x, const Element& y);
Element left_join(const Element& x, const Element& y);

/// τ^power(x) = Δ^{-power} x Δ^{power}.
Element tau(const Element& x, std::int64_t power = 1);
/// Image under the word-reversing anti-automorphism.
Element reverse(const Element& x);

Invariants canonical_invariants(const Element& x);

/// (a, b) is left-weighted iff ∂a ∧_L b = 1.
bool is_left_weighted(const Structure& structure, const Simple& a,
                      const Simple& b);
/// Checks every normal-form invariant of x; used by tests after arithmetic.
bool satisfies_normal_form(const Element& x);

}  // namespace garside
