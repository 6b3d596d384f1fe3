#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace garside {

/// A divisor of the Garside element, stored as a fixed-size canonical payload.
/// Braid structures store a permutation (image of each strand position);
/// the free-abelian structure stores one membership byte per atom. Unused
/// bytes are always zero so that equality and hashing are payload-agnostic.
class Simple {
 public:
  static constexpr std::size_t kCapacity = 32;

  Simple() = default;

  std::uint8_t operator[](std::size_t i) const { return bytes_[i]; }
  std::uint8_t& operator[](std::size_t i) { return bytes_[i]; }

  friend bool operator==(const Simple&, const Simple&) = default;
  friend auto operator<=>(const Simple&, const Simple&) = default;

  std::size_t hash() const noexcept;

 private:
  std::array<std::uint8_t, kCapacity> bytes_{};
};

/// The Garside monoid contract: a finite lattice of simples under left
/// divisibility, the Garside element Δ, and the inner automorphism τ.
///
/// Atoms are indexed from 0 internally; words handed to users are 1-based.
/// Implementations are immutable after construction.
class Structure {
 public:
  virtual ~Structure() = default;

  /// Selector string, e.g. "braid:4" or "zn:3". Two structures with the same
  /// name are interchangeable.
  virtual std::string name() const = 0;
  virtual int atom_count() const = 0;
  /// L_Δ, the maximal atom-length of Δ.
  virtual int delta_length() const = 0;

  virtual Simple identity() const = 0;
  virtual Simple delta() const = 0;
  virtual Simple atom(int index) const = 0;
  virtual int length(const Simple& s) const = 0;

  /// True iff atom `index` left-divides `s`.
  virtual bool atom_left_divides(int index, const Simple& s) const = 0;

  virtual Simple meet(const Simple& a, const Simple& b) const = 0;
  /// Least common right multiple. The default goes through complements:
  /// ∂(a ∨_L b) = ∂a ∧_R ∂b, and ∧_R is ∧_L conjugated by reversal.
  virtual Simple join(const Simple& a, const Simple& b) const;

  /// ∂s, with s·∂s = Δ.
  virtual Simple right_complement(const Simple& s) const = 0;
  /// ∂⁻¹s, with (∂⁻¹s)·s = Δ.
  virtual Simple left_complement(const Simple& s) const = 0;
  virtual Simple tau(const Simple& s, std::int64_t power) const = 0;
  /// Image under the anti-automorphism reversing atom words.
  virtual Simple reverse(const Simple& s) const = 0;

  /// a·b; requires b ≤_L ∂a.
  virtual Simple product(const Simple& a, const Simple& b) const = 0;
  /// a⁻¹b; requires a ≤_L b.
  virtual Simple left_quotient(const Simple& a, const Simple& b) const = 0;

  bool left_divides(const Simple& a, const Simple& b) const {
    return meet(a, b) == a;
  }
  bool is_identity(const Simple& s) const { return s == identity(); }
  bool is_delta(const Simple& s) const { return s == delta(); }

  /// Lexicographically smallest atom word (0-based) spelling s.
  std::vector<int> word(const Simple& s) const;
  std::vector<int> delta_word() const { return word(delta()); }

  /// The simple spelled by a positive 0-based atom word, or nullopt when the
  /// word is not a left divisor of Δ. Atom indices must be in range.
  std::optional<Simple> simple_from_word(std::span<const int> atoms) const;
};

}  // namespace garside
