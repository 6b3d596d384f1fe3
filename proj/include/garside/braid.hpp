#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "garside/structure.hpp"

namespace garside {

struct StructureOptions {
  /// Upper bound on the strand count accepted for braid structures. Simples
  /// are permutations, so anything beyond Simple::kCapacity is rejected
  /// regardless.
  int max_strands = 16;
};

/// Bₙ⁺ with permutation braids as simples and the half twist as Δ.
///
/// A simple is stored as the permutation p where p[i] is the final position
/// of the strand that starts at position i, reading the braid word left to
/// right; σₖ (atom k-1) exchanges positions k-1 and k. Left divisibility is
/// inclusion of crossing sets, i.e. the weak order.
class BraidStructure final : public Structure {
 public:
  explicit BraidStructure(int strands);

  int strands() const noexcept { return n_; }

  std::string name() const override;
  int atom_count() const override { return n_ - 1; }
  int delta_length() const override { return n_ * (n_ - 1) / 2; }

  Simple identity() const override;
  Simple delta() const override;
  Simple atom(int index) const override;
  int length(const Simple& s) const override;
  bool atom_left_divides(int index, const Simple& s) const override;
  Simple meet(const Simple& a, const Simple& b) const override;
  Simple right_complement(const Simple& s) const override;
  Simple left_complement(const Simple& s) const override;
  Simple tau(const Simple& s, std::int64_t power) const override;
  Simple reverse(const Simple& s) const override;
  Simple product(const Simple& a, const Simple& b) const override;
  Simple left_quotient(const Simple& a, const Simple& b) const override;

  std::vector<int> permutation_of_simple(const Simple& s) const;
  /// Throws InputError when `perm` is not a permutation of 0..n-1.
  Simple simple_from_permutation(const std::vector<int>& perm) const;

 private:
  Simple inverse_permutation(const Simple& s) const;

  int n_;
};

/// ℤⁿ as the free commutative monoid on n atoms: simples are atom subsets,
/// Δ is the product of all atoms and τ is trivial. Every conjugacy class is a
/// singleton, which makes it a convenient oracle for the generic machinery.
class FreeAbelianStructure final : public Structure {
 public:
  explicit FreeAbelianStructure(int rank);

  std::string name() const override;
  int atom_count() const override { return n_; }
  int delta_length() const override { return n_; }

  Simple identity() const override;
  Simple delta() const override;
  Simple atom(int index) const override;
  int length(const Simple& s) const override;
  bool atom_left_divides(int index, const Simple& s) const override;
  Simple meet(const Simple& a, const Simple& b) const override;
  Simple join(const Simple& a, const Simple& b) const override;
  Simple right_complement(const Simple& s) const override;
  Simple left_complement(const Simple& s) const override;
  Simple tau(const Simple& s, std::int64_t power) const override;
  Simple reverse(const Simple& s) const override;
  Simple product(const Simple& a, const Simple& b) const override;
  Simple left_quotient(const Simple& a, const Simple& b) const override;

 private:
  int n_;
};

std::shared_ptr<const Structure> make_braid_structure(
    int strands, const StructureOptions& options = {});
std::shared_ptr<const Structure> make_free_abelian_structure(
    int rank, const StructureOptions& options = {});

/// Parses "braid:<n>" or "zn:<n>".
std::shared_ptr<const Structure> make_structure(
    std::string_view selector, const StructureOptions& options = {});

/// Whether a positive 1-based atom word is a left divisor of Δ.
bool is_simple(std::span<const int> positive_word, const Structure& structure);

}  // namespace garside
