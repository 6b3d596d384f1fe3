#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "garside/element.hpp"
#include "garside/limits.hpp"
#include "garside/translation.hpp"

namespace garside {

using IntVector = std::vector<BigInt>;
/// Row-major.
using IntMatrix = std::vector<IntVector>;

/// A list of pairwise commuting generators h₁…hₙ of an abelian subgroup H,
/// with their translation numbers and K = maxᵢ t(hᵢ).
struct AbelianPresentation {
  std::shared_ptr<const Structure> structure;
  std::vector<Element> generators;
  std::vector<Rational> translation;
  Rational K;
  /// Set by abelian_basis: the generators are linearly independent.
  bool is_basis = false;
  /// Row i spells generators[i] in the generators the presentation was
  /// originally built from: generators[i] = Π original_j^{expression[i][j]}.
  IntMatrix expression;
  std::size_t original_count = 0;
};

/// Validates pairwise commutation (DomainError otherwise) and computes the
/// translation numbers. An empty list presents the trivial subgroup.
/// Throws StructureMismatch when a generator lives over another structure.
AbelianPresentation make_presentation(
    std::shared_ptr<const Structure> structure,
    std::vector<Element> generators, const SearchLimits& limits = {});

/// Π hᵢ^{aᵢ}. Throws BudgetExceeded when an exponent does not fit 64 bits.
Element evaluate(const std::shared_ptr<const Structure>& structure,
                 const std::vector<Element>& generators, const IntVector& a);

struct DirichletApprox {
  BigInt k;
  IntVector a;
};

/// Some 1 ≤ k ≤ Mⁿ and integer a with ‖k·x − a‖∞ ≤ 1/M, found by pigeonholing
/// the fractional parts of 0·x, 1·x, …, Mⁿ·x into the Mⁿ cells of side 1/M.
/// Throws DomainError for M < 1 or empty x, BudgetExceeded on limits.
DirichletApprox dirichlet_approx(const std::vector<Rational>& x,
                                 const BigInt& M,
                                 const SearchLimits& limits = {});

struct NormConstants {
  Rational D1;
  Rational D2;
};

/// D₁ = (2L)^{n+1}(nK)ⁿ and D₂ = nK. Throws DomainError unless n, L ≥ 1 and
/// K > 0.
NormConstants norm_constants(std::size_t n, const Rational& K, int L);

/// The integer bounds the searches actually scan with. The norm-comparison
/// argument needs an integer grid size, so M = ⌈2nKL⌉ replaces 2nKL:
/// relations are searched up to ‖a‖∞ ≤ Mⁿ and D₁ is taken as 2L·Mⁿ, which is
/// at least the exact D₁.
struct ScanBounds {
  BigInt M;
  BigInt relation_bound;
  BigInt D1;
  Rational D2;
};

ScanBounds scan_bounds(std::size_t n, const Rational& K, int L);

/// A nonzero a with Π hᵢ^{aᵢ} = 1, or nullopt when the generators are
/// independent. Scans shells of increasing ‖a‖∞, lexicographically inside a
/// shell with the first nonzero entry positive; returns the first hit.
std::optional<IntVector> integer_relation(const AbelianPresentation& p,
                                          const SearchLimits& limits = {});

/// Unimodular n×n matrix whose first row is the primitive vector a.
/// Throws DomainError for a zero or non-primitive vector.
IntMatrix hnf_complement(const IntVector& a);

/// A basis of the subgroup generated by `p`, with `expression` relative to
/// the generators `p` was built from. Each basis element is oriented so that
/// inf + sup > 0 (ties broken by canonical order).
AbelianPresentation abelian_basis(const AbelianPresentation& p,
                                  const SearchLimits& limits = {});

/// Exponents a over the original generators of `p` with Π hᵢ^{aᵢ} = g, or
/// nullopt when g ∉ H.
std::optional<IntVector> member(const Element& g, const AbelianPresentation& p,
                                const SearchLimits& limits = {});

struct ConjugateMember {
  IntVector exponents;
  /// conjugator⁻¹ · g · conjugator = Π hᵢ^{exponents[i]}.
  Element conjugator;
};

/// Whether g is conjugate into H; exponents over the original generators.
std::optional<ConjugateMember> conj_member(const Element& g,
                                           const AbelianPresentation& p,
                                           const SearchLimits& limits = {});

/// Mutual membership of the generators.
bool subgroups_equal(const AbelianPresentation& p1,
                     const AbelianPresentation& p2,
                     const SearchLimits& limits = {});

/// w with w⁻¹ H₁ w = H₂, or nullopt when the subgroups are not conjugate.
std::optional<Element> subgroups_conjugate(const AbelianPresentation& p1,
                                           const AbelianPresentation& p2,
                                           const SearchLimits& limits = {});

}  // namespace garside
