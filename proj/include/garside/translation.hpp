#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "garside/element.hpp"
#include "garside/limits.hpp"

namespace garside {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Shortest word length of x over simples and their inverses:
/// max(sup x, 0) − min(inf x, 0).
std::uint64_t word_length(const Element& x);

/// t_inf = lim inf_s(gⁿ)/n and t_sup = lim sup_s(gⁿ)/n.
struct SummitSlopes {
  Rational t_inf;
  Rational t_sup;
  /// The power at which both limits were pinned.
  std::int64_t power = 1;
};

/// Both slopes are rationals with denominator ≤ L_Δ². For a stable h,
/// inf(hⁿ)/n ≤ t_inf ≤ (inf(hⁿ)+1)/n and (sup(hⁿ)−1)/n ≤ t_sup ≤ sup(hⁿ)/n;
/// n is doubled until each window holds a single such rational.
///
/// Throws DomainError if a window ever becomes empty or n exceeds 2·L_Δ⁴
/// (neither happens for a Garside structure), BudgetExceeded on limits.
SummitSlopes summit_slopes(const Element& g, const SearchLimits& limits = {});

/// t(g) = lim |gⁿ|/n = max(t_sup, 0) − min(t_inf, 0).
Rational translation_number(const Element& g, const SearchLimits& limits = {});

}  // namespace garside
