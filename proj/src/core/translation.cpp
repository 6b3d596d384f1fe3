#include "garside/translation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "garside/errors.hpp"
#include "garside/simultaneous.hpp"

namespace garside {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return -floor_div(-a, b);
}

// The unique reduced p/q with q ≤ max_den in [lo/n, hi/n]; nullopt when there
// are several, DomainError when there are none.
std::optional<Rational> pin(std::int64_t lo, std::int64_t hi, std::int64_t n,
                            std::int64_t max_den) {
  std::optional<Rational> found;
  for (std::int64_t q = 1; q <= max_den; ++q) {
    const std::int64_t first = ceil_div(lo * q, n);
    const std::int64_t last = floor_div(hi * q, n);
    for (std::int64_t p = first; p <= last; ++p) {
      if (std::gcd(p, q) != 1) continue;
      if (found) return std::nullopt;
      found = Rational(p, q);
    }
  }
  if (!found) {
    throw DomainError("no rational with denominator <= " +
                      std::to_string(max_den) + " in [" + std::to_string(lo) +
                      "/" + std::to_string(n) + ", " + std::to_string(hi) +
                      "/" + std::to_string(n) + "]");
  }
  return found;
}

}  // namespace

std::uint64_t word_length(const Element& x) {
  return static_cast<std::uint64_t>(std::max<std::int64_t>(x.sup(), 0) -
                                    std::min<std::int64_t>(x.inf(), 0));
}

SummitSlopes summit_slopes(const Element& g, const SearchLimits& limits) {
  if (g.is_delta_power()) {
    return {Rational(g.inf()), Rational(g.inf()), 1};
  }
  const std::int64_t L = g.structure().delta_length();
  const std::int64_t max_den = L * L;
  const std::int64_t max_power = 2 * max_den * max_den;
  StepCounter steps(limits, "summit_slopes");

  // Powers of a stable element are super summit, so their inf and sup are
  // the summit invariants of the powers of g.
  Element h = stable_representative(g, limits).element;
  for (std::int64_t n = 1;; n *= 2) {
    steps.tick(h.canonical_length() + 1);
    const auto t_inf = pin(h.inf(), h.inf() + 1, n, max_den);
    const auto t_sup = pin(h.sup() - 1, h.sup(), n, max_den);
    if (t_inf && t_sup) return {*t_inf, *t_sup, n};
    if (n > max_power) {
      throw DomainError("summit slopes not pinned by power " +
                        std::to_string(n));
    }
    h = multiply(h, h);
  }
}

Rational translation_number(const Element& g, const SearchLimits& limits) {
  if (g.is_identity()) return Rational(0);
  const SummitSlopes s = summit_slopes(g, limits);
  const Rational zero(0);
  return std::max(s.t_sup, zero) - std::min(s.t_inf, zero);
}

}  // namespace garside
