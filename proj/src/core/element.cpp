#include "garside/element.hpp"

#include <algorithm>
#include <utility>

#include "garside/errors.hpp"

namespace garside {

namespace {

// Slides atoms leftwards across adjacent pairs until every pair is
// left-weighted, then moves leading Δ factors into the Δ-power and drops
// trailing identities. After stabilization Δ can only occur as a prefix and
// 1 only as a suffix, since (a, Δ) left-weighted forces a = Δ and (1, b)
// left-weighted forces b = 1.
void normalize_factors(const Structure& S, std::int64_t& delta_power,
                       std::vector<Simple>& f) {
  const Simple one = S.identity();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = f.size(); i-- > 1;) {
      Simple& a = f[i - 1];
      Simple& b = f[i];
      if (b == one) continue;
      const Simple t = S.meet(S.right_complement(a), b);
      if (t != one) {
        a = S.product(a, t);
        b = S.left_quotient(t, b);
        changed = true;
      }
    }
  }
  const Simple top = S.delta();
  std::size_t lead = 0;
  while (lead < f.size() && f[lead] == top) ++lead;
  std::size_t end = f.size();
  while (end > lead && f[end - 1] == one) --end;
  delta_power += static_cast<std::int64_t>(lead);
  f.erase(f.begin() + static_cast<std::ptrdiff_t>(end), f.end());
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
}

// Accumulates Δ^r · P where P is a list of simples. Moving Δ^m to the left of
// P twists P by τ^m; the twist is kept as a pending exponent so that each
// append is O(1).
class Builder {
 public:
  explicit Builder(std::shared_ptr<const Structure> structure)
      : structure_(std::move(structure)) {}

  Builder(const Element& x) : structure_(x.structure_ptr()) {
    delta_power_ = x.delta_power();
    factors_ = x.factors();
  }

  void append_simple(const Simple& s) {
    factors_.push_back(pending_ == 0 ? s : structure_->tau(s, -pending_));
  }

  // P Δ^m = Δ^m τ^m(P)
  void append_delta(std::int64_t m) {
    delta_power_ += m;
    pending_ += m;
  }

  Element finish() {
    if (pending_ != 0) {
      for (Simple& s : factors_) s = structure_->tau(s, pending_);
    }
    return Element(structure_, delta_power_, std::move(factors_));
  }

 private:
  std::shared_ptr<const Structure> structure_;
  std::int64_t delta_power_ = 0;
  std::int64_t pending_ = 0;
  std::vector<Simple> factors_;
};

Simple head(const Element& positive) {
  const Structure& S = positive.structure();
  if (positive.inf() >= 1) return S.delta();
  if (positive.factors().empty()) return S.identity();
  return positive.factors().front();
}

Element positive_meet(const Element& x, const Element& y) {
  const auto& ptr = x.structure_ptr();
  const Structure& S = *ptr;
  std::vector<Simple> common;
  Element a = x;
  Element b = y;
  for (;;) {
    const Simple t = S.meet(head(a), head(b));
    if (S.is_identity(t)) break;
    common.push_back(t);
    const Element t_inv = inverse(from_simple(ptr, t));
    a = multiply(t_inv, a);
    b = multiply(t_inv, b);
  }
  return Element(ptr, 0, std::move(common));
}

}  // namespace

// ----------------------------------------------------------------- Element --

Element::Element(std::shared_ptr<const Structure> structure)
    : structure_(std::move(structure)) {}

Element::Element(std::shared_ptr<const Structure> structure,
                 std::int64_t delta_power, std::vector<Simple> factors)
    : structure_(std::move(structure)),
      delta_power_(delta_power),
      factors_(std::move(factors)) {
  normalize_factors(*structure_, delta_power_, factors_);
}

std::size_t Element::hash() const noexcept {
  std::size_t h = std::hash<std::int64_t>{}(delta_power_);
  for (const Simple& s : factors_) {
    h ^= s.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool operator==(const Element& x, const Element& y) {
  if (x.delta_power_ != y.delta_power_ || x.factors_ != y.factors_) {
    return false;
  }
  return x.structure_ == y.structure_ ||
         x.structure_->name() == y.structure_->name();
}

bool canonical_less(const Element& x, const Element& y) {
  if (x.delta_power() != y.delta_power()) {
    return x.delta_power() < y.delta_power();
  }
  const Structure& S = x.structure();
  const auto& fx = x.factors();
  const auto& fy = y.factors();
  const std::size_t common = std::min(fx.size(), fy.size());
  for (std::size_t i = 0; i < common; ++i) {
    if (fx[i] == fy[i]) continue;
    return S.word(fx[i]) < S.word(fy[i]);
  }
  return fx.size() < fy.size();
}

// ------------------------------------------------------------ construction --

Element delta_element(std::shared_ptr<const Structure> structure,
                      std::int64_t power) {
  return Element(std::move(structure), power, {});
}

Element from_simple(std::shared_ptr<const Structure> structure,
                    const Simple& s) {
  return Element(std::move(structure), 0, {s});
}

Element atom_element(std::shared_ptr<const Structure> structure, int index) {
  if (index < 1 || index > structure->atom_count()) {
    throw InputError("atom s" + std::to_string(index) + " out of range for " +
                     structure->name());
  }
  const Simple s = structure->atom(index - 1);
  return from_simple(std::move(structure), s);
}

Element normalize(std::shared_ptr<const Structure> structure,
                  std::span<const int> word) {
  const Structure& S = *structure;
  const int atoms = S.atom_count();
  Builder builder(structure);
  for (int letter : word) {
    const int k = letter < 0 ? -letter : letter;
    if (k < 1 || k > atoms) {
      throw InputError("atom s" + std::to_string(k) + " out of range for " +
                       S.name());
    }
    if (letter > 0) {
      builder.append_simple(S.atom(k - 1));
    } else {
      // σ⁻¹ = Δ⁻¹ · ∂⁻¹σ
      builder.append_delta(-1);
      builder.append_simple(S.left_complement(S.atom(k - 1)));
    }
  }
  return builder.finish();
}

std::vector<int> spell(const Element& x) {
  const Structure& S = x.structure();
  std::vector<int> out;
  const std::vector<int> dw = S.delta_word();
  const std::int64_t r = x.delta_power();
  for (std::int64_t i = 0; i < (r < 0 ? -r : r); ++i) {
    if (r > 0) {
      for (int a : dw) out.push_back(a + 1);
    } else {
      for (auto it = dw.rbegin(); it != dw.rend(); ++it) out.push_back(-(*it + 1));
    }
  }
  for (const Simple& s : x.factors()) {
    for (int a : S.word(s)) out.push_back(a + 1);
  }
  return out;
}

// -------------------------------------------------------------- group ops --

void require_same_structure(const Element& x, const Element& y) {
  if (x.structure_ptr() == y.structure_ptr()) return;
  if (x.structure().name() != y.structure().name()) {
    throw StructureMismatch("elements over " + x.structure().name() + " and " +
                            y.structure().name());
  }
}

Element multiply(const Element& x, const Element& y) {
  require_same_structure(x, y);
  if (x.is_identity()) return y;
  if (y.is_identity()) return x;
  Builder builder(x);
  builder.append_delta(y.delta_power());
  for (const Simple& s : y.factors()) builder.append_simple(s);
  return builder.finish();
}

Element inverse(const Element& x) {
  const Structure& S = x.structure();
  Builder builder(x.structure_ptr());
  const auto& f = x.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    builder.append_delta(-1);
    builder.append_simple(S.left_complement(*it));
  }
  builder.append_delta(-x.delta_power());
  return builder.finish();
}

Element power(const Element& x, std::int64_t n) {
  Element base = n < 0 ? inverse(x) : x;
  std::uint64_t e = n < 0 ? static_cast<std::uint64_t>(-(n + 1)) + 1
                          : static_cast<std::uint64_t>(n);
  Element result(x.structure_ptr());
  while (e > 0) {
    if (e & 1U) result = multiply(result, base);
    e >>= 1U;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

Element conjugate(const Element& g, const Element& x) {
  return multiply(multiply(inverse(x), g), x);
}

bool equals(const Element& x, const Element& y) {
  require_same_structure(x, y);
  return x == y;
}

bool commute(const Element& x, const Element& y) {
  return equals(multiply(x, y), multiply(y, x));
}

// ---------------------------------------------------------------- lattice --

bool left_divides(const Element& x, const Element& y) {
  require_same_structure(x, y);
  return multiply(inverse(x), y).inf() >= 0;
}

// Shift both operands by the same Δ-power on the left so that they become
// positive; left multiplication is an order automorphism for ≤_L.
Element left_meet(const Element& x, const Element& y) {
  require_same_structure(x, y);
  if (x == y) return x;
  const std::int64_t m = std::min(x.inf(), y.inf());
  const Element shift = delta_element(x.structure_ptr(), -m);
  const Element meet = positive_meet(multiply(shift, x), multiply(shift, y));
  return multiply(delta_element(x.structure_ptr(), m), meet);
}

// x ∨_L y = (x⁻¹ ∧_R y⁻¹)⁻¹ and u ∧_R v = rev(rev u ∧_L rev v).
Element left_join(const Element& x, const Element& y) {
  require_same_structure(x, y);
  if (x == y) return x;
  const Element right_meet =
      reverse(left_meet(reverse(inverse(x)), reverse(inverse(y))));
  return inverse(right_meet);
}

Element tau(const Element& x, std::int64_t power) {
  const Structure& S = x.structure();
  std::vector<Simple> f;
  f.reserve(x.factors().size());
  for (const Simple& s : x.factors()) f.push_back(S.tau(s, power));
  return Element(x.structure_ptr(), x.delta_power(), std::move(f));
}

Element reverse(const Element& x) {
  const Structure& S = x.structure();
  Builder builder(x.structure_ptr());
  const auto& f = x.factors();
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    builder.append_simple(S.reverse(*it));
  }
  builder.append_delta(x.delta_power());
  return builder.finish();
}

Invariants canonical_invariants(const Element& x) {
  return {x.inf(), x.sup(), static_cast<std::uint64_t>(x.canonical_length())};
}

bool is_left_weighted(const Structure& S, const Simple& a, const Simple& b) {
  return S.is_identity(S.meet(S.right_complement(a), b));
}

bool satisfies_normal_form(const Element& x) {
  const Structure& S = x.structure();
  const auto& f = x.factors();
  for (const Simple& s : f) {
    if (S.is_identity(s) || S.is_delta(s)) return false;
  }
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (!is_left_weighted(S, f[i], f[i + 1])) return false;
  }
  return true;
}

}  // namespace garside
