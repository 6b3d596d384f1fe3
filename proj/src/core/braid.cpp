#include "garside/braid.hpp"

#include <algorithm>
#include <charconv>
#include <string>
#include <utility>

#include "garside/errors.hpp"

namespace garside {

namespace {

constexpr int kMaxPayload = static_cast<int>(Simple::kCapacity);

int parse_positive(std::string_view digits, std::string_view selector) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size() || value <= 0) {
    throw InputError("bad structure selector '" + std::string(selector) +
                     "'");
  }
  return value;
}

}  // namespace

// ---------------------------------------------------------------- braids --

BraidStructure::BraidStructure(int strands) : n_(strands) {
  if (n_ < 2 || n_ > kMaxPayload) {
    throw InputError("braid structure needs 2.." + std::to_string(kMaxPayload) +
                     " strands, got " + std::to_string(n_));
  }
}

std::string BraidStructure::name() const {
  return "braid:" + std::to_string(n_);
}

Simple BraidStructure::identity() const {
  Simple s;
  for (int i = 0; i < n_; ++i) s[i] = static_cast<std::uint8_t>(i);
  return s;
}

Simple BraidStructure::delta() const {
  Simple s;
  for (int i = 0; i < n_; ++i) s[i] = static_cast<std::uint8_t>(n_ - 1 - i);
  return s;
}

Simple BraidStructure::atom(int index) const {
  Simple s = identity();
  std::swap(s[index], s[index + 1]);
  return s;
}

int BraidStructure::length(const Simple& s) const {
  int inversions = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (s[i] > s[j]) ++inversions;
  return inversions;
}

bool BraidStructure::atom_left_divides(int index, const Simple& s) const {
  return s[index] > s[index + 1];
}

Simple BraidStructure::inverse_permutation(const Simple& s) const {
  Simple inv;
  for (int i = 0; i < n_; ++i) inv[s[i]] = static_cast<std::uint8_t>(i);
  return inv;
}

// Greedy growth in the weak order: extend c by σₖ while the two strands that
// σₖ would cross are still uncrossed in c and crossed in both a and b.
Simple BraidStructure::meet(const Simple& a, const Simple& b) const {
  Simple c = identity();
  Simple at = identity();  // at[pos] = strand currently at pos
  bool grown = true;
  while (grown) {
    grown = false;
    for (int k = 0; k + 1 < n_; ++k) {
      const int x = at[k];
      const int y = at[k + 1];
      if (x < y && a[x] > a[y] && b[x] > b[y]) {
        c[x] = static_cast<std::uint8_t>(k + 1);
        c[y] = static_cast<std::uint8_t>(k);
        std::swap(at[k], at[k + 1]);
        grown = true;
      }
    }
  }
  return c;
}

Simple BraidStructure::right_complement(const Simple& s) const {
  const Simple inv = inverse_permutation(s);
  Simple out;
  for (int j = 0; j < n_; ++j) out[j] = static_cast<std::uint8_t>(n_ - 1 - inv[j]);
  return out;
}

Simple BraidStructure::left_complement(const Simple& s) const {
  const Simple inv = inverse_permutation(s);
  Simple out;
  for (int i = 0; i < n_; ++i) out[i] = inv[n_ - 1 - i];
  return out;
}

Simple BraidStructure::tau(const Simple& s, std::int64_t power) const {
  if (power % 2 == 0) return s;
  Simple out;
  for (int i = 0; i < n_; ++i)
    out[i] = static_cast<std::uint8_t>(n_ - 1 - s[n_ - 1 - i]);
  return out;
}

Simple BraidStructure::reverse(const Simple& s) const {
  return inverse_permutation(s);
}

Simple BraidStructure::product(const Simple& a, const Simple& b) const {
  Simple out;
  for (int i = 0; i < n_; ++i) out[i] = b[a[i]];
  return out;
}

Simple BraidStructure::left_quotient(const Simple& a, const Simple& b) const {
  const Simple inv = inverse_permutation(a);
  Simple out;
  for (int j = 0; j < n_; ++j) out[j] = b[inv[j]];
  return out;
}

std::vector<int> BraidStructure::permutation_of_simple(const Simple& s) const {
  std::vector<int> perm(n_);
  for (int i = 0; i < n_; ++i) perm[i] = s[i];
  return perm;
}

Simple BraidStructure::simple_from_permutation(
    const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) {
    throw InputError("permutation has arity " + std::to_string(perm.size()) +
                     ", structure has " + std::to_string(n_) + " strands");
  }
  std::vector<bool> seen(n_, false);
  Simple s;
  for (int i = 0; i < n_; ++i) {
    const int v = perm[i];
    if (v < 0 || v >= n_ || seen[v]) {
      throw InputError("not a permutation of 0.." + std::to_string(n_ - 1));
    }
    seen[v] = true;
    s[i] = static_cast<std::uint8_t>(v);
  }
  return s;
}

// ----------------------------------------------------------- free abelian --

FreeAbelianStructure::FreeAbelianStructure(int rank) : n_(rank) {
  if (n_ < 1 || n_ > kMaxPayload) {
    throw InputError("free abelian structure needs rank 1.." +
                     std::to_string(kMaxPayload) + ", got " +
                     std::to_string(n_));
  }
}

std::string FreeAbelianStructure::name() const {
  return "zn:" + std::to_string(n_);
}

Simple FreeAbelianStructure::identity() const { return Simple{}; }

Simple FreeAbelianStructure::delta() const {
  Simple s;
  for (int i = 0; i < n_; ++i) s[i] = 1;
  return s;
}

Simple FreeAbelianStructure::atom(int index) const {
  Simple s;
  s[index] = 1;
  return s;
}

int FreeAbelianStructure::length(const Simple& s) const {
  int count = 0;
  for (int i = 0; i < n_; ++i) count += s[i];
  return count;
}

bool FreeAbelianStructure::atom_left_divides(int index, const Simple& s) const {
  return s[index] != 0;
}

Simple FreeAbelianStructure::meet(const Simple& a, const Simple& b) const {
  Simple out;
  for (int i = 0; i < n_; ++i) out[i] = a[i] & b[i];
  return out;
}

Simple FreeAbelianStructure::join(const Simple& a, const Simple& b) const {
  Simple out;
  for (int i = 0; i < n_; ++i) out[i] = a[i] | b[i];
  return out;
}

Simple FreeAbelianStructure::right_complement(const Simple& s) const {
  Simple out;
  for (int i = 0; i < n_; ++i) out[i] = s[i] ^ 1;
  return out;
}

Simple FreeAbelianStructure::left_complement(const Simple& s) const {
  return right_complement(s);
}

Simple FreeAbelianStructure::tau(const Simple& s, std::int64_t) const {
  return s;
}

Simple FreeAbelianStructure::reverse(const Simple& s) const { return s; }

Simple FreeAbelianStructure::product(const Simple& a, const Simple& b) const {
  return join(a, b);
}

Simple FreeAbelianStructure::left_quotient(const Simple& a,
                                           const Simple& b) const {
  Simple out;
  for (int i = 0; i < n_; ++i) out[i] = b[i] & (a[i] ^ 1);
  return out;
}

// ---------------------------------------------------------------- factory --

std::shared_ptr<const Structure> make_braid_structure(
    int strands, const StructureOptions& options) {
  if (strands > options.max_strands) {
    throw InputError("braid:" + std::to_string(strands) +
                     " exceeds the strand limit of " +
                     std::to_string(options.max_strands));
  }
  return std::make_shared<const BraidStructure>(strands);
}

std::shared_ptr<const Structure> make_free_abelian_structure(
    int rank, const StructureOptions&) {
  return std::make_shared<const FreeAbelianStructure>(rank);
}

std::shared_ptr<const Structure> make_structure(
    std::string_view selector, const StructureOptions& options) {
  const auto colon = selector.find(':');
  if (colon == std::string_view::npos) {
    throw InputError("bad structure selector '" + std::string(selector) +
                     "' (expected braid:<n> or zn:<n>)");
  }
  const std::string_view family = selector.substr(0, colon);
  const int n = parse_positive(selector.substr(colon + 1), selector);
  if (family == "braid") return make_braid_structure(n, options);
  if (family == "zn") return make_free_abelian_structure(n, options);
  throw InputError("unknown structure family '" + std::string(family) + "'");
}

bool is_simple(std::span<const int> positive_word, const Structure& structure) {
  std::vector<int> atoms;
  atoms.reserve(positive_word.size());
  for (int letter : positive_word) {
    if (letter < 1 || letter > structure.atom_count()) {
      throw InputError("atom s" + std::to_string(letter) +
                       " is not a positive atom of " + structure.name());
    }
    atoms.push_back(letter - 1);
  }
  return structure.simple_from_word(atoms).has_value();
}

}  // namespace garside
