#include "garside/structure.hpp"

#include <functional>
#include <string_view>

namespace garside {

std::size_t Simple::hash() const noexcept {
  std::string_view view(reinterpret_cast<const char*>(bytes_.data()),
                        bytes_.size());
  return std::hash<std::string_view>{}(view);
}

Simple Structure::join(const Simple& a, const Simple& b) const {
  const Simple ra = reverse(right_complement(a));
  const Simple rb = reverse(right_complement(b));
  return left_complement(reverse(meet(ra, rb)));
}

std::vector<int> Structure::word(const Simple& s) const {
  std::vector<int> out;
  Simple rest = s;
  const int atoms = atom_count();
  while (!is_identity(rest)) {
    for (int k = 0; k < atoms; ++k) {
      if (atom_left_divides(k, rest)) {
        out.push_back(k);
        rest = left_quotient(atom(k), rest);
        break;
      }
    }
  }
  return out;
}

std::optional<Simple> Structure::simple_from_word(
    std::span<const int> atoms) const {
  Simple s = identity();
  for (int k : atoms) {
    if (!atom_left_divides(k, right_complement(s))) return std::nullopt;
    s = product(s, atom(k));
  }
  return s;
}

}  // namespace garside
