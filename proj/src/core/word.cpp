#include "garside/word.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>

#include "garside/errors.hpp"

namespace garside {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

// Reads an integer starting at text[pos]; advances pos past it.
std::int64_t read_int(std::string_view text, std::size_t& pos, bool allow_sign,
                      std::size_t token_start) {
  const std::size_t begin = pos;
  if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
    ++pos;
  const std::size_t digits = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  if (pos == digits) {
    throw InputError("expected an integer at offset " + std::to_string(begin),
                     begin);
  }
  std::int64_t value = 0;
  const char* first = text.data() + begin + (text[begin] == '+' ? 1 : 0);
  auto [ptr, ec] = std::from_chars(first, text.data() + pos, value);
  if (ec != std::errc() || ptr != text.data() + pos) {
    throw InputError("integer out of range in token at offset " +
                         std::to_string(token_start),
                     token_start);
  }
  return value;
}

constexpr std::int64_t kMaxExpansion = 1'000'000;

}  // namespace

std::vector<int> parse_word(std::string_view text, const Structure& structure) {
  std::vector<int> out;
  const std::vector<int> delta_word = structure.delta_word();
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (is_space(text[pos])) {
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    std::vector<int> unit;
    if (text[pos] == 's') {
      ++pos;
      const std::int64_t k = read_int(text, pos, false, start);
      if (k < 1 || k > structure.atom_count()) {
        throw InputError("atom s" + std::to_string(k) + " at offset " +
                             std::to_string(start) + " is out of range for " +
                             structure.name(),
                         start);
      }
      unit.push_back(static_cast<int>(k));
    } else if (text[pos] == 'D') {
      ++pos;
      for (int a : delta_word) unit.push_back(a + 1);
    } else {
      throw InputError("unexpected character '" + std::string(1, text[pos]) +
                           "' at offset " + std::to_string(pos),
                       pos);
    }
    std::int64_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = read_int(text, pos, true, start);
    }
    if (pos < text.size() && !is_space(text[pos])) {
      throw InputError("unexpected character '" + std::string(1, text[pos]) +
                           "' at offset " + std::to_string(pos),
                       pos);
    }
    const std::int64_t reps = exponent < 0 ? -exponent : exponent;
    if (reps * static_cast<std::int64_t>(unit.size()) > kMaxExpansion) {
      throw InputError("exponent too large in token at offset " +
                           std::to_string(start),
                       start);
    }
    for (std::int64_t i = 0; i < reps; ++i) {
      if (exponent > 0) {
        out.insert(out.end(), unit.begin(), unit.end());
      } else {
        for (auto it = unit.rbegin(); it != unit.rend(); ++it) out.push_back(-*it);
      }
    }
  }
  return out;
}

Element parse_element(std::string_view text,
                      std::shared_ptr<const Structure> structure) {
  const std::vector<int> word = parse_word(text, *structure);
  return normalize(std::move(structure), word);
}

std::string format_simple(const Structure& structure, const Simple& s) {
  std::string out;
  for (int a : structure.word(s)) {
    if (!out.empty()) out += ' ';
    out += 's';
    out += std::to_string(a + 1);
  }
  return out;
}

std::string format_element(const Element& x) {
  std::string out;
  const std::int64_t r = x.delta_power();
  if (r == 1) {
    out = "D";
  } else if (r != 0) {
    out = "D^" + std::to_string(r);
  }
  for (const Simple& s : x.factors()) {
    if (!out.empty()) out += ' ';
    out += format_simple(x.structure(), s);
  }
  return out;
}

}  // namespace garside
