#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "garside/errors.hpp"

namespace garside {

/// Caps applied to every search so that intractable instances end in a
/// BudgetExceeded error instead of running forever.
struct SearchLimits {
  std::uint64_t max_steps = 20'000'000;
  std::size_t max_set_size = 200'000;
};

/// Per-call step counter.
class StepCounter {
 public:
  StepCounter(const SearchLimits& limits, const char* what)
      : cap_(limits.max_steps), what_(what) {}

  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > cap_) {
      throw BudgetExceeded(std::string(what_) + ": step budget of " +
                           std::to_string(cap_) + " exhausted");
    }
  }

  std::uint64_t used() const noexcept { return used_; }

 private:
  std::uint64_t used_ = 0;
  std::uint64_t cap_;
  const char* what_;
};

inline void check_set_size(std::size_t size, const SearchLimits& limits,
                           const char* what) {
  if (size > limits.max_set_size) {
    throw BudgetExceeded(std::string(what) + ": set size cap of " +
                         std::to_string(limits.max_set_size) + " exceeded");
  }
}

}  // namespace garside
