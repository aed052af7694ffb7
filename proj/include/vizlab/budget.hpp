#pragma once

#include <cstdint>
#include <limits>

namespace vizlab {

/// Node-expansion allowance shared by one or more solver calls.
/// Counting nodes rather than time keeps results identical across machines.
class Budget {
 public:
  static constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();
  static constexpr std::uint64_t kDefault = 200'000'000;

  explicit Budget(std::uint64_t limit = kDefault) : limit_(limit) {}

  /// Charges `nodes` expansions; false once the limit has been passed.
  bool spend(std::uint64_t nodes = 1) {
    used_ = nodes > kUnlimited - used_ ? kUnlimited : used_ + nodes;
    return used_ <= limit_;
  }
  bool exhausted() const { return used_ > limit_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Every exponential search reports one of these. `unknown` always carries
/// the bounds reached so far and must never be read as a value.
enum class Outcome { exact, unknown, infeasible };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::exact: return "exact";
    case Outcome::unknown: return "unknown";
    case Outcome::infeasible: return "infeasible";
  }
  return "?";
}

}  // namespace vizlab
