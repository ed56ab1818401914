#ifndef XHO_TYPES_HPP
#define XHO_TYPES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xho {

// A face or vertex subset: sorted, duplicate-free vertex ids.
using VSet = std::vector<int>;

// Thrown when an operation would exceed its configured size budget
// (e.g. an exponential object with too many vertices).
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed input files; carries a line number for diagnostics.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line)
      : std::runtime_error(what + " (line " + std::to_string(line) + ")"),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class Status { Found, No, Unknown };

// Tri-state search result: a definitive witness, a definitive "no", or
// "unknown" when the search budget ran out before the state space did.
template <typename T>
struct Outcome {
  Status status = Status::Unknown;
  std::optional<T> value;

  static Outcome found(T v) { return {Status::Found, std::move(v)}; }
  static Outcome no() { return {Status::No, std::nullopt}; }
  static Outcome unknown() { return {Status::Unknown, std::nullopt}; }

  bool is_found() const { return status == Status::Found; }
  bool is_no() const { return status == Status::No; }
  bool is_unknown() const { return status == Status::Unknown; }
  const T& operator*() const { return *value; }
  const T* operator->() const { return &*value; }
};

// Mutable step counter shared down a search tree.
struct Budget {
  std::int64_t remaining = 100000;

  explicit Budget(std::int64_t steps = 100000) : remaining(steps) {}

  // Consumes one step; returns false once the budget is exhausted.
  bool spend(std::int64_t n = 1) {
    if (remaining < n) {
      remaining = -1;
      return false;
    }
    remaining -= n;
    return true;
  }
  bool exhausted() const { return remaining < 0; }
};

inline std::int64_t default_budget_steps() {
  if (const char* env = std::getenv("XHO_BUDGET")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 100000;
}

}  // namespace xho

#endif  // XHO_TYPES_HPP
