#ifndef NSP_ERRORS_HPP
#define NSP_ERRORS_HPP

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace nsp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Input exceeds a desk-scale limit; raised instead of returning a guess.
class TooLarge : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Two independently validated certificates contradict each other.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

/// Search budget shared by the exhaustive solvers. Zero means unlimited.
struct Budget {
  std::uint64_t max_nodes = 0;
  double max_seconds = 0.0;

  static Budget unlimited() { return {}; }

  /// Defaults from NSP_BUDGET_NODES / NSP_BUDGET_SECONDS when set.
  static Budget from_env() {
    Budget b;
    if (const char* s = std::getenv("NSP_BUDGET_NODES")) b.max_nodes = std::strtoull(s, nullptr, 10);
    if (const char* s = std::getenv("NSP_BUDGET_SECONDS")) b.max_seconds = std::strtod(s, nullptr);
    return b;
  }
};

/// Counts search nodes against a Budget.
class BudgetMeter {
 public:
  explicit BudgetMeter(Budget b) : budget_(b), start_(std::chrono::steady_clock::now()) {}

  /// Returns false once the budget is exhausted (sticky).
  bool tick() {
    if (exhausted_) return false;
    ++nodes_;
    if (budget_.max_nodes != 0 && nodes_ > budget_.max_nodes) exhausted_ = true;
    if (budget_.max_seconds > 0.0 && (nodes_ & 0x3ff) == 0 && elapsed() > budget_.max_seconds)
      exhausted_ = true;
    return !exhausted_;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace nsp

#endif  // NSP_ERRORS_HPP
