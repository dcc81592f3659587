#pragma once

#include <stdexcept>
#include <string>

namespace rootmean {

/// Raised when a caller violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by substitution when a symbol has no binding.
class UnboundSymbolError : public std::runtime_error {
 public:
  explicit UnboundSymbolError(const std::string& symbol)
      : std::runtime_error("unbound symbol: " + symbol), symbol_(symbol) {}
  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

/// Raised when a fitted structure does not hold (interpolation, division).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the root finder when the iteration cap is exhausted.
class RootFindError : public std::runtime_error {
 public:
  RootFindError(const std::string& what, double best_residual)
      : std::runtime_error(what), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

 private:
  double best_residual_;
};

}  // namespace rootmean
