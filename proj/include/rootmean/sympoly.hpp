#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rootmean/rational.hpp"

namespace rootmean {

enum class SymbolKind : std::uint8_t { RootParam = 0, IntegrationConst = 1 };

/// A barred quasi-binomial parameter r^(i) or an integration constant c_m.
/// Root parameters have weight equal to their order; an integration constant
/// carries the weight assigned when its parameter vector was extended.
struct Symbol {
  SymbolKind kind = SymbolKind::RootParam;
  std::uint16_t order = 1;
  std::uint16_t weight = 1;

  static Symbol root(unsigned order);
  static Symbol constant(unsigned m, unsigned weight);

  bool is_root() const { return kind == SymbolKind::RootParam; }
  /// "r3" or "c1".
  std::string name() const;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Product of symbol powers with positive exponents, sorted by symbol.
class Monomial {
 public:
  using Factor = std::pair<Symbol, std::uint32_t>;

  Monomial() = default;
  static Monomial of(Symbol s, std::uint32_t exponent = 1);
  /// Takes factors in any order; merges duplicates and drops zero exponents.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned weight() const;
  unsigned degree() const;
  std::uint32_t exponent(Symbol s) const;
  bool contains(SymbolKind kind) const;
  /// Weight contributed by symbols of the given kind only.
  unsigned weight_of(SymbolKind kind) const;
  std::string str() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Print order: higher weight first, then exponent vectors compared
/// lexicographically over symbols in ascending (kind, order), larger exponent first.
/// Reproduces the term order of the printed tables, e.g. r1^4, r1^2 r2, r1 r3, r2^2, r4.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial with exact rational coefficients; zero coefficients are never stored.
class SymPoly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  SymPoly() = default;
  SymPoly(const Rational& constant);
  static SymPoly of(Symbol s, std::uint32_t exponent = 1);
  static SymPoly term(const Monomial& m, const Rational& c);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;
  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rational& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly& operator*=(const Rational& c);
  SymPoly operator-() const;

  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(SymPoly a, const Rational& c) { return a *= c; }
  friend SymPoly operator*(const Rational& c, SymPoly a) { return a *= c; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  /// True when every monomial has the same weight (the zero polynomial counts).
  bool is_homogeneous() const;
  /// Weight of the first term; 0 for the zero polynomial.
  unsigned leading_weight() const;
  bool contains(SymbolKind kind) const;
  /// Sum of the positive coefficients.
  Rational sum_positive() const;
  /// Distinct symbols in ascending order.
  std::vector<Symbol> symbols() const;

 private:
  TermMap terms_;
};

SymPoly pow(const SymPoly& base, unsigned exponent);

using Binding = std::map<Symbol, SymPoly>;

/// Simultaneous substitution. Unbound symbols raise UnboundSymbolError unless
/// keep_unbound is set, in which case they pass through unchanged.
SymPoly substitute(const SymPoly& p, const Binding& binding, bool keep_unbound = false);

/// Exact evaluation; every symbol must be bound.
Rational evaluate(const SymPoly& p, const std::map<Symbol, Rational>& values);

/// Floating-point evaluation; every symbol must be bound.
std::complex<double> evaluate(const SymPoly& p, const std::map<Symbol, std::complex<double>>& values);

}  // namespace rootmean
