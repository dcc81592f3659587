#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rootmean/rational.hpp"

namespace rootmean {

/// Univariate polynomial with rational coefficients indexed by power.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);
  static RationalPolynomial monomial(const Rational& c, unsigned power);
  /// The unique polynomial of degree < xs.size() through the points.
  static RationalPolynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^power (zero past the degree).
  Rational coeff(unsigned power) const;
  Rational leading() const;
  bool is_monic() const { return !is_zero() && leading() == Rational(1); }
  bool has_integer_coeffs() const;
  /// Least common denominator of the coefficients.
  BigInt lcd() const;

  Rational operator()(const Rational& x) const;
  RationalPolynomial& operator+=(const RationalPolynomial& o);
  RationalPolynomial& operator-=(const RationalPolynomial& o);
  RationalPolynomial& operator*=(const Rational& c);
  friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
  friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
  friend RationalPolynomial operator*(RationalPolynomial a, const Rational& c) { return a *= c; }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// "n^2 - 2 n + 3" style rendering in the given variable.
  std::string str(const std::string& var = "x") const;

 private:
  void strip();
  std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws PreconditionError on a zero divisor.
std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b);

enum class Irreducibility { Irreducible, Reducible, NotChecked };

const char* to_string(Irreducibility v);

/// Irreducibility over the integers for a monic integer polynomial: a rational
/// root test, then Kronecker's factor search up to degree max_degree.
Irreducibility irreducibility(const RationalPolynomial& p, unsigned max_degree = 6);

}  // namespace rootmean
