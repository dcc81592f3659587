#pragma once

#include <string>
#include <vector>

#include "rootmean/quasi_binomial.hpp"
#include "rootmean/sympoly.hpp"

namespace rootmean {

/// Identifies the mean of f^(delta) over the roots of f^(rho) for monic f of degree D.
/// Negative orders are antiderivatives.
struct PhiKey {
  int D = 2;
  int delta = 0;
  int rho = 0;

  /// Size of the averaging family, D - rho.
  int family_size() const { return D - rho; }
  std::string str() const;
  friend auto operator<=>(const PhiKey&, const PhiKey&) = default;
};

/// Throws PreconditionError unless D >= 1 and D - rho >= 1.
void validate(const PhiKey& key);

struct PhiResult {
  PhiKey key;
  SymPoly poly;
  /// Set when delta >= D, where the averaged function is a constant.
  bool constant_function = false;

  int family_size() const { return key.family_size(); }
};

/// Mean value polynomial in the parameters r1..rD and, for antiderivatives,
/// integration constants c_m of weight D + m. Memoized and thread-safe; the
/// returned reference stays valid for the process lifetime.
const PhiResult& phi(const PhiKey& key);

struct PhiRow {
  PhiResult result;
  Rational sum_positive;
};

/// Rows for rho from rho_hi down to rho_lo (the tables' top-to-bottom order).
std::vector<PhiRow> phi_table(int D, int delta, int rho_lo, int rho_hi, unsigned threads = 1);

struct Moments {
  SymPoly mean;
  SymPoly variance;
  SymPoly third_central;
};

/// Mean, population variance and third central moment of the roots of the
/// monic polynomial with parameter vector r (degree >= 3).
Moments statistical_moments(const QuasiBinomialVector& r);

/// Replaces each integration constant by the root parameter of equal weight,
/// identifying the extended parameter vector of f^(-m) with that of a
/// higher-degree polynomial.
SymPoly identify_constants(const SymPoly& p);

}  // namespace rootmean
