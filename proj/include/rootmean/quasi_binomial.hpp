#pragma once

#include <vector>

#include "rootmean/sympoly.hpp"

namespace rootmean {

/// Ordered parameter vector (r^(1), r^(2), ...) of a monic polynomial in
/// quasi-binomial form. Slots past the root parameters hold integration constants.
class QuasiBinomialVector {
 public:
  /// (r1, ..., rD) as atomic symbols.
  static QuasiBinomialVector atomic(unsigned degree);

  unsigned degree() const { return static_cast<unsigned>(entries_.size()); }
  /// Number of trailing integration-constant slots.
  unsigned constants() const { return constants_; }
  /// 1-based access; entry i has weight i.
  const SymPoly& operator[](unsigned order) const;
  const std::vector<SymPoly>& entries() const { return entries_; }

  friend QuasiBinomialVector truncate_params(const QuasiBinomialVector& r, unsigned m);
  friend QuasiBinomialVector extend_params(const QuasiBinomialVector& r, unsigned m);

 private:
  std::vector<SymPoly> entries_;
  unsigned constants_ = 0;
};

/// Drops the top m entries (parameter vector of the m-th derivative). Requires m < degree.
QuasiBinomialVector truncate_params(const QuasiBinomialVector& r, unsigned m);

/// Appends integration constants c_{k+1}..c_{k+m} at the next orders
/// (parameter vector of the m-th antiderivative).
QuasiBinomialVector extend_params(const QuasiBinomialVector& r, unsigned m);

/// Coefficients of the monic degree-D polynomial built from r, indexed by
/// power: result[j] = (-1)^(D-j) C(D, j) r^(D-j), with r^(0) = 1.
std::vector<SymPoly> quasi_binomial_coeffs(unsigned degree, const QuasiBinomialVector& r);

}  // namespace rootmean
