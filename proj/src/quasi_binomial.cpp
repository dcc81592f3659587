#include "rootmean/quasi_binomial.hpp"

#include "rootmean/combinatorics.hpp"
#include "rootmean/error.hpp"

namespace rootmean {

QuasiBinomialVector QuasiBinomialVector::atomic(unsigned degree) {
  QuasiBinomialVector r;
  r.entries_.reserve(degree);
  for (unsigned i = 1; i <= degree; ++i) r.entries_.push_back(SymPoly::of(Symbol::root(i)));
  return r;
}

const SymPoly& QuasiBinomialVector::operator[](unsigned order) const {
  if (order == 0 || order > entries_.size()) {
    throw PreconditionError("parameter order " + std::to_string(order) + " outside 1.." +
                            std::to_string(entries_.size()));
  }
  return entries_[order - 1];
}

QuasiBinomialVector truncate_params(const QuasiBinomialVector& r, unsigned m) {
  if (m >= r.degree()) {
    throw PreconditionError("truncate_params: m=" + std::to_string(m) +
                            " must be below degree " + std::to_string(r.degree()));
  }
  QuasiBinomialVector out;
  out.entries_.assign(r.entries_.begin(), r.entries_.end() - m);
  out.constants_ = r.constants_ > m ? r.constants_ - m : 0;
  return out;
}

QuasiBinomialVector extend_params(const QuasiBinomialVector& r, unsigned m) {
  if (m == 0) throw PreconditionError("extend_params: m must be positive");
  QuasiBinomialVector out = r;
  for (unsigned k = 1; k <= m; ++k) {
    unsigned order = r.degree() + k;
    out.entries_.push_back(SymPoly::of(Symbol::constant(r.constants_ + k, order)));
  }
  out.constants_ = r.constants_ + m;
  return out;
}

std::vector<SymPoly> quasi_binomial_coeffs(unsigned degree, const QuasiBinomialVector& r) {
  if (r.degree() < degree) {
    throw PreconditionError("quasi_binomial_coeffs: parameter vector of length " +
                            std::to_string(r.degree()) + " is shorter than degree " +
                            std::to_string(degree));
  }
  std::vector<SymPoly> coeffs(degree + 1);
  for (unsigned j = 0; j <= degree; ++j) {
    unsigned i = degree - j;
    Rational c(binomial(degree, j));
    if (i % 2) c = -c;
    coeffs[j] = i == 0 ? SymPoly(c) : r[i] * c;
  }
  return coeffs;
}

}  // namespace rootmean
