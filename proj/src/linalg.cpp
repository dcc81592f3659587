#include "rootmean/linalg.hpp"

#include <utility>

namespace rootmean {

namespace {

void divide_content(IntVector& v) {
  BigInt g = 0;
  for (const BigInt& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (BigInt& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

struct Echelon {
  IntMatrix rows;
  std::vector<size_t> pivots;  // pivot column of rows[i]
};

/// Reduced form where each pivot column has exactly one nonzero entry.
Echelon reduce(IntMatrix a, size_t cols) {
  Echelon e;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < a.size(); ++c) {
    size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    divide_content(a[r]);
    if (a[r][c] < 0) {
      for (BigInt& x : a[r]) x = -x;
    }
    for (size_t k = 0; k < a.size(); ++k) {
      if (k == r || a[k][c] == 0) continue;
      const BigInt factor = a[k][c];
      for (size_t j = 0; j < cols; ++j) a[k][j] = a[r][c] * a[k][j] - factor * a[r][j];
      divide_content(a[k]);
    }
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

}  // namespace

IntVector make_primitive(IntVector v) {
  divide_content(v);
  for (const BigInt& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (BigInt& y : v) y = -y;
    }
    break;
  }
  return v;
}

IntVector primitive_from_rational(const std::vector<Rational>& v) {
  BigInt l = 1;
  for (const Rational& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const Rational& x : v) out.push_back(x.num() * (l / x.den()));
  return make_primitive(std::move(out));
}

std::vector<IntVector> nullspace(const IntMatrix& m, size_t cols) {
  Echelon e = reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : e.pivots) is_pivot[c] = true;

  std::vector<IntVector> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    BigInt l = 1;
    for (size_t i = 0; i < e.rows.size(); ++i) {
      if (e.rows[i][f] != 0) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.rows[i][e.pivots[i]].get_mpz_t());
      }
    }
    IntVector v(cols, 0);
    v[f] = l;
    for (size_t i = 0; i < e.rows.size(); ++i) {
      const BigInt& piv = e.rows[i][e.pivots[i]];
      v[e.pivots[i]] = -(e.rows[i][f] * (l / piv));
    }
    basis.push_back(make_primitive(std::move(v)));
  }
  return basis;
}

std::vector<IntVector> nullspace(const RationalMatrix& m, size_t cols) {
  IntMatrix a;
  a.reserve(m.size());
  for (const auto& row : m) {
    BigInt l = 1;
    for (const Rational& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    IntVector r;
    r.reserve(cols);
    for (const Rational& x : row) r.push_back(x.num() * (l / x.den()));
    a.push_back(std::move(r));
  }
  return nullspace(a, cols);
}

size_t rank(const IntMatrix& m, size_t cols) { return reduce(m, cols).pivots.size(); }

IntMatrix echelon_rows(const IntMatrix& m, size_t cols) { return reduce(m, cols).rows; }

}  // namespace rootmean
