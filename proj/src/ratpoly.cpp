#include "rootmean/ratpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>

#include "rootmean/error.hpp"

namespace rootmean {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

void RationalPolynomial::strip() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, unsigned power) {
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) throw PreconditionError("interpolate: point count mismatch");
  const size_t n = xs.size();
  // Newton divided differences, then expansion into the power basis.
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      const Rational dx = xs[i] - xs[i - level];
      if (dx.is_zero()) throw PreconditionError("interpolate: repeated abscissa");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
    }
  }
  RationalPolynomial out;
  for (size_t i = n; i-- > 0;) {
    out = out * RationalPolynomial({-xs[i], Rational(1)});
    out += RationalPolynomial({dd[i]});
  }
  return out;
}

Rational RationalPolynomial::coeff(unsigned power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational();
}

Rational RationalPolynomial::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

bool RationalPolynomial::has_integer_coeffs() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.is_integer(); });
}

BigInt RationalPolynomial::lcd() const {
  BigInt l = 1;
  for (const Rational& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
  return l;
}

Rational RationalPolynomial::operator()(const Rational& x) const {
  Rational acc;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const Rational& c) {
  for (Rational& x : coeffs_) x *= c;
  strip();
  return *this;
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::str(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == Rational(1);
    if (!unit || i == 0) os << mag.str();
    if (i > 0) {
      if (!unit) os << " ";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                         const RationalPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("divmod: division by the zero polynomial");
  RationalPolynomial rem = a;
  std::vector<Rational> q(std::max(0, a.degree() - b.degree() + 1));
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    const unsigned shift = static_cast<unsigned>(rem.degree() - b.degree());
    const Rational factor = rem.leading() / b.leading();
    q[shift] = factor;
    rem -= RationalPolynomial::monomial(factor, shift) * b;
  }
  return {RationalPolynomial(std::move(q)), rem};
}

const char* to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::Irreducible: return "irreducible";
    case Irreducibility::Reducible: return "reducible";
    case Irreducibility::NotChecked: return "not checked";
  }
  return "?";
}

namespace {

/// Positive divisors of |v| for v fitting in 63 bits; empty when too large.
std::vector<std::int64_t> divisors(const BigInt& v) {
  BigInt a = abs(v);
  if (!a.fits_slong_p()) return {};
  const std::int64_t x = a.get_si();
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= x; ++d) {
    if (x % d) continue;
    small.push_back(d);
    if (d != x / d) large.push_back(x / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

Irreducibility irreducibility(const RationalPolynomial& p, unsigned max_degree) {
  if (!p.is_monic() || !p.has_integer_coeffs()) {
    throw PreconditionError("irreducibility: expects a monic integer polynomial");
  }
  const int n = p.degree();
  if (n <= 1) return Irreducibility::Irreducible;
  if (p.coeff(0).is_zero()) return Irreducibility::Reducible;

  // Rational roots of a monic integer polynomial are integer divisors of the constant term.
  const auto c0_divs = divisors(p.coeff(0).num());
  if (c0_divs.empty()) return Irreducibility::NotChecked;
  for (std::int64_t d : c0_divs) {
    if (p(Rational(static_cast<long>(d))).is_zero() || p(Rational(-static_cast<long>(d))).is_zero()) {
      return Irreducibility::Reducible;
    }
  }
  if (n <= 3) return Irreducibility::Irreducible;
  if (static_cast<unsigned>(n) > max_degree) return Irreducibility::NotChecked;

  // Kronecker: a monic factor of degree d is fixed by its values at d
  // points, each of which divides the value of p there.
  for (int d = 2; d <= n / 2; ++d) {
    // Use the sample points whose values have the fewest divisors.
    std::vector<std::pair<long, std::vector<std::int64_t>>> points;
    for (long x = -24; x <= 24; ++x) {
      auto divs = divisors(p(Rational(x)).num());
      if (divs.empty()) return Irreducibility::NotChecked;
      points.push_back({x, std::move(divs)});
    }
    std::stable_sort(points.begin(), points.end(),
                     [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
    points.resize(static_cast<size_t>(d));
    std::size_t combos = 1;
    for (const auto& pt : points) {
      combos *= 2 * pt.second.size();
      if (combos > 5'000'000) return Irreducibility::NotChecked;
    }
    std::vector<Rational> xs, ys(points.size());
    for (const auto& pt : points) xs.push_back(Rational(pt.first));
    const RationalPolynomial lead = RationalPolynomial::monomial(Rational(1), static_cast<unsigned>(d));
    bool found = false;
    std::function<void(size_t)> search = [&](size_t i) {
      if (found) return;
      if (i == points.size()) {
        std::vector<Rational> rest(ys.size());
        for (size_t t = 0; t < ys.size(); ++t) rest[t] = ys[t] - lead(xs[t]);
        const RationalPolynomial cand = lead + RationalPolynomial::interpolate(xs, rest);
        if (!cand.has_integer_coeffs()) return;
        if (divmod(p, cand).second.is_zero()) found = true;
        return;
      }
      for (std::int64_t dv : points[i].second) {
        for (int s : {1, -1}) {
          ys[i] = Rational(static_cast<long>(s * dv));
          search(i + 1);
          if (found) return;
        }
      }
    };
    search(0);
    if (found) return Irreducibility::Reducible;
  }
  return Irreducibility::Irreducible;
}

}  // namespace rootmean
