#include "rootmean/sympoly.hpp"

#include <algorithm>
#include <sstream>

#include "rootmean/error.hpp"

namespace rootmean {

Symbol Symbol::root(unsigned order) {
  if (order == 0) throw PreconditionError("symbol order must be positive");
  return Symbol{SymbolKind::RootParam, static_cast<std::uint16_t>(order),
                static_cast<std::uint16_t>(order)};
}

Symbol Symbol::constant(unsigned m, unsigned weight) {
  if (m == 0) throw PreconditionError("integration constant index must be positive");
  return Symbol{SymbolKind::IntegrationConst, static_cast<std::uint16_t>(m),
                static_cast<std::uint16_t>(weight)};
}

std::string Symbol::name() const {
  return (is_root() ? "r" : "c") + std::to_string(order);
}

Monomial Monomial::of(Symbol s, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(s, exponent);
  return m;
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [s, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == s) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(s, e);
    }
  }
  return m;
}

unsigned Monomial::weight() const {
  unsigned w = 0;
  for (const auto& [s, e] : factors_) w += s.weight * e;
  return w;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

std::uint32_t Monomial::exponent(Symbol s) const {
  for (const auto& [t, e] : factors_) {
    if (t == s) return e;
  }
  return 0;
}

bool Monomial::contains(SymbolKind kind) const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [kind](const Factor& f) { return f.first.kind == kind; });
}

unsigned Monomial::weight_of(SymbolKind kind) const {
  unsigned w = 0;
  for (const auto& [s, e] : factors_) {
    if (s.kind == kind) w += s.weight * e;
  }
  return w;
}

std::string Monomial::str() const {
  if (factors_.empty()) return "1";
  std::ostringstream os;
  for (size_t i = 0; i < factors_.size(); ++i) {
    if (i) os << ' ';
    os << factors_[i].first.name();
    if (factors_[i].second != 1) os << '^' << factors_[i].second;
  }
  return os.str();
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  m.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      m.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      m.factors_.push_back(*j++);
    } else {
      m.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  unsigned wa = a.weight(), wb = b.weight();
  if (wa != wb) return wa > wb;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  size_t i = 0, j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first == fb[j].first) {
      if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second;
      ++i;
      ++j;
    } else {
      // The monomial holding the smaller symbol has a positive exponent where the other has zero.
      return fa[i].first < fb[j].first;
    }
  }
  return i < fa.size() && j == fb.size();
}

SymPoly::SymPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial(), constant);
}

SymPoly SymPoly::of(Symbol s, std::uint32_t exponent) {
  return term(Monomial::of(s, exponent), Rational(1));
}

SymPoly SymPoly::term(const Monomial& m, const Rational& c) {
  SymPoly p;
  p.add_term(m, c);
  return p;
}

Rational SymPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SymPoly& SymPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

SymPoly SymPoly::operator-() const {
  SymPoly r = *this;
  for (auto& [m, coeff] : r.terms_) coeff = -coeff;
  return r;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

bool SymPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned w = terms_.begin()->first.weight();
  return std::all_of(terms_.begin(), terms_.end(),
                     [w](const auto& t) { return t.first.weight() == w; });
}

unsigned SymPoly::leading_weight() const {
  return terms_.empty() ? 0 : terms_.begin()->first.weight();
}

bool SymPoly::contains(SymbolKind kind) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [kind](const auto& t) { return t.first.contains(kind); });
}

Rational SymPoly::sum_positive() const {
  Rational s;
  for (const auto& [m, c] : terms_) {
    if (c.sign() > 0) s += c;
  }
  return s;
}

std::vector<Symbol> SymPoly::symbols() const {
  std::vector<Symbol> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.push_back(f.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SymPoly pow(const SymPoly& base, unsigned exponent) {
  SymPoly result(Rational(1));
  SymPoly b = base;
  while (exponent) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent) b = b * b;
  }
  return result;
}

SymPoly substitute(const SymPoly& p, const Binding& binding, bool keep_unbound) {
  std::map<std::pair<Symbol, std::uint32_t>, SymPoly> powers;
  auto power_of = [&](Symbol s, std::uint32_t e) -> const SymPoly& {
    auto key = std::make_pair(s, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto b = binding.find(s);
    SymPoly value;
    if (b != binding.end()) {
      value = pow(b->second, e);
    } else if (keep_unbound) {
      value = SymPoly::of(s, e);
    } else {
      throw UnboundSymbolError(s.name());
    }
    return powers.emplace(key, std::move(value)).first->second;
  };

  SymPoly out;
  for (const auto& [m, c] : p.terms()) {
    SymPoly acc(c);
    for (const auto& [s, e] : m.factors()) acc = acc * power_of(s, e);
    out += acc;
  }
  return out;
}

namespace {

template <typename T, typename PowFn>
T evaluate_impl(const SymPoly& p, const std::map<Symbol, T>& values, PowFn pow_fn,
                T (*from_rational)(const Rational&)) {
  T sum{};
  for (const auto& [m, c] : p.terms()) {
    T term = from_rational(c);
    for (const auto& [s, e] : m.factors()) {
      auto it = values.find(s);
      if (it == values.end()) throw UnboundSymbolError(s.name());
      term = term * pow_fn(it->second, e);
    }
    sum = sum + term;
  }
  return sum;
}

Rational rational_identity(const Rational& r) { return r; }
std::complex<double> rational_to_complex(const Rational& r) { return {r.to_double(), 0.0}; }

}  // namespace

Rational evaluate(const SymPoly& p, const std::map<Symbol, Rational>& values) {
  return evaluate_impl<Rational>(
      p, values, [](const Rational& v, unsigned e) { return pow(v, e); }, rational_identity);
}

std::complex<double> evaluate(const SymPoly& p,
                              const std::map<Symbol, std::complex<double>>& values) {
  return evaluate_impl<std::complex<double>>(
      p, values,
      [](const std::complex<double>& v, unsigned e) {
        std::complex<double> r(1.0, 0.0);
        for (unsigned i = 0; i < e; ++i) r *= v;
        return r;
      },
      rational_to_complex);
}

}  // namespace rootmean
