#include "rootmean/seqmine.hpp"

#include "rootmean/combinatorics.hpp"
#include "rootmean/error.hpp"
#include "rootmean/parallel.hpp"
#include "rootmean/phi.hpp"

namespace rootmean {

Rational leading_phi_coefficient(int D, int rho) {
  return phi({D, 0, rho}).poly.coefficient(Monomial::of(Symbol::root(D)));
}

Rational first_power_phi_coefficient(int D, int rho) {
  return phi({D, 0, rho}).poly.coefficient(Monomial::of(Symbol::root(1), D));
}

std::vector<int> default_n_points(int D) {
  std::vector<int> out;
  for (int n = 1; n <= D + 2; ++n) out.push_back(n);
  return out;
}

HFit fit_h(int D, const std::vector<int>& n_points, LeadingTarget target) {
  if (n_points.size() < 3) throw PreconditionError("fit_h: need at least three points");
  HFit fit;
  fit.D = D;
  fit.target = target;
  std::vector<Rational> xs, ys;
  for (int n : n_points) {
    if (n < 1) throw PreconditionError("fit_h: family sizes must be positive");
    xs.emplace_back(n);
    ys.push_back(target == LeadingTarget::TopParameter ? leading_phi_coefficient(D, D - n)
                                                       : first_power_phi_coefficient(D, D - n));
  }
  const size_t k = n_points.size() - 2;
  fit.h = RationalPolynomial::interpolate(std::span(xs).first(k), std::span(ys).first(k));
  fit.fit_points.assign(n_points.begin(), n_points.begin() + k);
  fit.heldout_points.assign(n_points.begin() + k, n_points.end());
  for (size_t i = k; i < n_points.size(); ++i) {
    if (fit.h(xs[i]) != ys[i]) {
      throw StructureError("not polynomial in n at degree " + std::to_string(D) + ": held-out n=" +
                           std::to_string(n_points[i]) + " disagrees");
    }
  }
  return fit;
}

RationalPolynomial structural_factor(int D) {
  Rational c(BigInt(D), factorial(D));
  if (D % 2) c = -c;
  RationalPolynomial f({Rational(D), Rational(-1)});
  if (parity_exponent(D)) f = f * RationalPolynomial::monomial(Rational(1), 1);
  return f * c;
}

RationalPolynomial extract_g(int D, const RationalPolynomial& h) {
  const auto [q, r] = divmod(h, structural_factor(D));
  if (!r.is_zero()) {
    throw StructureError("h is not divisible by the structural factor at degree " + std::to_string(D));
  }
  const int M = D - 2 - parity_exponent(D);
  if (q.degree() != M || !q.is_monic()) {
    throw StructureError("quotient at degree " + std::to_string(D) + " is " + q.str("n") +
                         ", expected monic of degree " + std::to_string(M));
  }
  return q;
}

Rational t_value(const RationalPolynomial& g, int D, int k) {
  const int e = D - k - parity_exponent(D);
  return e < 0 ? Rational() : g.coeff(static_cast<unsigned>(e));
}

TSeries t_series(int k, const std::map<int, RationalPolynomial>& g_by_degree, const std::vector<int>& degrees) {
  if (degrees.size() < 3) throw PreconditionError("t_series: need at least three degrees");
  TSeries s;
  s.k = k;
  std::vector<Rational> xs, ys;
  for (int D : degrees) {
    auto it = g_by_degree.find(D);
    if (it == g_by_degree.end()) throw PreconditionError("t_series: no g for degree " + std::to_string(D));
    xs.emplace_back(D);
    ys.push_back(t_value(it->second, D, k));
  }
  const size_t m = degrees.size() - 2;
  s.t = RationalPolynomial::interpolate(std::span(xs).first(m), std::span(ys).first(m));
  s.fit_degrees.assign(degrees.begin(), degrees.begin() + m);
  s.heldout_degrees.assign(degrees.begin() + m, degrees.end());
  for (size_t i = m; i < degrees.size(); ++i) {
    if (s.t(xs[i]) != ys[i]) {
      throw StructureError("t_" + std::to_string(k) + " is not polynomial over the sweep: held-out D=" +
                           std::to_string(degrees[i]) + " disagrees");
    }
  }
  return s;
}

std::map<int, RationalPolynomial> g_sweep(int d_max, unsigned threads) {
  std::vector<RationalPolynomial> gs(d_max + 1);
  parallel_for(static_cast<size_t>(d_max - 1), threads, [&](size_t i) {
    const int D = static_cast<int>(i) + 2;
    gs[D] = extract_g(D, fit_h(D, default_n_points(D)).h);
  });
  std::map<int, RationalPolynomial> out;
  for (int D = 2; D <= d_max; ++D) out.emplace(D, gs[D]);
  return out;
}

namespace {

struct Sequences {
  std::vector<TSeries> t;
  std::vector<BigInt> Q, norlund;
};

Sequences mine(int k_max, int d_max, const std::map<int, RationalPolynomial>& gs) {
  Sequences s;
  for (int k = 2; k <= k_max; ++k) {
    std::vector<int> degrees;
    for (int D = k + 1; D <= d_max; ++D) degrees.push_back(D);
    TSeries ts = t_series(k, gs, degrees);
    const BigInt q = ts.t.lcd();
    const RationalPolynomial u = ts.t * Rational(q);
    if (!u.has_integer_coeffs()) throw StructureError("u_" + std::to_string(k) + " is not integral");
    s.Q.push_back(q);
    s.norlund.push_back(u.leading().num());
    s.t.push_back(std::move(ts));
  }
  return s;
}

}  // namespace

MiningResult mine_Q_and_norlund(int k_max, int d_max, unsigned threads) {
  if (k_max < 2) throw PreconditionError("mine: k_max must be at least 2");
  // t_k has degree 2(k-2) in D: 2k-3 fit points plus two held out, starting at k+1.
  if (d_max < 3 * k_max) {
    throw PreconditionError("mine: degree sweep " + std::to_string(d_max) + " too short for k_max " +
                            std::to_string(k_max) + " (need at least " + std::to_string(3 * k_max) + ")");
  }
  const auto gs = g_sweep(d_max, threads);
  Sequences full = mine(k_max, d_max, gs);

  MiningResult r;
  r.Q = {"Q", 2, full.Q, d_max};
  r.norlund = {"norlund", 2, full.norlund, d_max};
  r.stability_d_max = d_max - 1;
  try {
    Sequences part = mine(k_max, d_max - 1, gs);
    r.stable = part.Q == full.Q && part.norlund == full.norlund;
  } catch (const StructureError&) {
    r.stable = false;
  }
  for (int k = 3; k <= k_max; k += 2) {
    OddVanishing v;
    v.k = k;
    v.defined_values_zero = true;
    for (int D = 2; D <= k; ++D) {
      const auto& g = gs.at(D);
      if (!t_value(g, D, k).is_zero() || !t_value(g, D, k + 1).is_zero()) v.defined_values_zero = false;
    }
    v.polynomial_zero_at_k = full.t[k - 2].t(Rational(k)).is_zero();
    if (k + 1 <= k_max) v.next_polynomial_at_k = full.t[k - 1].t(Rational(k));
    r.odd_vanishing.push_back(v);
  }
  for (const auto& [D, g] : gs) r.g_irreducible.emplace_back(D, irreducibility(g));
  r.t = std::move(full.t);
  return r;
}

}  // namespace rootmean
