#include "rootmean/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rootmean/combinatorics.hpp"
#include "rootmean/error.hpp"
#include "rootmean/parallel.hpp"

namespace rootmean {

NumPoly::NumPoly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw PreconditionError("NumPoly: degree must be at least 1");
  if (coeffs_.back() != Complex(1.0, 0.0)) throw PreconditionError("NumPoly: leading coefficient must be 1");
}

NumPoly NumPoly::normalized(std::vector<Complex> coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == Complex(0.0)) coeffs.pop_back();
  if (coeffs.size() < 2) throw PreconditionError("NumPoly: degree must be at least 1");
  const Complex lead = coeffs.back();
  for (Complex& c : coeffs) c /= lead;
  coeffs.back() = 1.0;
  return NumPoly(std::move(coeffs));
}

NumPoly NumPoly::from_roots(std::span<const Complex> roots) {
  std::vector<Complex> c{1.0};
  for (Complex r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  c.back() = 1.0;
  return NumPoly(std::move(c));
}

Complex NumPoly::operator()(Complex x) const { return horner(coeffs_, x); }

double NumPoly::scale_at(Complex x) const { return horner_scale(coeffs_, x); }

Complex horner(std::span<const Complex> coeffs, Complex x) {
  Complex acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

double horner_scale(std::span<const Complex> coeffs, Complex x) {
  const double ax = std::abs(x);
  double acc = 0.0;
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * ax + std::abs(coeffs[i]);
  return acc;
}

std::vector<Complex> differentiate(std::span<const Complex> coeffs, unsigned k) {
  if (k >= coeffs.size()) return {0.0};
  std::vector<Complex> out(coeffs.size() - k);
  for (size_t j = 0; j < out.size(); ++j) {
    double f = 1.0;
    for (size_t t = j + 1; t <= j + k; ++t) f *= static_cast<double>(t);
    out[j] = coeffs[j + k] * f;
  }
  return out;
}

namespace {

struct Derivatives {
  Complex p, dp;
};

Derivatives eval_with_derivative(std::span<const Complex> c, Complex x) {
  Complex p = 0.0, dp = 0.0;
  for (size_t i = c.size(); i-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[i];
  }
  return {p, dp};
}

/// Backward error |p(z)| / scale(z). Near a root at the origin of a polynomial
/// with zero constant term this ratio tends to 1, so the relative Newton step
/// is accepted as the error there.
double relative_residual(const NumPoly& p, Complex z) {
  const double s = p.scale_at(z);
  if (s == 0.0) return 0.0;
  const double backward = std::abs(p(z)) / s;
  const auto [v, dv] = eval_with_derivative(p.coeffs(), z);
  if (dv == Complex(0.0)) return backward;
  return std::min(backward, std::abs(v / dv) / (1.0 + std::abs(z)));
}

/// Replaces each cluster of nearby roots that behaves like a multiple root by
/// copies of its centroid.
void snap_clusters(const NumPoly& p, std::vector<Complex>& z) {
  const size_t n = z.size();
  std::vector<size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (std::abs(z[i] - z[j]) < 1e-4 * (1.0 + std::abs(z[i]))) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<size_t>> groups(n);
  for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
  for (const auto& g : groups) {
    if (g.size() < 2) continue;
    Complex c = 0.0;
    for (size_t i : g) c += z[i];
    c /= static_cast<double>(g.size());
    // An m-fold root is a simple root of the (m-1)-th derivative; polish there.
    const auto top = differentiate(p.coeffs(), static_cast<unsigned>(g.size() - 1));
    for (int it = 0; it < 8; ++it) {
      const auto [v, dv] = eval_with_derivative(top, c);
      if (dv == Complex(0.0)) break;
      c -= v / dv;
    }
    // A genuine m-fold root is also a root of the first m-1 derivatives.
    bool multiple = true;
    for (unsigned d = 0; d + 1 < g.size(); ++d) {
      const auto dc = differentiate(p.coeffs(), d);
      const double s = horner_scale(dc, c);
      if (s > 0.0 && std::abs(horner(dc, c)) > 1e-6 * s) {
        multiple = false;
        break;
      }
    }
    if (multiple) {
      for (size_t i : g) z[i] = c;
    }
  }
}

}  // namespace

RootFamily find_roots(const NumPoly& p, const RootOptions& options) {
  const unsigned n = p.degree();
  const auto& a = p.coeffs();
  RootFamily fam;
  if (n == 1) {
    fam.roots = {-a[0]};
    return fam;
  }

  const Complex center = -a[n - 1] / static_cast<double>(n);
  double radius = 0.0;
  for (unsigned k = 1; k <= n; ++k) {
    radius = std::max(radius, std::pow(std::abs(a[n - k]), 1.0 / k));
  }
  radius = std::max(2.0 * radius, 1e-3);
  std::vector<Complex> z(n);
  for (unsigned k = 0; k < n; ++k) {
    const double angle = 2.0 * M_PI * k / n + 0.4;
    z[k] = center + radius * Complex(std::cos(angle), std::sin(angle));
  }

  std::vector<bool> done(n, false);
  for (unsigned it = 0; it < options.max_iterations; ++it) {
    bool all_done = true;
    for (unsigned k = 0; k < n; ++k) {
      if (done[k]) continue;
      const auto [pv, dpv] = eval_with_derivative(a, z[k]);
      if (pv == Complex(0.0)) {
        done[k] = true;
        continue;
      }
      Complex repulsion = 0.0;
      for (unsigned j = 0; j < n; ++j) {
        if (j != k && z[k] != z[j]) repulsion += 1.0 / (z[k] - z[j]);
      }
      const Complex ratio = pv / dpv;
      Complex w = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = Complex(1e-8, 1e-8);
      z[k] -= w;
      if (std::abs(w) <= 1e-15 * (1.0 + std::abs(z[k]))) {
        done[k] = true;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }

  snap_clusters(p, z);
  double worst = 0.0;
  for (Complex r : z) worst = std::max(worst, relative_residual(p, r));
  if (!(worst <= options.residual_tol)) {
    throw RootFindError("root finder did not converge", worst);
  }
  fam.roots = std::move(z);
  fam.condition_estimate = worst;
  return fam;
}

Complex mean_over_family(std::span<const Complex> g, const RootFamily& family) {
  if (family.roots.empty()) throw PreconditionError("mean_over_family: empty family");
  Complex s = 0.0;
  for (Complex r : family.roots) s += horner(g, r);
  return s / static_cast<double>(family.roots.size());
}

std::vector<Complex> derived_coeffs(int D, int order, std::span<const Complex> params) {
  if (D < 1) throw PreconditionError("derived_coeffs: degree must be positive");
  if (order >= D) {
    return {order == D ? Complex(factorial(D).get_d()) : Complex(0.0)};
  }
  const int deg = D - order;
  if (static_cast<int>(params.size()) < deg) {
    throw PreconditionError("derived_coeffs: not enough parameters");
  }
  double scale = 1.0;
  if (order >= 0) {
    for (int k = D - order + 1; k <= D; ++k) scale *= k;
  } else {
    for (int k = D + 1; k <= deg; ++k) scale /= k;
  }
  std::vector<Complex> out(deg + 1);
  for (int j = 0; j <= deg; ++j) {
    const int i = deg - j;
    const Complex r = i == 0 ? Complex(1.0) : params[i - 1];
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    out[j] = scale * sign * binomial(deg, j).get_d() * r;
  }
  return out;
}

std::vector<Complex> quasi_binomial_params(std::span<const Complex> roots) {
  const size_t n = roots.size();
  std::vector<Complex> e(n + 1, 0.0);
  e[0] = 1.0;
  for (Complex r : roots) {
    for (size_t i = n; i >= 1; --i) e[i] += e[i - 1] * r;
  }
  std::vector<Complex> out(n);
  for (size_t i = 1; i <= n; ++i) out[i - 1] = e[i] / binomial(n, i).get_d();
  return out;
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed + index * 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return std::mt19937_64(x);
}

namespace {

Complex disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double rad = radius * std::sqrt(u(rng));
  const double angle = 2.0 * M_PI * u(rng);
  return {rad * std::cos(angle), rad * std::sin(angle)};
}

}  // namespace

std::vector<Complex> sample_roots(unsigned n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Complex> roots(n);
    for (Complex& r : roots) r = disk_point(rng, 2.0);
    bool separated = true;
    for (unsigned i = 0; i < n && separated; ++i) {
      for (unsigned j = i + 1; j < n; ++j) {
        if (std::abs(roots[i] - roots[j]) < 1e-6) {
          separated = false;
          break;
        }
      }
    }
    if (separated) return roots;
  }
}

std::vector<Complex> sample_params(unsigned D, unsigned constants, std::mt19937_64& rng) {
  std::vector<Complex> params = quasi_binomial_params(sample_roots(D, rng));
  for (unsigned m = 1; m <= constants; ++m) {
    // Distributed like a product of D + m roots, matching the slot's weight.
    Complex c = 1.0;
    for (unsigned k = 0; k < D + m; ++k) c *= disk_point(rng, 2.0);
    params.push_back(c);
  }
  return params;
}

namespace {

struct SampleOutcome {
  double residual = 0.0;
  bool skipped = false;
};

template <typename Fn>
NumericReport run_samples(std::string subject, const NumericOptions& options, Fn&& sample) {
  NumericReport rep;
  rep.subject = std::move(subject);
  rep.samples = options.samples;
  rep.seed = options.seed;
  rep.tolerance = options.tolerance;
  std::vector<SampleOutcome> out(options.samples);
  parallel_for(options.samples, options.threads, [&](size_t i) {
    std::mt19937_64 rng = sample_rng(options.seed, i);
    try {
      out[i].residual = sample(rng);
    } catch (const RootFindError&) {
      out[i].skipped = true;
    }
  });
  for (const auto& o : out) {
    if (o.skipped) {
      ++rep.skipped;
    } else {
      // NaN compares false, so a poisoned sample fails the check.
      if (!(o.residual <= rep.max_rel_residual)) rep.max_rel_residual = std::isnan(o.residual) ? INFINITY : o.residual;
    }
  }
  rep.pass = rep.max_rel_residual <= rep.tolerance;
  return rep;
}

int lowest_order(const RelationVector& rel) {
  int lo = std::min(0, rel.delta());
  for (int rho : rel.nonzero_support()) lo = std::min(lo, rho);
  return lo;
}

}  // namespace

NumericReport check_relation_numeric(const RelationVector& rel, const NumericOptions& options) {
  const int D = rel.D();
  const unsigned constants = static_cast<unsigned>(-lowest_order(rel));
  return run_samples(rel.str(), options, [&](std::mt19937_64& rng) {
    const auto params = sample_params(D, constants, rng);
    const auto g = derived_coeffs(D, rel.delta(), params);
    Complex total = 0.0;
    double scale = 0.0;
    for (size_t i = 0; i < rel.support().size(); ++i) {
      const BigInt& a = rel.alpha()[i];
      if (a == 0) continue;
      const int rho = rel.support()[i];
      const auto fam = find_roots(NumPoly::normalized(derived_coeffs(D, rho, params)));
      const double alpha = a.get_d();
      total += alpha * mean_over_family(g, fam);
      double s = 0.0;
      for (Complex r : fam.roots) s += horner_scale(g, r);
      scale += std::abs(alpha) * s / static_cast<double>(fam.roots.size());
    }
    return scale == 0.0 ? 0.0 : std::abs(total) / scale;
  });
}

RatesSum check_relative_rates(const NumPoly& p, unsigned k) {
  RatesSum out;
  if (k > p.degree()) return out;
  const auto fam = find_roots(p);
  const auto d1 = differentiate(p.coeffs(), 1);
  const auto dk = differentiate(p.coeffs(), k);
  for (Complex r : fam.roots) {
    const Complex slope = horner(d1, r);
    if (std::abs(slope) <= 1e-8 * horner_scale(d1, r)) {
      throw RootFindError("repeated root: derivative vanishes at a root", std::abs(slope));
    }
    const Complex q = horner(dk, r) / slope;
    out.sum += q;
    out.magnitude += std::abs(q);
  }
  return out;
}

NumericReport check_relative_rates_random(unsigned D, const NumericOptions& options) {
  return run_samples("relative-rates D=" + std::to_string(D), options, [&](std::mt19937_64& rng) {
    const NumPoly p = NumPoly::from_roots(sample_roots(D, rng));
    double worst = 0.0;
    for (unsigned k = 2; k + 1 <= D; ++k) {
      const RatesSum s = check_relative_rates(p, k);
      if (s.magnitude > 0.0) worst = std::max(worst, std::abs(s.sum) / s.magnitude);
    }
    return worst;
  });
}

namespace {

/// Mean of p' over the roots of p - dh, plus the Horner scale of that mean.
std::pair<Complex, double> mean_slope(const NumPoly& p, double dh) {
  std::vector<Complex> c = p.coeffs();
  c[0] -= dh;
  const auto fam = find_roots(NumPoly(std::move(c)));
  const auto d1 = differentiate(p.coeffs(), 1);
  double s = 0.0;
  for (Complex r : fam.roots) s += horner_scale(d1, r);
  return {mean_over_family(d1, fam), s / static_cast<double>(fam.roots.size())};
}

}  // namespace

NumericReport check_translation_invariance(const NumPoly& p, std::span<const double> dh_list) {
  if (p.degree() < 2) throw PreconditionError("check_translation_invariance: degree must be at least 2");
  NumericReport rep;
  rep.subject = "translation-invariance";
  rep.samples = dh_list.size();
  const auto [base, base_scale] = mean_slope(p, 0.0);
  for (double dh : dh_list) {
    try {
      const auto [m, s] = mean_slope(p, dh);
      const double denom = std::max(base_scale, s);
      const double rel = denom == 0.0 ? 0.0 : std::abs(m - base) / denom;
      rep.max_rel_residual = std::max(rep.max_rel_residual, rel);
    } catch (const RootFindError&) {
      ++rep.skipped;
    }
  }
  rep.pass = rep.max_rel_residual <= rep.tolerance;
  return rep;
}

NumericReport check_translation_invariance_random(unsigned D, const NumericOptions& options) {
  return run_samples("translation-invariance D=" + std::to_string(D), options, [&](std::mt19937_64& rng) {
    const NumPoly p = NumPoly::from_roots(sample_roots(D, rng));
    std::normal_distribution<double> shift(0.0, 2.0);
    const double dh[] = {shift(rng), shift(rng), shift(rng)};
    const NumericReport r = check_translation_invariance(p, dh);
    if (r.skipped) throw RootFindError("translated polynomial failed", r.max_rel_residual);
    return r.max_rel_residual;
  });
}

NumericReport check_phi_numeric(const PhiKey& key, const NumericOptions& options) {
  validate(key);
  const PhiResult& res = phi(key);
  const unsigned constants = static_cast<unsigned>(-std::min({0, key.delta, key.rho}));
  return run_samples("phi" + key.str(), options, [&](std::mt19937_64& rng) {
    const auto params = sample_params(key.D, constants, rng);
    std::map<Symbol, Complex> values;
    for (const Symbol& s : res.poly.symbols()) values[s] = params.at(s.weight - 1);
    const Complex symbolic = evaluate(res.poly, values);
    const auto g = derived_coeffs(key.D, key.delta, params);
    const auto fam = find_roots(NumPoly::normalized(derived_coeffs(key.D, key.rho, params)));
    const Complex direct = mean_over_family(g, fam);
    double s = 0.0;
    for (Complex r : fam.roots) s += horner_scale(g, r);
    s /= static_cast<double>(fam.roots.size());
    return s == 0.0 ? 0.0 : std::abs(symbolic - direct) / s;
  });
}

}  // namespace rootmean
