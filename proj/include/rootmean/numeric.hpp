#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "rootmean/relations.hpp"

namespace rootmean {

using Complex = std::complex<double>;

/// Monic polynomial with complex coefficients indexed by power.
class NumPoly {
 public:
  /// Throws PreconditionError unless degree >= 1 and the leading coefficient is exactly 1.
  explicit NumPoly(std::vector<Complex> coeffs);
  /// Divides through by the leading coefficient.
  static NumPoly normalized(std::vector<Complex> coeffs);
  static NumPoly from_roots(std::span<const Complex> roots);

  unsigned degree() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex operator()(Complex x) const;
  /// sum |a_k| |x|^k, the natural scale for the residual at x.
  double scale_at(Complex x) const;

 private:
  std::vector<Complex> coeffs_;
};

/// Horner evaluation of a coefficient vector indexed by power.
Complex horner(std::span<const Complex> coeffs, Complex x);
double horner_scale(std::span<const Complex> coeffs, Complex x);
/// k-th derivative of a coefficient vector (k may exceed the degree).
std::vector<Complex> differentiate(std::span<const Complex> coeffs, unsigned k);

struct RootFamily {
  std::vector<Complex> roots;
  int D = 0;
  int rho = 0;
  /// Largest residual over the returned roots: |p(r)| / scale(p, r), or the
  /// relative Newton step when that is smaller.
  double condition_estimate = 0.0;
};

struct RootOptions {
  double residual_tol = 1e-10;
  unsigned max_iterations = 1000;
};

/// All complex roots by Aberth iteration; near-coincident roots are snapped to
/// their cluster centroid. Throws RootFindError if some residual stays above tolerance.
RootFamily find_roots(const NumPoly& p, const RootOptions& options = {});

/// Mean of the coefficient vector `g` over the family.
Complex mean_over_family(std::span<const Complex> g, const RootFamily& family);

/// Coefficients (by power) of the order-`order` derivative of the degree-D monic
/// polynomial with quasi-binomial parameters params[0] = r1, params[1] = r2, ...
/// Negative orders read the antiderivative constants from params[D], params[D+1], ...
/// and carry the factor 1/((D+1)...(D-order)).
std::vector<Complex> derived_coeffs(int D, int order, std::span<const Complex> params);

/// Normalized elementary symmetric values e_i / C(n,i), i = 1..n.
std::vector<Complex> quasi_binomial_params(std::span<const Complex> roots);

/// Reproducible per-sample generator: SplitMix64 of (seed + index) seeds an mt19937_64.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t index);

/// Roots uniform on the disk of radius 2, resampled while two roots lie within 1e-6.
std::vector<Complex> sample_roots(unsigned n, std::mt19937_64& rng);

/// Parameters r1..rD of a random degree-D polynomial plus `constants` random
/// integration constants of matching weight.
std::vector<Complex> sample_params(unsigned D, unsigned constants, std::mt19937_64& rng);

struct NumericReport {
  std::string subject;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::uint64_t skipped = 0;
  double max_rel_residual = 0.0;
  double tolerance = 1e-8;
  bool pass = true;
};

struct NumericOptions {
  std::uint64_t samples = 100;
  std::uint64_t seed = 42;
  double tolerance = 1e-8;
  unsigned threads = 1;
};

/// Evaluates sum alpha_rho mean_{f^(rho) roots} f^(delta) on random polynomials;
/// the residual is relative to sum |alpha_rho| times the mean Horner scale.
NumericReport check_relation_numeric(const RelationVector& rel, const NumericOptions& options);

struct RatesSum {
  Complex sum;
  /// sum |f^(k)(r) / f'(r)|
  double magnitude = 0.0;
};

/// sum over the roots r of p of p^(k)(r) / p'(r). Throws RootFindError when
/// p has clustered roots (p'(r) near zero).
RatesSum check_relative_rates(const NumPoly& p, unsigned k);

/// Relative-rates identity for k = 2..D-1 over random degree-D polynomials.
NumericReport check_relative_rates_random(unsigned D, const NumericOptions& options);

/// Largest relative change of the mean of p' over the roots of p - dh, dh in dh_list.
NumericReport check_translation_invariance(const NumPoly& p, std::span<const double> dh_list);

/// Random polynomials of degree D with random shifts.
NumericReport check_translation_invariance_random(unsigned D, const NumericOptions& options);

/// Max relative gap between phi(key) evaluated at the sampled parameters and
/// the direct numeric mean.
NumericReport check_phi_numeric(const PhiKey& key, const NumericOptions& options);

/// Roots E - sqrt(V), E + sqrt(V) of the quadratic with root mean E and variance V.
std::vector<Complex> solve_quadratic_statistical(Complex E, Complex V);

/// Roots of the cubic with root mean E, population variance V and third
/// central moment W, by Cardano with T+ T- = V/2.
std::vector<Complex> solve_cubic_statistical(Complex E, Complex V, Complex W);

}  // namespace rootmean
