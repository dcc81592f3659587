#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rootmean/ratpoly.hpp"

namespace rootmean {

/// Coefficient of the top parameter r_D in phi(D, 0, rho).
Rational leading_phi_coefficient(int D, int rho);

/// Coefficient of r1^D in phi(D, 0, rho).
Rational first_power_phi_coefficient(int D, int rho);

enum class LeadingTarget { TopParameter, FirstPower };

/// Fitted coefficient polynomial in the family size n = D - rho.
struct HFit {
  int D = 0;
  LeadingTarget target = LeadingTarget::TopParameter;
  RationalPolynomial h;
  std::vector<int> fit_points;
  std::vector<int> heldout_points;
};

/// Interpolates through all but the last two points and checks those two.
/// Throws StructureError when a held-out point disagrees.
HFit fit_h(int D, const std::vector<int>& n_points, LeadingTarget target = LeadingTarget::TopParameter);

/// n = 1..D+2.
std::vector<int> default_n_points(int D);

/// 1 for odd D, 0 for even.
inline int parity_exponent(int D) { return D % 2 == 0 ? 0 : 1; }

/// ((-1)^D D / D!) (D - n) n^chi, the factor divided out of h.
RationalPolynomial structural_factor(int D);

/// h divided by structural_factor(D). Throws StructureError unless the division is
/// exact and the quotient is monic of degree D - 2 - chi.
RationalPolynomial extract_g(int D, const RationalPolynomial& h);

/// Coefficient of n^(D - k - chi) in g_D, or zero when the exponent is negative.
Rational t_value(const RationalPolynomial& g, int D, int k);

struct TSeries {
  int k = 0;
  RationalPolynomial t;
  std::vector<int> fit_degrees;
  std::vector<int> heldout_degrees;
};

/// Fits t_k over the given degrees (all but the last two) and checks the rest
/// exactly. Throws StructureError on a held-out mismatch.
TSeries t_series(int k, const std::map<int, RationalPolynomial>& g_by_degree,
                 const std::vector<int>& degrees);

/// g_D for every D in [2, d_max], computed in parallel.
std::map<int, RationalPolynomial> g_sweep(int d_max, unsigned threads = 1);

struct MinedSequence {
  std::string name;
  int first_index = 0;
  std::vector<BigInt> values;
  int d_max = 0;
};

/// For odd k: the coefficients t_k(D), t_{k+1}(D) are zero by definition when
/// D <= k; the fitted polynomial t_k (from D > k only) also vanishes at D = k.
struct OddVanishing {
  int k = 0;
  bool defined_values_zero = false;
  bool polynomial_zero_at_k = false;
  /// Fitted t_{k+1} evaluated at D = k; reported, not required to vanish.
  std::optional<Rational> next_polynomial_at_k;
};

struct MiningResult {
  std::vector<TSeries> t;
  std::vector<OddVanishing> odd_vanishing;
  std::vector<std::pair<int, Irreducibility>> g_irreducible;
  MinedSequence Q;
  MinedSequence norlund;
  /// Q and norlund agree with a run on the sweep ending one degree earlier.
  bool stable = false;
  int stability_d_max = 0;
};

/// Q_k = lcd of t_k, u_k = Q_k t_k, norlund_k = leading coefficient of u_k, k = 2..k_max.
/// t_k is fitted over D in [k+1, d_max]; requires d_max >= 3 k_max so the
/// shorter comparison sweep still has two held-out degrees.
MiningResult mine_Q_and_norlund(int k_max, int d_max, unsigned threads = 1);

}  // namespace rootmean
