#pragma once

#include <span>
#include <vector>

#include "rootmean/combinatorics.hpp"
#include "rootmean/sympoly.hpp"

namespace rootmean {

/// Normalized Girard-Waring coefficient of the monomial prod (r^(i))^(k_i)
/// in the mean power sum of degree j = kappa.weight() over an n-element family:
///   (j (-1)^j / n) ((-1)^|kappa| / |kappa|) multinomial(|kappa|; kappa) prod C(n,i)^(k_i).
/// Zero when some part exceeds n.
Rational gw_coefficient(const Partition& kappa, unsigned n);

/// Mean power sum (1/n) sum z^j of an n-element family, as a polynomial in the
/// family's normalized elementary symmetric functions r1..rn. Memoized and
/// safe to call concurrently; the returned reference stays valid for the process lifetime.
/// j = 0 yields the constant 1.
const SymPoly& power_sum_mean(unsigned j, unsigned n);

/// Normalized elementary symmetric values e_i / C(n,i) for i = 0..n.
std::vector<Rational> normalized_elementary(std::span<const Rational> values);

/// sum over i + j = n of (-1)^j p_j e_i with p_0 = n; zero for every multiset.
Rational newton_residual(unsigned n, std::span<const Rational> values);

}  // namespace rootmean
