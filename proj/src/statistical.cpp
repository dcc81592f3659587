#include <cmath>

#include "rootmean/numeric.hpp"

namespace rootmean {

std::vector<Complex> solve_quadratic_statistical(Complex E, Complex V) {
  const Complex sigma = std::sqrt(V);
  return {E - sigma, E + sigma};
}

std::vector<Complex> solve_cubic_statistical(Complex E, Complex V, Complex W) {
  const Complex half_w = W / 2.0;
  const Complex half_v = V / 2.0;
  const Complex disc = std::sqrt(half_w * half_w - half_v * half_v * half_v);
  // Cube the larger of the two candidates; the partner follows from T+ T- = V/2,
  // which avoids cancellation and pairs the branches correctly.
  const Complex plus = half_w + disc;
  const Complex minus = half_w - disc;
  const Complex big = std::abs(plus) >= std::abs(minus) ? plus : minus;
  if (big == Complex(0.0)) return {E, E, E};
  const Complex t_plus = std::pow(big, 1.0 / 3.0);
  const Complex t_minus = half_v / t_plus;
  const Complex omega(-0.5, std::sqrt(3.0) / 2.0);
  std::vector<Complex> roots;
  Complex w = 1.0;
  for (int k = 0; k < 3; ++k) {
    roots.push_back(E + w * t_plus + std::conj(w) * t_minus);
    w *= omega;
  }
  return roots;
}

}  // namespace rootmean
