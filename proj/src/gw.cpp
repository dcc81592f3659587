#include "rootmean/gw.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>

#include "rootmean/error.hpp"

namespace rootmean {

Rational gw_coefficient(const Partition& kappa, unsigned n) {
  if (n == 0) throw PreconditionError("gw_coefficient: family size must be positive");
  if (kappa.empty()) throw PreconditionError("gw_coefficient: empty partition");
  if (kappa.largest() > n) return Rational(0);

  const unsigned j = kappa.weight();
  const unsigned card = kappa.card();
  std::vector<unsigned> mults;
  BigInt binom_product = 1;
  for (auto [part, mult] : kappa.parts()) {
    mults.push_back(mult);
    BigInt b;
    mpz_pow_ui(b.get_mpz_t(), binomial(n, part).get_mpz_t(), mult);
    binom_product *= b;
  }
  Rational c(BigInt(j) * multinomial(card, mults) * binom_product, BigInt(n) * BigInt(card));
  if ((j + card) % 2) c = -c;
  return c;
}

namespace {

struct PowerSumCache {
  std::shared_mutex mutex;
  std::map<std::pair<unsigned, unsigned>, SymPoly> entries;
};

PowerSumCache& power_sum_cache() {
  static PowerSumCache cache;
  return cache;
}

SymPoly compute_power_sum_mean(unsigned j, unsigned n) {
  if (j == 0) return SymPoly(Rational(1));
  SymPoly p;
  for (const Partition& kappa : partitions_bounded(j, n)) {
    std::vector<Monomial::Factor> factors;
    for (auto [part, mult] : kappa.parts()) factors.emplace_back(Symbol::root(part), mult);
    p.add_term(Monomial::from_factors(std::move(factors)), gw_coefficient(kappa, n));
  }
  return p;
}

}  // namespace

const SymPoly& power_sum_mean(unsigned j, unsigned n) {
  if (n == 0) throw PreconditionError("power_sum_mean: family size must be positive");
  auto& cache = power_sum_cache();
  const auto key = std::make_pair(j, n);
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  SymPoly value = compute_power_sum_mean(j, n);
  std::unique_lock lock(cache.mutex);
  return cache.entries.try_emplace(key, std::move(value)).first->second;
}

std::vector<Rational> normalized_elementary(std::span<const Rational> values) {
  const size_t n = values.size();
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (const Rational& z : values) {
    for (size_t i = n; i >= 1; --i) e[i] += e[i - 1] * z;
  }
  for (size_t i = 0; i <= n; ++i) {
    e[i] /= Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)));
  }
  return e;
}

Rational newton_residual(unsigned n, std::span<const Rational> values) {
  if (n == 0 || values.size() != n) {
    throw PreconditionError("newton_residual: expected " + std::to_string(n) + " values");
  }
  std::vector<Rational> e(n + 1);
  e[0] = 1;
  for (const Rational& z : values) {
    for (size_t i = n; i >= 1; --i) e[i] += e[i - 1] * z;
  }
  Rational sum;
  for (unsigned j = 0; j <= n; ++j) {
    Rational p_j = 0;
    if (j == 0) {
      p_j = n;
    } else {
      for (const Rational& z : values) p_j += pow(z, j);
    }
    Rational term = p_j * e[n - j];
    sum += (j % 2) ? -term : term;
  }
  return sum;
}

}  // namespace rootmean
