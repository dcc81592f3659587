#include "rootmean/phi.hpp"

#include <cstdlib>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "rootmean/combinatorics.hpp"
#include "rootmean/error.hpp"
#include "rootmean/gw.hpp"
#include "rootmean/parallel.hpp"

namespace rootmean {

std::string PhiKey::str() const {
  return "(" + std::to_string(D) + "," + std::to_string(delta) + "," + std::to_string(rho) + ")";
}

void validate(const PhiKey& key) {
  if (key.D < 1) throw PreconditionError("phi key " + key.str() + ": degree must be positive");
  if (key.family_size() < 1) {
    throw PreconditionError("phi key " + key.str() + ": root family is empty");
  }
}

namespace {

QuasiBinomialVector resize_params(const QuasiBinomialVector& r, int order) {
  if (order > 0) return truncate_params(r, static_cast<unsigned>(order));
  if (order < 0) return extend_params(r, static_cast<unsigned>(-order));
  return r;
}

/// D!/(D-delta)! for delta >= 0, 1/((D+1)...(D-delta)) for delta < 0.
Rational derivative_scale(int D, int delta) {
  if (delta >= 0) return Rational(falling_factorial(D, delta));
  BigInt denom = 1;
  for (int k = D + 1; k <= D - delta; ++k) denom *= k;
  return Rational(BigInt(1), denom);
}

PhiResult compute_phi(const PhiKey& key) {
  PhiResult out{key, {}, false};
  const int D = key.D;
  if (key.delta >= D) {
    out.constant_function = true;
    if (key.delta == D) out.poly = SymPoly(Rational(factorial(D)));
    return out;
  }

  const QuasiBinomialVector base = QuasiBinomialVector::atomic(D);
  // Both vectors are derived from the same base, so antiderivatives of the
  // averaged function and of the family share integration-constant symbols.
  const QuasiBinomialVector fn_params = resize_params(base, key.delta);
  const QuasiBinomialVector family_params = resize_params(base, key.rho);
  const unsigned g_degree = static_cast<unsigned>(D - key.delta);
  const unsigned n = static_cast<unsigned>(key.family_size());

  std::vector<SymPoly> g = quasi_binomial_coeffs(g_degree, fn_params);
  const Rational scale = derivative_scale(D, key.delta);

  Binding binding;
  for (unsigned i = 1; i <= n; ++i) binding.emplace(Symbol::root(i), family_params[i]);

  SymPoly total;
  for (unsigned j = 0; j <= g_degree; ++j) {
    if (g[j].is_zero()) continue;
    SymPoly mean_power = substitute(power_sum_mean(j, n), binding);
    total += g[j] * mean_power;
  }
  total *= scale;
  out.poly = std::move(total);
  return out;
}

struct PhiCache {
  std::shared_mutex mutex;
  std::map<PhiKey, PhiResult> entries;
};

PhiCache& phi_cache() {
  static PhiCache cache;
  return cache;
}

}  // namespace

const PhiResult& phi(const PhiKey& key) {
  validate(key);
  auto& cache = phi_cache();
  {
    std::shared_lock lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  PhiResult value = compute_phi(key);
  std::unique_lock lock(cache.mutex);
  return cache.entries.try_emplace(key, std::move(value)).first->second;
}

std::vector<PhiRow> phi_table(int D, int delta, int rho_lo, int rho_hi, unsigned threads) {
  if (rho_lo > rho_hi) throw PreconditionError("phi_table: empty rho range");
  std::vector<PhiKey> keys;
  for (int rho = rho_hi; rho >= rho_lo; --rho) {
    keys.push_back({D, delta, rho});
    validate(keys.back());
  }
  std::vector<PhiRow> rows(keys.size());
  parallel_for(keys.size(), threads, [&](size_t i) {
    const PhiResult& r = phi(keys[i]);
    rows[i] = PhiRow{r, r.poly.sum_positive()};
  });
  return rows;
}

Moments statistical_moments(const QuasiBinomialVector& r) {
  const unsigned n = r.degree();
  if (n < 3) throw PreconditionError("statistical_moments: degree must be at least 3");
  Binding binding;
  for (unsigned i = 1; i <= n; ++i) binding.emplace(Symbol::root(i), r[i]);
  const SymPoly p1 = substitute(power_sum_mean(1, n), binding);
  const SymPoly p2 = substitute(power_sum_mean(2, n), binding);
  const SymPoly p3 = substitute(power_sum_mean(3, n), binding);
  Moments m;
  m.mean = p1;
  m.variance = p2 - p1 * p1;
  m.third_central = p3 - Rational(3) * (p1 * p2) + Rational(2) * pow(p1, 3);
  return m;
}

SymPoly identify_constants(const SymPoly& p) {
  Binding binding;
  for (const Symbol& s : p.symbols()) {
    if (!s.is_root()) binding.emplace(s, SymPoly::of(Symbol::root(s.weight)));
  }
  return substitute(p, binding, true);
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("ROOTMEAN_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace rootmean
