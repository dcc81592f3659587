#include "rootmean/relations.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <sstream>

#include "rootmean/combinatorics.hpp"
#include "rootmean/error.hpp"
#include "rootmean/parallel.hpp"

namespace rootmean {

namespace {

void check_shape(const std::vector<int>& support, const IntVector& alpha) {
  if (support.size() != alpha.size()) {
    throw PreconditionError("relation: support and alpha lengths differ");
  }
  std::vector<int> sorted = support;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("relation: repeated rho in support");
  }
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

RelationVector RelationVector::unchecked(int D, int delta, std::vector<int> support, IntVector alpha) {
  check_shape(support, alpha);
  RelationVector r;
  r.D_ = D;
  r.delta_ = delta;
  r.support_ = std::move(support);
  r.alpha_ = make_primitive(std::move(alpha));
  return r;
}

RelationVector::RelationVector(int D, int delta, std::vector<int> support, IntVector alpha)
    : RelationVector(unchecked(D, delta, std::move(support), std::move(alpha))) {
  if (!relation_sum(D_, delta_, support_, alpha_).is_zero()) {
    throw StructureError("relation does not vanish: " + str());
  }
}

std::vector<int> RelationVector::nonzero_support() const {
  std::vector<int> out;
  for (size_t i = 0; i < support_.size(); ++i) {
    if (alpha_[i] != 0) out.push_back(support_[i]);
  }
  return out;
}

BigInt RelationVector::alpha_sum() const {
  BigInt s = 0;
  for (const BigInt& a : alpha_) s += a;
  return s;
}

std::string RelationVector::str() const {
  std::ostringstream os;
  os << "D=" << D_ << " delta=" << delta_ << " rho=[" << join(support_) << "] alpha=[";
  for (size_t i = 0; i < alpha_.size(); ++i) os << (i ? "," : "") << alpha_[i].get_str();
  os << "]";
  return os.str();
}

SymPoly relation_sum(int D, int delta, const std::vector<int>& support, const IntVector& alpha) {
  check_shape(support, alpha);
  SymPoly total;
  for (size_t i = 0; i < support.size(); ++i) {
    if (alpha[i] == 0) continue;
    total += phi({D, delta, support[i]}).poly * Rational(alpha[i]);
  }
  return total;
}

PhiMatrix build_phi_matrix(const std::vector<PhiKey>& keys) {
  PhiMatrix m;
  m.cols = keys;
  std::map<Monomial, size_t, MonomialOrder> index;
  for (const PhiKey& k : keys) {
    for (const auto& [mono, c] : phi(k).poly.terms()) index.emplace(mono, 0);
  }
  size_t r = 0;
  for (auto& [mono, slot] : index) {
    slot = r++;
    m.rows.push_back(mono);
  }
  m.entries.assign(m.rows.size(), std::vector<Rational>(keys.size()));
  for (size_t c = 0; c < keys.size(); ++c) {
    for (const auto& [mono, coeff] : phi(keys[c]).poly.terms()) m.entries[index.at(mono)][c] = coeff;
  }
  return m;
}

namespace {

IntMatrix integer_rows(const RationalMatrix& m) {
  IntMatrix out;
  out.reserve(m.size());
  for (const auto& row : m) {
    BigInt l = 1;
    for (const Rational& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    IntVector v;
    v.reserve(row.size());
    for (const Rational& x : row) v.push_back(x.num() * (l / x.den()));
    out.push_back(std::move(v));
  }
  return out;
}

IntMatrix select_columns(const IntMatrix& m, uint32_t mask) {
  IntMatrix out;
  out.reserve(m.size());
  for (const IntVector& row : m) {
    IntVector r;
    for (size_t c = 0; c < row.size(); ++c) {
      if (mask & (1U << c)) r.push_back(row[c]);
    }
    out.push_back(std::move(r));
  }
  return out;
}

bool by_support_then_alpha(const RelationVector& a, const RelationVector& b) {
  const auto sa = a.nonzero_support();
  const auto sb = b.nonzero_support();
  if (sa != sb) return sa < sb;
  return a.alpha() < b.alpha();
}

std::vector<RelationVector> mine_circuits(int D, int delta, const std::vector<int>& rho_set,
                                          const IntMatrix& reduced, size_t full_rank, unsigned threads) {
  const size_t m = rho_set.size();
  std::vector<uint32_t> circuits;
  std::vector<IntVector> circuit_vectors;
  for (size_t size = 1; size <= std::min(m, full_rank + 1); ++size) {
    std::vector<uint32_t> candidates;
    for (uint32_t mask = 0; mask < (1U << m); ++mask) {
      if (static_cast<size_t>(std::popcount(mask)) != size) continue;
      bool covered = false;
      for (uint32_t c : circuits) {
        if ((c & mask) == c) {
          covered = true;
          break;
        }
      }
      if (!covered) candidates.push_back(mask);
    }
    std::vector<IntVector> found(candidates.size());
    parallel_for(candidates.size(), threads, [&](size_t i) {
      const IntMatrix sub = select_columns(reduced, candidates[i]);
      auto ns = nullspace(sub, size);
      if (!ns.empty()) found[i] = std::move(ns.front());
    });
    for (size_t i = 0; i < candidates.size(); ++i) {
      if (found[i].empty()) continue;
      circuits.push_back(candidates[i]);
      IntVector aligned(m, 0);
      size_t k = 0;
      for (size_t c = 0; c < m; ++c) {
        if (candidates[i] & (1U << c)) aligned[c] = found[i][k++];
      }
      circuit_vectors.push_back(std::move(aligned));
    }
  }
  std::vector<RelationVector> out;
  out.reserve(circuit_vectors.size());
  for (IntVector& v : circuit_vectors) out.emplace_back(D, delta, rho_set, std::move(v));
  std::sort(out.begin(), out.end(), by_support_then_alpha);
  return out;
}

}  // namespace

RelationReport find_relations(int D, int delta, const std::vector<int>& rho_set,
                              const RelationOptions& options) {
  RelationReport report;
  report.D = D;
  report.delta = delta;
  report.rho_set = rho_set;
  check_shape(rho_set, IntVector(rho_set.size()));

  std::vector<PhiKey> keys;
  for (int rho : rho_set) {
    keys.push_back({D, delta, rho});
    validate(keys.back());
  }
  parallel_for(keys.size(), options.threads, [&](size_t i) { (void)phi(keys[i]); });

  const PhiMatrix pm = build_phi_matrix(keys);
  const size_t m = keys.size();
  const IntMatrix ints = integer_rows(pm.entries);

  for (IntVector& v : nullspace(ints, m)) {
    report.basis.emplace_back(D, delta, rho_set, std::move(v));
  }
  report.dim = report.basis.size();
  for (const auto& b : report.basis) {
    if (b.alpha_sum() != 0) report.zero_sum_ok = false;
  }

  if (options.minimal_support && m <= options.max_minimal_columns && m <= 31) {
    const IntMatrix reduced = echelon_rows(ints, m);
    report.minimal_support = mine_circuits(D, delta, rho_set, reduced, reduced.size(), options.threads);
    report.minimal_support_complete = true;
  }

  if (D % 2 == 1 && delta == 0 && D >= 3) {
    IntVector alt(m, 0);
    bool covers = true;
    for (int rho = 1; rho < D; ++rho) {
      auto it = std::find(rho_set.begin(), rho_set.end(), rho);
      if (it == rho_set.end()) {
        covers = false;
        break;
      }
      BigInt c = binomial(D, rho);
      alt[it - rho_set.begin()] = (rho % 2 == 0) ? c : BigInt(-c);
    }
    if (covers) {
      try {
        report.distinguished.emplace(D, delta, rho_set, std::move(alt));
      } catch (const StructureError&) {
        // Reported as absent; check_odd_binomial gives the verdict.
      }
    }
  }
  return report;
}

std::vector<int> default_rho_window(int D) {
  std::vector<int> out;
  for (int rho = -(D + 2); rho <= D - 1; ++rho) out.push_back(rho);
  return out;
}

std::vector<int> positive_rho_set(int D) {
  std::vector<int> out;
  for (int rho = 1; rho <= D - 1; ++rho) out.push_back(rho);
  return out;
}

size_t relation_space_dim(int D) {
  if (D < 2) throw PreconditionError("relation_space_dim: degree must be at least 2");
  const auto rho_set = positive_rho_set(D);
  std::vector<PhiKey> keys;
  for (int rho : rho_set) keys.push_back({D, 0, rho});
  const PhiMatrix pm = build_phi_matrix(keys);
  return keys.size() - rank(integer_rows(pm.entries), keys.size());
}

bool check_odd_binomial(int D) {
  if (D < 3 || D % 2 == 0) throw PreconditionError("check_odd_binomial: degree must be odd and at least 3");
  const auto rho_set = positive_rho_set(D);
  IntVector alpha;
  for (int rho : rho_set) {
    BigInt c = binomial(D, rho);
    alpha.push_back(rho % 2 == 0 ? c : BigInt(-c));
  }
  return relation_sum(D, 0, rho_set, alpha).is_zero();
}

RelationVector shifted(const RelationVector& rel) {
  std::vector<int> support = rel.support();
  for (int& rho : support) ++rho;
  for (int rho : support) validate({rel.D() + 1, rel.delta() + 1, rho});
  return RelationVector::unchecked(rel.D() + 1, rel.delta() + 1, std::move(support), rel.alpha());
}

bool check_inheritance(const RelationVector& rel) {
  const RelationVector s = shifted(rel);
  return relation_sum(s.D(), s.delta(), s.support(), s.alpha()).is_zero();
}

IntVector align(const RelationVector& rel, const std::vector<int>& rho_set) {
  IntVector out(rho_set.size(), 0);
  for (size_t i = 0; i < rel.support().size(); ++i) {
    if (rel.alpha()[i] == 0) continue;
    auto it = std::find(rho_set.begin(), rho_set.end(), rel.support()[i]);
    if (it == rho_set.end()) {
      throw PreconditionError("align: rho " + std::to_string(rel.support()[i]) + " not in target set");
    }
    out[it - rho_set.begin()] = rel.alpha()[i];
  }
  return out;
}

size_t relation_rank(const std::vector<RelationVector>& rels, const std::vector<int>& rho_set) {
  IntMatrix m;
  for (const auto& r : rels) m.push_back(align(r, rho_set));
  return rank(m, rho_set.size());
}

std::optional<RelationVector> relation_on_support(int D, int delta, const std::vector<int>& support) {
  std::vector<PhiKey> keys;
  for (int rho : support) keys.push_back({D, delta, rho});
  const PhiMatrix pm = build_phi_matrix(keys);
  auto ns = nullspace(pm.entries, keys.size());
  if (ns.size() != 1) return std::nullopt;
  return RelationVector(D, delta, support, std::move(ns.front()));
}

}  // namespace rootmean
