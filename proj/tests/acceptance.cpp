// Acceptance suite: one PASS/FAIL line per criterion.
//
// Optional OEIS b-files for the mining criterion come from the command line
// (--bfile-q PATH, --bfile-norlund PATH) or the environment variables
// ROOTMEAN_BFILE_Q and ROOTMEAN_BFILE_NORLUND. Nothing is compared when none is given.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "rootmean/bfile.hpp"
#include "rootmean/combinatorics.hpp"
#include "rootmean/gw.hpp"
#include "rootmean/numeric.hpp"
#include "rootmean/parallel.hpp"
#include "rootmean/phi.hpp"
#include "rootmean/relations.hpp"
#include "rootmean/seqmine.hpp"

using namespace rootmean;

namespace {

// Pinned tolerances.
constexpr double kPrintedGapMin = 1e-4;     // a ledger entry must fix a visibly wrong row
constexpr double kCorrectedGapMax = 1e-8;   // and the corrected row must match the numeric mean
constexpr double kNumericTol = 1e-8;        // numeric cross-validation residual
constexpr std::uint64_t kSeed = 42;

// Runtime budgets in seconds.
constexpr double kBudgetPhi = 10, kBudgetGw = 5, kBudgetRelations = 30, kBudgetDims = 600;
constexpr double kBudgetNumeric = 120, kBudgetMining = 300;

struct Result {
  bool pass = true;
  std::string detail;
};

Symbol r(unsigned i) { return Symbol::root(i); }

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

bool has_alpha(const std::vector<RelationVector>& rels, const IntVector& a) {
  for (const auto& x : rels) {
    if (x.alpha() == a) return true;
  }
  return false;
}

// 1
Result phi_tables() {
  const auto ledger = fixtures::ledger();
  const auto rows = fixtures::phi_rows();
  std::set<int> degrees;
  size_t mismatched = 0, fixed = 0, unjustified = 0;
  for (const auto& row : rows) {
    degrees.insert(row.D);
    const PhiKey key{row.D, row.delta, row.rho};
    const PhiResult& engine = phi(key);
    std::vector<std::string> applied;
    const SymPoly corrected = fixtures::corrected(row, ledger, &applied);
    if (corrected != engine.poly || row.sum_positive != engine.poly.sum_positive() || engine.family_size() != row.n) {
      ++mismatched;
    }
    if (!applied.empty()) {
      ++fixed;
      if (!(fixtures::phi_gap(key, row.printed, 10, kSeed) > kPrintedGapMin) ||
          !(fixtures::phi_gap(key, corrected, 10, kSeed) < kCorrectedGapMax)) {
        ++unjustified;
      }
    }
  }
  const bool all_tables = degrees == std::set<int>{2, 3, 4, 5, 6, 7};
  return {all_tables && mismatched == 0 && unjustified == 0 && !rows.empty(),
          std::to_string(rows.size()) + " rows, " + std::to_string(mismatched) + " mismatches, " +
              std::to_string(fixed) + " ledger fixes (" + std::to_string(unjustified) + " unjustified)"};
}

// 2
Result gw_tables() {
  const auto ledger = fixtures::ledger();
  const auto rows = fixtures::gw_rows();
  size_t mismatched = 0, fixed = 0, unjustified = 0;
  for (const auto& row : rows) {
    const SymPoly& engine = power_sum_mean(row.j, row.n);
    std::vector<std::string> applied;
    const SymPoly corrected = fixtures::corrected(row, ledger, &applied);
    if (corrected != engine || row.sum_positive != engine.sum_positive()) ++mismatched;
    if (!applied.empty()) {
      ++fixed;
      if (!(fixtures::gw_gap(row.n, row.j, row.printed, 20, kSeed) > kPrintedGapMin) ||
          !(fixtures::gw_gap(row.n, row.j, corrected, 20, kSeed) < kCorrectedGapMax)) {
        ++unjustified;
      }
    }
  }
  // Two-element means at unit product against Chebyshev T_j from the recurrence.
  std::vector<std::vector<long>> t{{1}, {0, 1}};
  size_t cheb_bad = 0;
  for (unsigned j = 2; j <= 8; ++j) {
    std::vector<long> next(j + 1, 0);
    for (size_t i = 0; i < t[j - 1].size(); ++i) next[i + 1] += 2 * t[j - 1][i];
    for (size_t i = 0; i < t[j - 2].size(); ++i) next[i] -= t[j - 2][i];
    t.push_back(next);
  }
  for (unsigned j = 1; j <= 8; ++j) {
    const SymPoly p = substitute(power_sum_mean(j, 2), {{r(2), SymPoly(Rational(1))}}, true);
    for (unsigned i = 0; i <= j; ++i) {
      const Monomial m = i == 0 ? Monomial() : Monomial::of(r(1), i);
      if (p.coefficient(m) != Rational(t[j][i])) ++cheb_bad;
    }
  }
  return {mismatched == 0 && unjustified == 0 && cheb_bad == 0 && !rows.empty(),
          std::to_string(rows.size()) + " rows, " + std::to_string(mismatched) + " mismatches, " +
              std::to_string(fixed) + " ledger fixes, Chebyshev rows " + (cheb_bad ? "differ" : "agree")};
}

// 3 and 6 share the relation reports.
std::map<int, RelationReport> fundamental_reports() {
  std::map<int, RelationReport> out;
  for (int D = 3; D <= 8; ++D) out.emplace(D, find_relations(D, 0, positive_rho_set(D)));
  return out;
}

Result fundamental_relations(const std::map<int, RelationReport>& reps) {
  std::vector<std::string> bad;
  auto unique_is = [&](int D, const IntVector& a) {
    const auto& rep = reps.at(D);
    if (rep.dim != 1 || rep.basis.front().alpha() != a) bad.push_back("D=" + std::to_string(D));
  };
  unique_is(3, iv({1, -1}));
  unique_is(4, iv({5, -6, 1}));
  unique_is(6, iv({77, -120, 60, -20, 3}));
  unique_is(8, iv({669, -1260, 1050, -700, 315, -84, 10}));

  // Odd degrees: each printed vector lies in the engine's minimal-support set or
  // is the alternating binomial one, and together they span exactly two dimensions.
  auto odd_set = [&](int D, const std::vector<IntVector>& printed) {
    const auto& rep = reps.at(D);
    std::vector<RelationVector> rels;
    for (const auto& a : printed) {
      const bool found = has_alpha(rep.minimal_support, a) || (rep.distinguished && rep.distinguished->alpha() == a);
      if (!found) bad.push_back("D=" + std::to_string(D) + " vector missing");
      try {
        rels.emplace_back(D, 0, positive_rho_set(D), a);
      } catch (const std::exception&) {
        bad.push_back("D=" + std::to_string(D) + " vector does not vanish");
      }
    }
    if (rep.dim != 2 || relation_rank(rels, positive_rho_set(D)) != 2) bad.push_back("D=" + std::to_string(D) + " rank");
  };
  odd_set(5, {iv({1, 0, -3, 2}), iv({0, 2, -5, 3}), iv({3, -4, 1, 0}), iv({5, -6, 0, 1}), iv({1, -2, 2, -1})});

  std::vector<IntVector> d7;
  for (const auto& p : fixtures::printed_relations()) {
    if (p.D == 7 && p.delta == 0 && p.group == "fundamental") {
      d7.push_back(align(RelationVector::unchecked(7, 0, p.support, p.alpha), positive_rho_set(7)));
    }
  }
  // Six minimal-support relations plus the alternating binomial one.
  if (d7.size() != 7) bad.push_back("D=7 fixture has " + std::to_string(d7.size()) + " relations");
  if (reps.at(7).minimal_support.size() != 6) bad.push_back("D=7 minimal-support count");
  if (!has_alpha(reps.at(7).minimal_support, iv({37, 0, -150, 200, -135, 48}))) bad.push_back("D=7 (37,-150,200,-135,48)");
  odd_set(7, d7);

  std::string detail = "D=3..8 checked";
  for (const auto& b : bad) detail += "; " + b;
  return {bad.empty(), detail};
}

// 4
Result dimension_pattern(unsigned threads) {
  std::vector<size_t> dims(20);
  parallel_for(dims.size(), threads, [&](size_t i) { dims[i] = relation_space_dim(static_cast<int>(i) + 2); });
  size_t bad = 0;
  std::string list;
  for (int D = 4; D <= 21; ++D) {
    const size_t dim = dims[D - 2];
    if (dim != (D % 2 == 0 ? 1U : 2U)) ++bad;
    list += (list.empty() ? "" : ",") + std::to_string(dim);
  }
  return {bad == 0, "dims for D=4..21: " + list};
}

// 5
Result odd_binomial() {
  std::string failed;
  for (int D = 3; D <= 21; D += 2) {
    if (!check_odd_binomial(D)) failed += " " + std::to_string(D);
  }
  return {failed.empty(), failed.empty() ? "zero for every odd D in 3..21" : "nonzero at D=" + failed};
}

// 6
Result zero_sum(const std::map<int, RelationReport>& reps) {
  size_t checked = 0, bad = 0;
  for (const auto& [D, rep] : reps) {
    std::vector<RelationVector> all = rep.basis;
    all.insert(all.end(), rep.minimal_support.begin(), rep.minimal_support.end());
    if (rep.distinguished) all.push_back(*rep.distinguished);
    for (const auto& rel : all) {
      ++checked;
      if (rel.alpha_sum() != 0) ++bad;
    }
  }
  return {bad == 0 && checked > 0, std::to_string(checked) + " relations, " + std::to_string(bad) + " with nonzero sum"};
}

// 7
Result inheritance() {
  const auto rels = fixtures::printed_relations();
  const auto pairs = fixtures::inheritance_pairs();
  size_t bad = 0;
  for (const auto& [from, to] : pairs) {
    const auto& a = fixtures::by_label(rels, from);
    const auto& b = fixtures::by_label(rels, to);
    try {
      const RelationVector src(a.D, a.delta, a.support, a.alpha);
      const RelationVector dst(b.D, b.delta, b.support, b.alpha);
      if (!check_inheritance(src) || shifted(src) != dst) ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  return {bad == 0 && !pairs.empty(), std::to_string(pairs.size()) + " labeled pairs, " + std::to_string(bad) + " failures"};
}

// 8
Result constants_and_scaling() {
  size_t p4 = 0, p4_bad = 0, p5 = 0, p5_bad = 0;
  for (int D = 2; D <= 9; ++D) {
    for (int delta = 0; delta < D; ++delta) {
      for (int m = 1; m <= 3; ++m) {
        ++p4;
        if (phi({D, delta, -m}).poly.contains(SymbolKind::IntegrationConst)) ++p4_bad;
      }
      if (delta == 0 || D < 3) continue;
      ++p5;
      const SymPoly rhs = identify_constants(phi({D - delta, 0, -delta}).poly) * Rational(falling_factorial(D, delta));
      if (phi({D, delta, 0}).poly != rhs) ++p5_bad;
    }
  }
  return {p4_bad == 0 && p5_bad == 0,
          "constant-free " + std::to_string(p4 - p4_bad) + "/" + std::to_string(p4) + ", factorial scaling " +
              std::to_string(p5 - p5_bad) + "/" + std::to_string(p5)};
}

// 9
Result numeric_cross_validation(const std::map<int, RelationReport>& reps, unsigned threads) {
  NumericOptions opts;
  opts.seed = kSeed;
  opts.tolerance = kNumericTol;
  opts.threads = threads;
  double rel_max = 0, rates_max = 0, trans_max = 0;
  size_t rel_count = 0, skipped = 0;
  bool pass = true;
  opts.samples = 1000;
  for (int D = 3; D <= 9; ++D) {
    const RelationReport rep = D <= 8 ? reps.at(D) : find_relations(D, 0, positive_rho_set(D));
    std::vector<RelationVector> all = rep.basis;
    all.insert(all.end(), rep.minimal_support.begin(), rep.minimal_support.end());
    if (rep.distinguished) all.push_back(*rep.distinguished);
    for (const auto& rel : all) {
      const auto nr = check_relation_numeric(rel, opts);
      ++rel_count;
      skipped += nr.skipped;
      rel_max = std::max(rel_max, nr.max_rel_residual);
      pass = pass && nr.pass && nr.skipped < nr.samples;
    }
  }
  opts.samples = 500;
  for (unsigned D = 3; D <= 10; ++D) {
    const auto nr = check_relative_rates_random(D, opts);
    skipped += nr.skipped;
    rates_max = std::max(rates_max, nr.max_rel_residual);
    pass = pass && nr.pass && nr.skipped < nr.samples;
  }
  opts.samples = 100;
  for (unsigned D = 2; D <= 7; ++D) {
    const auto nr = check_translation_invariance_random(D, opts);
    skipped += nr.skipped;
    trans_max = std::max(trans_max, nr.max_rel_residual);
    pass = pass && nr.pass && nr.skipped < nr.samples;
  }
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu relations max %.2e; relative rates max %.2e; translation max %.2e; %zu samples skipped; tol %.0e",
                rel_count, rel_max, rates_max, trans_max, skipped, kNumericTol);
  return {pass, buf};
}

// 10
Result sequence_mining(unsigned threads, const std::optional<std::string>& bfile_q,
                       const std::optional<std::string>& bfile_norlund) {
  constexpr int kDMax = 24, kKMax = 8;
  MiningResult m;
  try {
    m = mine_Q_and_norlund(kKMax, kDMax, threads);
  } catch (const std::exception& e) {
    return {false, std::string("mining failed: ") + e.what()};
  }
  const bool t2_one = !m.t.empty() && m.t.front().t == RationalPolynomial({Rational(1)});
  bool odd_ok = !m.odd_vanishing.empty();
  for (const auto& v : m.odd_vanishing) odd_ok = odd_ok && v.defined_values_zero && v.polynomial_zero_at_k;
  std::string detail = std::string("decomposition exact for D<=") + std::to_string(kDMax) + ", t_2 " +
                       (t2_one ? "= 1" : "!= 1") + ", odd-k vanishing " + (odd_ok ? "holds" : "fails") +
                       ", stable vs D<=" + std::to_string(m.stability_d_max) + ": " + (m.stable ? "yes" : "no");
  bool pass = t2_one && odd_ok && m.stable;
  auto compare = [&](const std::optional<std::string>& path, const MinedSequence& s) {
    if (!path) {
      detail += ", " + s.name + " b-file not provided";
      return;
    }
    try {
      const auto al = best_alignment(s.first_index, s.values, read_bfile(*path));
      detail += ", " + s.name + " b-file " + (al.all_match() ? "matches" : "differs") + " at offset " +
                std::to_string(al.offset) + (al.absolute ? " up to sign" : "");
      pass = pass && al.all_match();
    } catch (const std::exception& e) {
      detail += ", " + s.name + " b-file unreadable: " + e.what();
      pass = false;
    }
  };
  compare(bfile_q, m.Q);
  compare(bfile_norlund, m.norlund);
  return {pass, detail};
}

// 11
Result gw_oracle() {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  size_t cases = 0, bad = 0;
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned j = 1; j <= 9; ++j) {
      for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> zs;
        for (unsigned i = 0; i < n; ++i) zs.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
        // Elementary symmetric functions by expanding prod (x - z).
        std::vector<Rational> e{Rational(1)};
        for (const Rational& z : zs) {
          std::vector<Rational> next(e.size() + 1);
          for (size_t i = 0; i < e.size(); ++i) {
            next[i] += e[i];
            next[i + 1] += e[i] * z;
          }
          e = std::move(next);
        }
        std::map<Symbol, Rational> values;
        for (unsigned i = 1; i <= n; ++i) values[r(i)] = e[i] / Rational(binomial(n, i));
        Rational direct;
        for (const Rational& z : zs) direct += pow(z, j);
        direct /= Rational(n);
        ++cases;
        if (evaluate(power_sum_mean(j, n), values) != direct) ++bad;
      }
    }
  }
  return {bad == 0, std::to_string(cases) + " multisets, " + std::to_string(bad) + " disagreements"};
}

std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (v && *v) return std::string(v);
  return std::nullopt;
}

}  // namespace

int main(int argc, char** argv) {
  std::optional<std::string> bfile_q = env("ROOTMEAN_BFILE_Q"), bfile_norlund = env("ROOTMEAN_BFILE_NORLUND");
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--bfile-q") {
      bfile_q = argv[i + 1];
    } else if (flag == "--bfile-norlund") {
      bfile_norlund = argv[i + 1];
    } else {
      std::fprintf(stderr, "unknown argument %s\n", argv[i]);
      return 2;
    }
  }
  const unsigned threads = default_thread_count();

  int failures = 0;
  auto run = [&](int id, const char* name, double budget, const std::function<Result()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    Result res;
    try {
      res = fn();
    } catch (const std::exception& e) {
      res = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = budget <= 0 || secs < budget;
    if (!in_budget) res.detail += "; over the " + std::to_string(static_cast<int>(budget)) + " s budget";
    const bool ok = res.pass && in_budget;
    if (!ok) ++failures;
    std::printf("%s %2d %s: %s (%.2f s)\n", ok ? "PASS" : "FAIL", id, name, res.detail.c_str(), secs);
    std::fflush(stdout);
  };

  std::map<int, RelationReport> reps;
  run(1, "mean-value tables", kBudgetPhi, phi_tables);
  run(2, "power-sum tables", kBudgetGw, gw_tables);
  run(3, "fundamental relations", kBudgetRelations, [&] {
    reps = fundamental_reports();
    return fundamental_relations(reps);
  });
  run(4, "relation-space dimensions", kBudgetDims, [&] { return dimension_pattern(threads); });
  run(5, "alternating binomial relation", 0, odd_binomial);
  run(6, "zero-sum coefficients", 0, [&] { return zero_sum(reps); });
  run(7, "derivative inheritance", 0, inheritance);
  run(8, "integration constants and factorial scaling", 0, constants_and_scaling);
  run(9, "numeric cross-validation", kBudgetNumeric, [&] { return numeric_cross_validation(reps, threads); });
  run(10, "sequence mining", kBudgetMining, [&] { return sequence_mining(threads, bfile_q, bfile_norlund); });
  run(11, "power-sum oracle", 0, gw_oracle);
  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
