#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootmean/linalg.hpp"
#include "rootmean/phi.hpp"
#include "rootmean/sympoly.hpp"

namespace fixtures {

using rootmean::IntVector;
using rootmean::Rational;
using rootmean::SymPoly;

struct PhiRow {
  int D = 0;
  int delta = 0;
  int rho = 0;
  int n = 0;
  SymPoly printed;
  Rational sum_positive;
};

struct GwRow {
  std::string collation;
  unsigned n = 0;
  unsigned j = 0;
  SymPoly printed;
  Rational sum_positive;
};

struct AlphaColumn {
  int D = 0;
  int delta = 0;
  int block = 0;
  int column = 0;
  std::vector<int> support;
  IntVector alpha;
};

struct PrintedRelation {
  std::string id;
  std::optional<std::string> label;
  int D = 0;
  int delta = 0;
  std::vector<int> support;
  IntVector alpha;
  std::string group;
};

/// A ledger entry that replaces printed terms of a table row.
struct TermFix {
  std::string id;
  std::string table;  // "phi" or "gw"
  std::string collation;
  int D = 0, delta = 0, rho = 0;
  unsigned n = 0, j = 0;
  SymPoly remove;
  SymPoly add;
};

/// A ledger entry for a printed relation-table column; no correction when
/// the support carries no relation at all.
struct AlphaFix {
  std::string id;
  int D = 0, delta = 0, block = 0, column = 0;
  std::vector<int> support;
  IntVector printed;
  std::optional<IntVector> corrected;
};

struct SupportFix {
  std::string id;
  std::string label;
  std::vector<int> printed_support;
  std::vector<int> corrected_support;
};

struct Ledger {
  int version = 0;
  std::vector<TermFix> terms;
  std::vector<AlphaFix> alpha;
  std::vector<SupportFix> support;
};

std::vector<PhiRow> phi_rows();
std::vector<GwRow> gw_rows();
std::vector<AlphaColumn> alpha_columns();
std::vector<PrintedRelation> printed_relations();
std::vector<std::pair<std::string, std::string>> inheritance_pairs();
std::vector<std::string> inheritance_leaves();
Ledger ledger();

/// Printed polynomial with the ledger's term fixes for that row applied;
/// `applied` receives the ids of the fixes used.
SymPoly corrected(const PhiRow& row, const Ledger& l, std::vector<std::string>* applied = nullptr);
SymPoly corrected(const GwRow& row, const Ledger& l, std::vector<std::string>* applied = nullptr);

const PrintedRelation& by_label(const std::vector<PrintedRelation>& rels, const std::string& label);

/// Largest relative gap between `poly` at random parameters and the direct
/// numeric mean of f^(delta) over the roots of f^(rho).
double phi_gap(const rootmean::PhiKey& key, const SymPoly& poly, unsigned samples, std::uint64_t seed);

/// Largest relative gap between `poly` evaluated at the normalized elementary
/// symmetric values of n random roots and their mean j-th power.
double gw_gap(unsigned n, unsigned j, const SymPoly& poly, unsigned samples, std::uint64_t seed);

}  // namespace fixtures
