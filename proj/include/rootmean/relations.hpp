#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootmean/linalg.hpp"
#include "rootmean/phi.hpp"

namespace rootmean {

/// Integer combination sum_rho alpha_rho phi(D, delta, rho) that vanishes identically.
/// Construction normalizes alpha (primitive, first nonzero entry positive) and
/// verifies the vanishing exactly; a non-vanishing combination throws.
class RelationVector {
 public:
  RelationVector(int D, int delta, std::vector<int> support, IntVector alpha);

  /// Builds without the vanishing check, for reporting printed vectors that may be wrong.
  static RelationVector unchecked(int D, int delta, std::vector<int> support, IntVector alpha);

  int D() const { return D_; }
  int delta() const { return delta_; }
  const std::vector<int>& support() const { return support_; }
  const IntVector& alpha() const { return alpha_; }
  /// Support entries whose coefficient is nonzero.
  std::vector<int> nonzero_support() const;
  BigInt alpha_sum() const;
  /// "D=4 delta=0 rho=[1,2,3] alpha=[5,-6,1]"
  std::string str() const;

  friend bool operator==(const RelationVector&, const RelationVector&) = default;

 private:
  RelationVector() = default;
  int D_ = 0;
  int delta_ = 0;
  std::vector<int> support_;
  IntVector alpha_;
};

/// sum alpha_rho phi((D, delta, rho)) over the given support.
SymPoly relation_sum(int D, int delta, const std::vector<int>& support, const IntVector& alpha);

/// Columns are phi keys, rows the union of their monomials in print order.
struct PhiMatrix {
  std::vector<Monomial> rows;
  std::vector<PhiKey> cols;
  RationalMatrix entries;
};

PhiMatrix build_phi_matrix(const std::vector<PhiKey>& keys);

struct RelationOptions {
  bool minimal_support = true;
  /// Subset enumeration is skipped above this many columns.
  unsigned max_minimal_columns = 16;
  unsigned threads = 1;
};

struct RelationReport {
  int D = 0;
  int delta = 0;
  std::vector<int> rho_set;
  size_t dim = 0;
  /// Echelon basis, aligned to rho_set.
  std::vector<RelationVector> basis;
  /// Every relation whose nonzero support is minimal, aligned to rho_set, sorted
  /// by support then alpha.
  std::vector<RelationVector> minimal_support;
  bool minimal_support_complete = false;
  /// All basis vectors have alpha summing to zero.
  bool zero_sum_ok = true;
  /// For odd D, delta = 0 and rho_set containing 1..D-1: the alternating binomial relation.
  std::optional<RelationVector> distinguished;
};

RelationReport find_relations(int D, int delta, const std::vector<int>& rho_set,
                              const RelationOptions& options = {});

/// rho in [-(D+2), D-1].
std::vector<int> default_rho_window(int D);

/// rho in [1, D-1].
std::vector<int> positive_rho_set(int D);

/// Nullspace dimension of phi(D, 0, rho) for rho in 1..D-1.
size_t relation_space_dim(int D);

/// Whether sum_{0<rho<D} (-1)^rho C(D, rho) phi(D, 0, rho) is the zero polynomial.
bool check_odd_binomial(int D);

/// The relation shifted to (D+1, delta+1, support+1).
RelationVector shifted(const RelationVector& rel);

/// Whether the shifted combination also vanishes.
bool check_inheritance(const RelationVector& rel);

/// Exact rank of the vectors after aligning them to rho_set.
size_t relation_rank(const std::vector<RelationVector>& rels, const std::vector<int>& rho_set);

/// Realigns a relation onto a larger rho set (zeros elsewhere).
IntVector align(const RelationVector& rel, const std::vector<int>& rho_set);

/// The relation supported on exactly these rho values, when the relation
/// space there is one-dimensional; used to suggest corrections for printed
/// vectors that fail verification.
std::optional<RelationVector> relation_on_support(int D, int delta, const std::vector<int>& support);

}  // namespace rootmean
