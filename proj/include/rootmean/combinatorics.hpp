#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rootmean/rational.hpp"

namespace rootmean {

BigInt factorial(unsigned n);

/// C(n, k); zero when k > n.
BigInt binomial(unsigned n, unsigned k);

/// card! / prod(parts!). Throws PreconditionError unless sum(parts) == card.
BigInt multinomial(unsigned card, std::span<const unsigned> parts);

/// Falling factorial n (n-1) ... (n-k+1).
BigInt falling_factorial(unsigned n, unsigned k);

/// Integer partition stored as (part, multiplicity) pairs, parts strictly
/// decreasing, every multiplicity at least one.
class Partition {
 public:
  Partition() = default;
  /// Builds from (part, multiplicity) pairs in any order; zero multiplicities are dropped.
  explicit Partition(std::vector<std::pair<unsigned, unsigned>> parts);
  /// Builds from a list of parts with repetition, e.g. {2, 1, 1}.
  static Partition from_parts(std::span<const unsigned> parts);

  const std::vector<std::pair<unsigned, unsigned>>& parts() const { return parts_; }
  /// Weighted size sum(i * k_i).
  unsigned weight() const { return weight_; }
  /// Number of parts sum(k_i).
  unsigned card() const { return card_; }
  unsigned largest() const { return parts_.empty() ? 0 : parts_.front().first; }
  unsigned multiplicity(unsigned part) const;
  bool empty() const { return parts_.empty(); }
  std::string str() const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::pair<unsigned, unsigned>> parts_;
  unsigned weight_ = 0;
  unsigned card_ = 0;
};

/// All partitions of j. Order: largest part descending, ties broken by
/// comparing the descending part lists lexicographically (larger first).
std::vector<Partition> partitions(unsigned j);

/// Same order as partitions(j), restricted to parts no larger than max_part.
std::vector<Partition> partitions_bounded(unsigned j, unsigned max_part);

}  // namespace rootmean
