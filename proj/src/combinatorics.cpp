#include "rootmean/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "rootmean/error.hpp"

namespace rootmean {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt multinomial(unsigned card, std::span<const unsigned> parts) {
  unsigned long sum = std::accumulate(parts.begin(), parts.end(), 0UL);
  if (sum != card) {
    throw PreconditionError("multinomial: parts sum to " + std::to_string(sum) +
                            ", expected " + std::to_string(card));
  }
  BigInt r = factorial(card);
  for (unsigned p : parts) r /= factorial(p);
  return r;
}

BigInt falling_factorial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r;
}

Partition::Partition(std::vector<std::pair<unsigned, unsigned>> parts) {
  std::map<unsigned, unsigned, std::greater<>> merged;
  for (auto [part, mult] : parts) {
    if (part == 0) throw PreconditionError("partition part must be positive");
    if (mult > 0) merged[part] += mult;
  }
  for (auto [part, mult] : merged) {
    parts_.emplace_back(part, mult);
    weight_ += part * mult;
    card_ += mult;
  }
}

Partition Partition::from_parts(std::span<const unsigned> parts) {
  std::vector<std::pair<unsigned, unsigned>> pairs;
  pairs.reserve(parts.size());
  for (unsigned p : parts) pairs.emplace_back(p, 1);
  return Partition(std::move(pairs));
}

unsigned Partition::multiplicity(unsigned part) const {
  for (auto [p, m] : parts_) {
    if (p == part) return m;
  }
  return 0;
}

std::string Partition::str() const {
  std::ostringstream os;
  os << '{';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i].first << ':' << parts_[i].second;
  }
  os << '}';
  return os.str();
}

namespace {

void generate(unsigned remaining, unsigned max_part, std::vector<unsigned>& prefix,
              std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition::from_parts(prefix));
    return;
  }
  for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
    prefix.push_back(p);
    generate(remaining - p, p, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(unsigned j) { return partitions_bounded(j, j); }

std::vector<Partition> partitions_bounded(unsigned j, unsigned max_part) {
  std::vector<Partition> out;
  std::vector<unsigned> prefix;
  if (j == 0) {
    out.emplace_back();
    return out;
  }
  if (max_part == 0) return out;
  generate(j, max_part, prefix, out);
  return out;
}

}  // namespace rootmean
