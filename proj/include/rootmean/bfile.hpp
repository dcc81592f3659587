#pragma once

#include <istream>
#include <map>
#include <string>
#include <vector>

#include "rootmean/rational.hpp"

namespace rootmean {

/// OEIS b-file: one "index value" pair per line; '#' comments and blank lines ignored.
std::map<long, BigInt> read_bfile(std::istream& in);
std::map<long, BigInt> read_bfile(const std::string& path);

struct BfileAlignment {
  long offset = 0;  // mined index k pairs with b-file index k + offset
  size_t compared = 0;
  size_t matched = 0;
  bool absolute = false;  // matched up to sign
  bool all_match() const { return compared > 0 && matched == compared; }
};

/// Offset in [-max_shift, max_shift] maximizing exact matches (then the
/// absolute-value matches) between mined values starting at first_index and the b-file.
BfileAlignment best_alignment(int first_index, const std::vector<BigInt>& mined,
                              const std::map<long, BigInt>& bfile, long max_shift = 5);

}  // namespace rootmean
