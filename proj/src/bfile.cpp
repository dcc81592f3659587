#include "rootmean/bfile.hpp"

#include <fstream>
#include <cstdlib>
#include <sstream>
#include <tuple>

#include "rootmean/error.hpp"

namespace rootmean {

std::map<long, BigInt> read_bfile(std::istream& in) {
  std::map<long, BigInt> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long index = 0;
    std::string value;
    if (!(ls >> index)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw PreconditionError("b-file line " + std::to_string(lineno) + ": expected an index");
    }
    if (!(ls >> value)) throw PreconditionError("b-file line " + std::to_string(lineno) + ": missing value");
    BigInt v;
    if (v.set_str(value, 10) != 0) {
      throw PreconditionError("b-file line " + std::to_string(lineno) + ": bad value '" + value + "'");
    }
    out[index] = v;
  }
  return out;
}

std::map<long, BigInt> read_bfile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open b-file " + path);
  return read_bfile(in);
}

BfileAlignment best_alignment(int first_index, const std::vector<BigInt>& mined,
                              const std::map<long, BigInt>& bfile, long max_shift) {
  BfileAlignment best;
  bool have = false;
  for (long shift = -max_shift; shift <= max_shift; ++shift) {
    for (bool absolute : {false, true}) {
      BfileAlignment a;
      a.offset = shift;
      a.absolute = absolute;
      for (size_t i = 0; i < mined.size(); ++i) {
        auto it = bfile.find(first_index + static_cast<long>(i) + shift);
        if (it == bfile.end()) continue;
        ++a.compared;
        const bool eq = absolute ? abs(it->second) == abs(mined[i]) : it->second == mined[i];
        if (eq) ++a.matched;
      }
      // Prefer more matches, then fully consistent alignments, then exact sign.
      auto key = [](const BfileAlignment& x) {
        return std::make_tuple(x.matched, x.all_match(), !x.absolute, -std::labs(x.offset));
      };
      if (!have || key(a) > key(best)) {
        best = a;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace rootmean
