#include "fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "rootmean/numeric.hpp"
#include "rootmean/sympoly_io.hpp"

namespace fixtures {

using nlohmann::json;
using namespace rootmean;

namespace {

json load(const std::string& name) {
  const std::string path = std::string(ROOTMEAN_FIXTURES) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  return json::parse(in);
}

SymPoly poly_of(const json& j, unsigned constant_base) {
  const std::string text = j.get<std::string>();
  return text.empty() ? SymPoly() : parse_sympoly(text, constant_base);
}

IntVector ints(const json& j) {
  IntVector v;
  for (const auto& x : j) v.emplace_back(x.get<long>());
  return v;
}

}  // namespace

std::vector<PhiRow> phi_rows() {
  std::vector<PhiRow> out;
  const json doc = load("phi_tables.json");
  for (const auto& t : doc["tables"]) {
    for (const auto& r : t["rows"]) {
      PhiRow row;
      row.D = t["D"];
      row.delta = t["delta"];
      row.rho = r["rho"];
      row.n = r["n"];
      row.printed = poly_of(r["poly"], static_cast<unsigned>(row.D));
      row.sum_positive = Rational(r["sum_positive"].get<long>());
      out.push_back(std::move(row));
    }
  }
  return out;
}

std::vector<GwRow> gw_rows() {
  std::vector<GwRow> out;
  const json doc = load("gw_tables.json");
  for (const auto& r : doc["rows"]) {
    GwRow row;
    row.collation = r["collation"];
    row.n = r["n"];
    row.j = r["j"];
    row.printed = poly_of(r["poly"], row.n);
    row.sum_positive = Rational(r["sum_positive"].get<long>());
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<AlphaColumn> alpha_columns() {
  std::vector<AlphaColumn> out;
  const json doc = load("alpha_tables.json");
  for (const auto& c : doc["columns"]) {
    out.push_back({c["D"], c["delta"], c["block"], c["column"], c["support"].get<std::vector<int>>(),
                   ints(c["alpha"])});
  }
  return out;
}

std::vector<PrintedRelation> printed_relations() {
  std::vector<PrintedRelation> out;
  const json doc = load("printed_relations.json");
  for (const auto& r : doc["relations"]) {
    PrintedRelation p;
    p.id = r["id"];
    if (!r["label"].is_null()) p.label = r["label"].get<std::string>();
    p.D = r["D"];
    p.delta = r["delta"];
    p.support = r["support"].get<std::vector<int>>();
    p.alpha = ints(r["alpha"]);
    p.group = r["group"];
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> inheritance_pairs() {
  std::vector<std::pair<std::string, std::string>> out;
  const json doc = load("printed_relations.json");
  for (const auto& p : doc["inheritance"]) out.emplace_back(p[0], p[1]);
  return out;
}

std::vector<std::string> inheritance_leaves() {
  return load("printed_relations.json")["leaves"].get<std::vector<std::string>>();
}

Ledger ledger() {
  const json j = load("discrepancies.json");
  Ledger l;
  l.version = j["version"];
  for (const auto& e : j["entries"]) {
    const std::string kind = e["kind"];
    if (kind == "term") {
      TermFix f;
      f.id = e["id"];
      f.table = e["table"];
      unsigned base = 0;
      if (f.table == "phi") {
        f.D = e["D"];
        f.delta = e["delta"];
        f.rho = e["rho"];
        base = static_cast<unsigned>(f.D);
      } else {
        f.collation = e["collation"];
        f.n = e["n"];
        f.j = e["j"];
        base = f.n;
      }
      f.remove = poly_of(e["remove"], base);
      f.add = poly_of(e["add"], base);
      l.terms.push_back(std::move(f));
    } else if (kind == "alpha") {
      AlphaFix f;
      f.id = e["id"];
      f.D = e["D"];
      f.delta = e["delta"];
      f.block = e["block"];
      f.column = e["column"];
      f.support = e["support"].get<std::vector<int>>();
      f.printed = ints(e["printed"]);
      if (!e["corrected"].is_null()) f.corrected = ints(e["corrected"]);
      l.alpha.push_back(std::move(f));
    } else if (kind == "support") {
      l.support.push_back({e["id"], e["label"], e["printed_support"].get<std::vector<int>>(),
                           e["corrected_support"].get<std::vector<int>>()});
    } else {
      throw std::runtime_error("unknown ledger entry kind " + kind);
    }
  }
  return l;
}

SymPoly corrected(const PhiRow& row, const Ledger& l, std::vector<std::string>* applied) {
  SymPoly p = row.printed;
  for (const TermFix& f : l.terms) {
    if (f.table != "phi" || f.D != row.D || f.delta != row.delta || f.rho != row.rho) continue;
    p = p - f.remove + f.add;
    if (applied) applied->push_back(f.id);
  }
  return p;
}

SymPoly corrected(const GwRow& row, const Ledger& l, std::vector<std::string>* applied) {
  SymPoly p = row.printed;
  for (const TermFix& f : l.terms) {
    if (f.table != "gw" || f.collation != row.collation || f.n != row.n || f.j != row.j) continue;
    p = p - f.remove + f.add;
    if (applied) applied->push_back(f.id);
  }
  return p;
}

const PrintedRelation& by_label(const std::vector<PrintedRelation>& rels, const std::string& label) {
  auto it = std::find_if(rels.begin(), rels.end(), [&](const PrintedRelation& r) { return r.label == label; });
  if (it == rels.end()) throw std::runtime_error("no printed relation labeled " + label);
  return *it;
}

double phi_gap(const PhiKey& key, const SymPoly& poly, unsigned samples, std::uint64_t seed) {
  const unsigned constants = static_cast<unsigned>(-std::min({0, key.delta, key.rho}));
  double worst = 0.0;
  for (unsigned s = 0; s < samples; ++s) {
    auto rng = sample_rng(seed, s);
    const auto params = sample_params(static_cast<unsigned>(key.D), constants, rng);
    std::map<Symbol, Complex> values;
    for (const Symbol& sym : poly.symbols()) values[sym] = params.at(sym.weight - 1);
    const Complex symbolic = evaluate(poly, values);
    const auto g = derived_coeffs(key.D, key.delta, params);
    const auto fam = find_roots(NumPoly::normalized(derived_coeffs(key.D, key.rho, params)));
    double scale = 0.0;
    for (Complex r : fam.roots) scale += horner_scale(g, r);
    scale /= static_cast<double>(fam.roots.size());
    if (scale > 0.0) worst = std::max(worst, std::abs(symbolic - mean_over_family(g, fam)) / scale);
  }
  return worst;
}

double gw_gap(unsigned n, unsigned j, const SymPoly& poly, unsigned samples, std::uint64_t seed) {
  double worst = 0.0;
  for (unsigned s = 0; s < samples; ++s) {
    auto rng = sample_rng(seed, s);
    const auto roots = sample_roots(n, rng);
    const auto params = quasi_binomial_params(roots);
    std::map<Symbol, Complex> values;
    for (const Symbol& sym : poly.symbols()) values[sym] = params.at(sym.order - 1);
    Complex direct = 0.0;
    double scale = 0.0;
    for (Complex z : roots) {
      direct += std::pow(z, static_cast<int>(j));
      scale += std::pow(std::abs(z), static_cast<double>(j));
    }
    direct /= static_cast<double>(n);
    scale /= static_cast<double>(n);
    worst = std::max(worst, std::abs(evaluate(poly, values) - direct) / scale);
  }
  return worst;
}

}  // namespace fixtures
