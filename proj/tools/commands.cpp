#include <algorithm>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "rootmean/bfile.hpp"
#include "rootmean/combinatorics.hpp"
#include "rootmean/error.hpp"
#include "rootmean/gw.hpp"
#include "rootmean/numeric.hpp"
#include "rootmean/phi.hpp"
#include "rootmean/relations.hpp"
#include "rootmean/seqmine.hpp"
#include "rootmean/sympoly_io.hpp"

namespace cli {

using nlohmann::json;
using namespace rootmean;

Interval parse_interval(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw PreconditionError("bad range '" + text + "'; expected a..b");
    return v;
  };
  const auto dots = text.find("..");
  Interval iv;
  if (dots == std::string::npos) {
    iv.lo = iv.hi = to_int(text);
  } else {
    iv.lo = to_int(text.substr(0, dots));
    iv.hi = to_int(text.substr(dots + 2));
  }
  if (iv.lo > iv.hi) throw PreconditionError("empty range '" + text + "'");
  return iv;
}

void check_degree(const RunConfig& cfg, long degree, const char* what) {
  if (degree > kDegreeCap && !cfg.unsafe_degree) {
    throw PreconditionError(std::string(what) + " " + std::to_string(degree) + " exceeds the cap of " +
                            std::to_string(kDegreeCap) + "; pass --unsafe-degree to override");
  }
}

namespace {

std::string poly_text(const RunConfig& cfg, const SymPoly& p) {
  return cfg.format == Format::Pretty ? to_pretty(p) : to_text(p);
}

json int_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json ints_json(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

template <typename T>
std::string join_str(const std::vector<T>& v, const char* sep) {
  std::vector<std::string> parts;
  for (const auto& x : v) {
    std::ostringstream os;
    os << x;
    parts.push_back(os.str());
  }
  return join(parts, sep);
}

json relation_json(const RelationVector& r) {
  return {{"D", r.D()}, {"delta", r.delta()}, {"rho", r.support()}, {"alpha", ints_json(r.alpha())}};
}

/// "5 phi[4,0,1] - 6 phi[4,0,2] + phi[4,0,3] = 0"
std::string relation_pretty(const RelationVector& r) {
  std::string s;
  bool first = true;
  for (size_t i = 0; i < r.support().size(); ++i) {
    const BigInt& a = r.alpha()[i];
    if (a == 0) continue;
    const BigInt mag = abs(a);
    s += first ? (a < 0 ? "-" : "") : (a < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) s += mag.get_str() + " ";
    s += "phi[" + std::to_string(r.D()) + "," + std::to_string(r.delta()) + "," + std::to_string(r.support()[i]) + "]";
  }
  return s + " = 0";
}

std::vector<int> range_vector(const Interval& iv) {
  std::vector<int> v;
  for (int x = iv.lo; x <= iv.hi; ++x) v.push_back(x);
  return v;
}

Outcome finish(const RunConfig& cfg, const json& doc, const std::vector<Table>& tables,
               const std::vector<std::string>& footer, int code) {
  Outcome o;
  o.exit_code = code;
  o.text = cfg.format == Format::Json ? render_json(cfg, doc) : render_tables(cfg, tables, footer);
  return o;
}

}  // namespace

Outcome cmd_gw(const RunConfig& cfg, const GwArgs& a) {
  if (a.n < 1) throw PreconditionError("--n must be at least 1");
  if (a.max_deg < 1) throw PreconditionError("--max-deg must be at least 1");
  check_degree(cfg, a.n, "family size");
  check_degree(cfg, a.max_deg, "power-sum degree");
  const auto n = static_cast<unsigned>(a.n);
  Table t{"normalized power-sum means, family size " + std::to_string(a.n), {"j", "mean power sum", "sum of positive"}, {}};
  json rows = json::array();
  for (unsigned j = 1; j <= static_cast<unsigned>(a.max_deg); ++j) {
    const SymPoly& p = power_sum_mean(j, n);
    const std::string sum = p.sum_positive().str();
    t.rows.push_back({std::to_string(j), poly_text(cfg, p), sum});
    rows.push_back({{"j", j}, {"poly", to_json(p)}, {"text", to_text(p)}, {"sum_positive", sum}});
  }
  json doc{{"command", "gw"}, {"n", a.n}, {"max_deg", a.max_deg}, {"rows", rows}};
  return finish(cfg, doc, {t}, {}, kExitOk);
}

Outcome cmd_phi(const RunConfig& cfg, const PhiArgs& a) {
  if (a.D < 1) throw PreconditionError("--D must be at least 1");
  check_degree(cfg, a.D, "degree");
  Interval iv;
  if (a.rho) {
    iv = parse_interval(*a.rho);
  } else {
    const auto w = default_rho_window(a.D);
    iv = {w.front(), w.back()};
  }
  if (iv.hi > a.D - 1) throw PreconditionError("rho must be at most D-1");
  const auto rows = phi_table(a.D, a.delta, iv.lo, iv.hi, cfg.threads);
  Table t{"mean values, degree " + std::to_string(a.D) + ", derivative order " + std::to_string(a.delta),
          {"n", "rho", "mean value", "sum of positive"}, {}};
  json out = json::array();
  for (const PhiRow& r : rows) {
    const PhiKey& k = r.result.key;
    t.rows.push_back({std::to_string(k.family_size()), std::to_string(k.rho), poly_text(cfg, r.result.poly),
                      r.sum_positive.str()});
    out.push_back({{"n", k.family_size()},
                   {"rho", k.rho},
                   {"poly", to_json(r.result.poly)},
                   {"text", to_text(r.result.poly)},
                   {"sum_positive", r.sum_positive.str()},
                   {"constant_function", r.result.constant_function}});
  }
  json doc{{"command", "phi"}, {"D", a.D}, {"delta", a.delta}, {"rho_lo", iv.lo}, {"rho_hi", iv.hi}, {"rows", out}};
  return finish(cfg, doc, {t}, {}, kExitOk);
}

Outcome cmd_relations(const RunConfig& cfg, const RelationsArgs& a) {
  if (a.D < 1) throw PreconditionError("--D must be at least 1");
  check_degree(cfg, a.D, "degree");
  std::vector<int> rho_set;
  if (a.rho) {
    rho_set = range_vector(parse_interval(*a.rho));
  } else {
    rho_set = a.delta == 0 ? positive_rho_set(a.D) : range_vector({0, a.D - 1});
  }
  if (!rho_set.empty() && rho_set.back() > a.D - 1) throw PreconditionError("rho must be at most D-1");
  RelationOptions opts;
  opts.minimal_support = a.minimal_support;
  opts.threads = cfg.threads;
  const RelationReport rep = rho_set.empty() ? RelationReport{a.D, a.delta} : find_relations(a.D, a.delta, rho_set, opts);

  json basis = json::array(), minimal = json::array();
  Table tb{"basis (dimension " + std::to_string(rep.dim) + ")", {"#", "rho", "alpha", "relation"}, {}};
  for (size_t i = 0; i < rep.basis.size(); ++i) {
    const auto& r = rep.basis[i];
    basis.push_back(relation_json(r));
    tb.rows.push_back({std::to_string(i + 1), join_str(r.support(), ";"), join_str(r.alpha(), ";"), relation_pretty(r)});
  }
  Table tm{"minimal-support relations", {"#", "support", "alpha", "relation"}, {}};
  for (size_t i = 0; i < rep.minimal_support.size(); ++i) {
    const auto& r = rep.minimal_support[i];
    minimal.push_back(relation_json(r));
    std::vector<BigInt> nz;
    for (const auto& x : r.alpha()) {
      if (x != 0) nz.push_back(x);
    }
    tm.rows.push_back({std::to_string(i + 1), join_str(r.nonzero_support(), ";"), join_str(nz, ";"), relation_pretty(r)});
  }

  // Optional user-supplied relations, checked exactly.
  json checked = json::array();
  Table tc{"checked relations", {"id", "rho", "alpha", "verdict"}, {}};
  bool all_checked = true;
  if (a.check_file) {
    std::ifstream in(*a.check_file);
    if (!in) throw PreconditionError("cannot open " + *a.check_file);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::exception& e) {
      throw PreconditionError(*a.check_file + ": " + e.what());
    }
    for (const json& r : doc.value("relations", json::array())) {
      const int D = r.value("D", a.D), delta = r.value("delta", a.delta);
      if (D != a.D || delta != a.delta) continue;
      const auto support = r.at("support").get<std::vector<int>>();
      IntVector alpha;
      for (const json& x : r.at("alpha")) alpha.emplace_back(x.is_string() ? x.get<std::string>() : std::to_string(x.get<long>()));
      if (alpha.size() != support.size()) throw PreconditionError("checked relation has mismatched support and alpha");
      const bool ok = relation_sum(D, delta, support, alpha).is_zero();
      all_checked = all_checked && ok;
      const std::string id = r.value("id", std::string());
      checked.push_back({{"id", id}, {"rho", support}, {"alpha", ints_json(alpha)}, {"holds", ok}});
      tc.rows.push_back({id, join_str(support, ";"), join_str(alpha, ";"), ok ? "holds" : "FAILS"});
    }
  }

  json doc{{"D", rep.D},
           {"delta", rep.delta},
           {"rho", rho_set},
           {"dim", rep.dim},
           {"basis", basis},
           {"minimal_support", minimal},
           {"minimal_support_complete", rep.minimal_support_complete},
           {"zero_sum_ok", rep.zero_sum_ok}};
  if (rep.distinguished) doc["distinguished"] = relation_json(*rep.distinguished);
  if (a.check_file) doc["checked"] = checked;

  std::vector<Table> tables{tb};
  if (a.minimal_support) tables.push_back(tm);
  if (a.check_file) tables.push_back(tc);
  std::vector<std::string> footer{"D=" + std::to_string(rep.D) + " delta=" + std::to_string(rep.delta) +
                                  " rho=" + (rho_set.empty() ? std::string("none") : join_str(rho_set, ",")),
                                  std::string("zero sum: ") + (rep.zero_sum_ok ? "yes" : "no")};
  if (a.minimal_support && !rep.minimal_support_complete && rep.dim > 0) {
    footer.push_back("minimal-support enumeration skipped (too many columns)");
  }
  if (rep.distinguished) footer.push_back("alternating binomial: " + relation_pretty(*rep.distinguished));
  return finish(cfg, doc, tables, footer, all_checked ? kExitOk : kExitVerification);
}

namespace {

struct Check {
  std::string label;
  std::string detail;
  bool pass = true;
};

std::vector<Check> verify_odd_binomial(int max_degree) {
  std::vector<Check> out;
  for (int D = 3; D <= max_degree; D += 2) {
    const bool ok = check_odd_binomial(D);
    out.push_back({"D=" + std::to_string(D), ok ? "vanishes" : "does not vanish", ok});
  }
  return out;
}

std::vector<Check> verify_dimension(int max_degree, std::vector<size_t>& dims) {
  std::vector<Check> out;
  for (int D = 2; D <= max_degree; ++D) {
    const size_t dim = relation_space_dim(D);
    const size_t expected = D == 2 ? 0 : (D == 3 || D % 2 == 0) ? 1 : 2;
    dims.push_back(dim);
    out.push_back({"D=" + std::to_string(D), "dim " + std::to_string(dim) + ", expected " + std::to_string(expected),
                   dim == expected});
  }
  return out;
}

std::vector<Check> verify_inheritance(int max_degree, unsigned threads) {
  std::vector<Check> out;
  RelationOptions opts;
  opts.minimal_support = false;
  opts.threads = threads;
  for (int D = 2; D < max_degree; ++D) {
    for (int delta = 0; delta <= D - 2; ++delta) {
      const auto rep = find_relations(D, delta, range_vector({0, D - 1}), opts);
      size_t held = 0;
      for (const auto& r : rep.basis) held += check_inheritance(r) ? 1 : 0;
      out.push_back({"D=" + std::to_string(D) + " delta=" + std::to_string(delta),
                     std::to_string(held) + "/" + std::to_string(rep.basis.size()) + " basis relations inherited",
                     held == rep.basis.size()});
    }
  }
  return out;
}

std::vector<Check> verify_prop4(int max_degree) {
  std::vector<Check> out;
  for (int D = 1; D <= max_degree; ++D) {
    size_t bad = 0, total = 0;
    for (int delta = 0; delta < D; ++delta) {
      for (int m = 1; m <= 3; ++m) {
        ++total;
        if (phi({D, delta, -m}).poly.contains(SymbolKind::IntegrationConst)) ++bad;
      }
    }
    out.push_back({"D=" + std::to_string(D),
                   std::to_string(total - bad) + "/" + std::to_string(total) + " free of integration constants",
                   bad == 0});
  }
  return out;
}

std::vector<Check> verify_prop5(int max_degree) {
  std::vector<Check> out;
  for (int D = 2; D <= max_degree; ++D) {
    size_t good = 0, total = 0;
    for (int delta = 1; delta < D; ++delta) {
      ++total;
      const SymPoly rhs =
          identify_constants(phi({D - delta, 0, -delta}).poly) * Rational(falling_factorial(D, delta));
      if (phi({D, delta, 0}).poly == rhs) ++good;
    }
    out.push_back({"D=" + std::to_string(D), std::to_string(good) + "/" + std::to_string(total) + " orders agree",
                   good == total});
  }
  return out;
}

}  // namespace

Outcome cmd_verify(const RunConfig& cfg, const VerifyArgs& a) {
  check_degree(cfg, a.max_degree, "max degree");
  if (a.max_degree < 2) throw PreconditionError("--max-degree must be at least 2");
  std::vector<Check> checks;
  std::vector<size_t> dims;
  if (a.conjecture == "odd-binomial") {
    checks = verify_odd_binomial(a.max_degree);
  } else if (a.conjecture == "dimension") {
    checks = verify_dimension(a.max_degree, dims);
  } else if (a.conjecture == "inheritance") {
    checks = verify_inheritance(a.max_degree, cfg.threads);
  } else if (a.conjecture == "prop4") {
    checks = verify_prop4(a.max_degree);
  } else if (a.conjecture == "prop5") {
    checks = verify_prop5(a.max_degree);
  } else {
    throw PreconditionError("unknown conjecture '" + a.conjecture + "'");
  }
  const bool pass = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  Table t{a.conjecture + " up to degree " + std::to_string(a.max_degree), {"case", "result", "verdict"}, {}};
  json results = json::array();
  for (const Check& c : checks) {
    t.rows.push_back({c.label, c.detail, c.pass ? "PASS" : "FAIL"});
    results.push_back({{"case", c.label}, {"detail", c.detail}, {"pass", c.pass}});
  }
  json doc{{"conjecture", a.conjecture}, {"max_degree", a.max_degree}, {"results", results}, {"pass", pass}};
  std::vector<std::string> footer;
  if (!dims.empty()) {
    doc["dims"] = dims;
    footer.push_back("dims from D=2: " + join_str(dims, ","));
  }
  footer.push_back(std::string("overall: ") + (pass ? "PASS" : "FAIL"));
  return finish(cfg, doc, {t}, footer, pass ? kExitOk : kExitVerification);
}

namespace {

/// "D,delta:rho1,rho2,...:alpha1,alpha2,..."
RelationVector parse_relation_spec(const std::string& spec) {
  auto fail = [&] { return PreconditionError("bad relation '" + spec + "'; expected D,delta:rho,...:alpha,..."); };
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw fail();
  auto ints = [&](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream is(s);
    for (std::string x; std::getline(is, x, ',');) out.push_back(x);
    return out;
  };
  try {
    const auto head = ints(parts[0]);
    if (head.size() != 2) throw fail();
    const int D = std::stoi(head[0]), delta = std::stoi(head[1]);
    std::vector<int> support;
    for (const auto& x : ints(parts[1])) support.push_back(std::stoi(x));
    IntVector alpha;
    for (const auto& x : ints(parts[2])) {
      BigInt v;
      if (v.set_str(x, 10) != 0) throw fail();
      alpha.push_back(v);
    }
    if (alpha.size() != support.size() || support.empty()) throw fail();
    PhiKey probe{D, delta, *std::min_element(support.begin(), support.end())};
    validate(probe);
    if (*std::max_element(support.begin(), support.end()) > D - 1) throw fail();
    return RelationVector::unchecked(D, delta, support, alpha);
  } catch (const std::logic_error&) {
    throw fail();
  }
}

}  // namespace

Outcome cmd_numeric(const RunConfig& cfg, const NumericArgs& a) {
  NumericOptions opts;
  opts.samples = a.samples;
  opts.seed = cfg.seed;
  opts.tolerance = a.tol;
  opts.threads = cfg.threads;
  if (!(a.tol > 0.0)) throw PreconditionError("--tol must be positive");

  std::vector<NumericReport> reports;
  std::string mode;
  if (a.conjecture) {
    check_degree(cfg, a.max_degree, "max degree");
    if (*a.conjecture == "relative-rates") {
      mode = "relative-rates";
      for (int D = 3; D <= a.max_degree; ++D) reports.push_back(check_relative_rates_random(D, opts));
    } else if (*a.conjecture == "translation") {
      mode = "translation";
      for (int D = 2; D <= a.max_degree; ++D) reports.push_back(check_translation_invariance_random(D, opts));
    } else {
      throw PreconditionError("unknown numeric conjecture '" + *a.conjecture + "'");
    }
  } else if (a.relation && *a.relation != "auto") {
    mode = "relation";
    const RelationVector rel = parse_relation_spec(*a.relation);
    check_degree(cfg, rel.D(), "degree");
    reports.push_back(check_relation_numeric(rel, opts));
  } else {
    mode = "auto";
    if (a.D < 2) throw PreconditionError("--D must be at least 2");
    check_degree(cfg, a.D, "degree");
    RelationOptions ropts;
    ropts.threads = cfg.threads;
    const auto rho = a.delta == 0 ? positive_rho_set(a.D) : range_vector({0, a.D - 1});
    const auto rep = find_relations(a.D, a.delta, rho, ropts);
    const auto& rels = rep.minimal_support.empty() ? rep.basis : rep.minimal_support;
    for (const auto& r : rels) reports.push_back(check_relation_numeric(r, opts));
  }

  Outcome o;
  bool pass = true, numeric_failure = false;
  json list = json::array();
  Table t{"numeric check (" + mode + ")", {"subject", "samples", "skipped", "max rel residual", "tolerance", "verdict"}, {}};
  for (const auto& r : reports) {
    pass = pass && r.pass;
    if (r.samples > 0 && r.skipped == r.samples) numeric_failure = true;
    list.push_back({{"relation", r.subject},
                    {"samples", r.samples},
                    {"max_rel_residual", r.max_rel_residual},
                    {"skipped", r.skipped},
                    {"tolerance", r.tolerance},
                    {"pass", r.pass},
                    {"seed", r.seed}});
    t.rows.push_back({r.subject, std::to_string(r.samples), std::to_string(r.skipped), format_double(r.max_rel_residual),
                      format_double(r.tolerance), r.pass ? "PASS" : "FAIL"});
  }
  std::vector<std::string> footer;
  if (a.samples == 0) o.warnings.push_back("--samples 0: nothing was sampled, the pass is vacuous");
  if (reports.empty()) o.warnings.push_back("no relations to check; the pass is vacuous");
  if (numeric_failure) o.warnings.push_back("every sample was skipped by the root finder");
  for (const auto& w : o.warnings) footer.push_back("warning: " + w);
  footer.push_back(std::string("overall: ") + (pass ? "PASS" : "FAIL"));
  json doc{{"mode", mode}, {"reports", list}, {"pass", pass}, {"warnings", o.warnings}};
  const int code = numeric_failure ? kExitNumeric : pass ? kExitOk : kExitVerification;
  Outcome rendered = finish(cfg, doc, {t}, footer, code);
  rendered.warnings = o.warnings;
  return rendered;
}

Outcome cmd_mine(const RunConfig& cfg, const MineArgs& a) {
  check_degree(cfg, a.d_sweep, "degree sweep");
  const MiningResult m = mine_Q_and_norlund(a.k_max, a.d_sweep, cfg.threads);

  Table seq{"mined sequences (t_k fitted over D = k+1.." + std::to_string(a.d_sweep) + ")", {"k", "Q", "norlund", "t_k(D)"}, {}};
  json rows = json::array();
  for (size_t i = 0; i < m.Q.values.size(); ++i) {
    const int k = m.Q.first_index + static_cast<int>(i);
    const std::string t = m.t[i].t.str("D");
    seq.rows.push_back({std::to_string(k), m.Q.values[i].get_str(), m.norlund.values[i].get_str(), t});
    rows.push_back({{"k", k}, {"Q", int_json(m.Q.values[i])}, {"norlund", int_json(m.norlund.values[i])}, {"t", t}});
  }
  Table odd{"odd-k vanishing", {"k", "defined values zero", "fitted t_k(k)=0", "fitted t_(k+1)(k)"}, {}};
  json odd_json = json::array();
  for (const auto& v : m.odd_vanishing) {
    const std::string next = v.next_polynomial_at_k ? v.next_polynomial_at_k->str() : "";
    odd.rows.push_back({std::to_string(v.k), v.defined_values_zero ? "yes" : "no", v.polynomial_zero_at_k ? "yes" : "no", next});
    json e{{"k", v.k}, {"defined_values_zero", v.defined_values_zero}, {"polynomial_zero_at_k", v.polynomial_zero_at_k}};
    if (v.next_polynomial_at_k) e["next_polynomial_at_k"] = next;
    odd_json.push_back(e);
  }
  Table irr{"quotient polynomials in n", {"D", "irreducibility"}, {}};
  json irr_json = json::array();
  for (const auto& [D, v] : m.g_irreducible) {
    irr.rows.push_back({std::to_string(D), to_string(v)});
    irr_json.push_back({{"D", D}, {"irreducibility", to_string(v)}});
  }

  bool ok = true;
  Table align{"b-file comparison", {"file", "sequence", "offset", "compared", "matched", "up to sign", "verdict"}, {}};
  json align_json = json::array();
  for (const std::string& arg : a.bfiles) {
    std::string target, path = arg;
    const auto eq = arg.find('=');
    if (eq != std::string::npos && (arg.substr(0, eq) == "Q" || arg.substr(0, eq) == "norlund")) {
      target = arg.substr(0, eq);
      path = arg.substr(eq + 1);
    }
    const auto bfile = read_bfile(path);
    bool any = false;
    for (const MinedSequence* s : {&m.Q, &m.norlund}) {
      if (!target.empty() && s->name != target) continue;
      const BfileAlignment al = best_alignment(s->first_index, s->values, bfile);
      any = any || al.all_match();
      align.rows.push_back({path, s->name, std::to_string(al.offset), std::to_string(al.compared),
                            std::to_string(al.matched), al.absolute ? "yes" : "no", al.all_match() ? "match" : "no match"});
      align_json.push_back({{"file", path},
                            {"sequence", s->name},
                            {"offset", al.offset},
                            {"compared", al.compared},
                            {"matched", al.matched},
                            {"absolute", al.absolute},
                            {"match", al.all_match()}});
    }
    ok = ok && any;
  }

  json doc{{"command", "mine"},
           {"k_max", a.k_max},
           {"d_sweep", a.d_sweep},
           {"rows", rows},
           {"stable", m.stable},
           {"stability_d_max", m.stability_d_max},
           {"odd_vanishing", odd_json},
           {"irreducibility", irr_json}};
  if (!a.bfiles.empty()) doc["bfile"] = align_json;
  std::vector<Table> tables{seq, odd, irr};
  if (!a.bfiles.empty()) tables.push_back(align);
  std::vector<std::string> footer{"stable against sweep ending at D=" + std::to_string(m.stability_d_max) + ": " +
                                  (m.stable ? "yes" : "no")};
  return finish(cfg, doc, tables, footer, ok && m.stable ? kExitOk : kExitVerification);
}

}  // namespace cli
