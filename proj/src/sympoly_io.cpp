#include "rootmean/sympoly_io.hpp"

#include <cctype>
#include <sstream>

#include "rootmean/error.hpp"

namespace rootmean {

namespace {

Symbol symbol_from_name(std::string_view name, unsigned constant_base) {
  if (name.size() < 2 || (name[0] != 'r' && name[0] != 'c')) {
    throw PreconditionError("bad symbol name: '" + std::string(name) + "'");
  }
  unsigned order = 0;
  for (char ch : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw PreconditionError("bad symbol name: '" + std::string(name) + "'");
    }
    order = order * 10 + static_cast<unsigned>(ch - '0');
  }
  if (name[0] == 'r') return Symbol::root(order);
  return Symbol::constant(order, constant_base + order);
}

std::string render(const SymPoly& p, bool pretty) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool show_coeff = !(mag == Rational(1)) || m.is_one();
    if (show_coeff) os << mag.str();
    const auto& factors = m.factors();
    for (size_t k = 0; k < factors.size(); ++k) {
      const auto& [s, e] = factors[k];
      if (show_coeff || k > 0) os << ' ';
      if (pretty) {
        os << (s.is_root() ? "r^[" : "c^[") << s.order << ']';
      } else {
        os << s.name();
      }
      if (e != 1) os << '^' << e;
    }
  }
  return os.str();
}

}  // namespace

nlohmann::json to_json(const SymPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [m, c] : p.terms()) {
    nlohmann::json expt = nlohmann::json::object();
    for (const auto& [s, e] : m.factors()) expt[s.name()] = e;
    terms.push_back({{"expt", expt}, {"coeff", c.str()}});
  }
  return {{"terms", terms}};
}

SymPoly sympoly_from_json(const nlohmann::json& j, unsigned constant_base) {
  SymPoly p;
  for (const auto& t : j.at("terms")) {
    std::vector<Monomial::Factor> factors;
    for (const auto& [name, e] : t.at("expt").items()) {
      factors.emplace_back(symbol_from_name(name, constant_base), e.get<std::uint32_t>());
    }
    p.add_term(Monomial::from_factors(std::move(factors)),
               Rational::parse(t.at("coeff").get<std::string>()));
  }
  return p;
}

SymPoly parse_sympoly(std::string_view text, unsigned constant_base) {
  SymPoly p;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_uint = [&]() -> std::string {
    size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return std::string(text.substr(start, i - start));
  };
  auto fail = [&](const char* what) {
    throw PreconditionError(std::string("parse_sympoly: ") + what + " at offset " +
                            std::to_string(i) + " in '" + std::string(text) + "'");
  };

  skip_ws();
  if (i < text.size() && text.substr(i) == "0") return p;
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      fail("expected sign");
    }
    first = false;
    Rational coeff(1);
    bool have_any = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::string num = read_uint();
      if (i < text.size() && text[i] == '/') {
        ++i;
        std::string den = read_uint();
        if (den.empty()) fail("missing denominator");
        num += "/" + den;
      }
      coeff = Rational::parse(num);
      have_any = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') ++i;
    }
    std::vector<Monomial::Factor> factors;
    while (true) {
      skip_ws();
      if (i >= text.size() || (text[i] != 'r' && text[i] != 'c')) break;
      char kind = text[i++];
      std::string order = read_uint();
      if (order.empty()) fail("missing symbol order");
      std::uint32_t e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string ex = read_uint();
        if (ex.empty()) fail("missing exponent");
        e = static_cast<std::uint32_t>(std::stoul(ex));
      }
      factors.emplace_back(symbol_from_name(std::string(1, kind) + order, constant_base), e);
      have_any = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') ++i;
    }
    if (!have_any) fail("empty term");
    p.add_term(Monomial::from_factors(std::move(factors)), sign < 0 ? -coeff : coeff);
  }
  return p;
}

std::string to_text(const SymPoly& p) { return render(p, false); }

std::string to_pretty(const SymPoly& p) { return render(p, true); }

}  // namespace rootmean
