#include <algorithm>
#include <cstdio>
#include <sstream>

#include "cli.hpp"

namespace cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void pretty_table(std::ostream& os, const Table& t) {
  std::vector<size_t> width(t.headers.size());
  for (size_t c = 0; c < t.headers.size(); ++c) width[c] = t.headers[c].size();
  for (const auto& row : t.rows) {
    for (size_t c = 0; c < row.size() && c < width.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (size_t c = 0; c < cells.size(); ++c) {
      if (c) s += " | ";
      s += cells[c];
      if (c + 1 < cells.size()) s.append(width[c] - cells[c].size(), ' ');
    }
    os << s << "\n";
  };
  if (!t.title.empty()) os << t.title << "\n";
  line(t.headers);
  size_t total = 0;
  for (size_t c = 0; c < width.size(); ++c) total += width[c] + (c ? 3 : 0);
  os << std::string(total, '-') << "\n";
  for (const auto& row : t.rows) line(row);
}

}  // namespace

std::string render_tables(const RunConfig& cfg, const std::vector<Table>& tables,
                          const std::vector<std::string>& footer) {
  std::ostringstream os;
  if (cfg.format == Format::Csv) {
    os << "# seed=" << cfg.seed << "\n";
    for (const Table& t : tables) {
      if (!t.title.empty()) os << "# " << t.title << "\n";
      for (size_t c = 0; c < t.headers.size(); ++c) os << (c ? "," : "") << csv_field(t.headers[c]);
      os << "\n";
      for (const auto& row : t.rows) {
        for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_field(row[c]);
        os << "\n";
      }
    }
    for (const auto& f : footer) os << "# " << f << "\n";
    return os.str();
  }
  os << "seed: " << cfg.seed << "\n";
  for (const Table& t : tables) {
    os << "\n";
    pretty_table(os, t);
  }
  if (!footer.empty()) os << "\n";
  for (const auto& f : footer) os << f << "\n";
  return os.str();
}

std::string render_json(const RunConfig& cfg, nlohmann::json doc) {
  doc["seed"] = cfg.seed;
  return doc.dump(2) + "\n";
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace cli
