#include "h3sep/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "h3sep/errors.hpp"

namespace h3sep::io {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc{} || ptr != t.data() + t.size()) {
    throw DomainError(std::string(what) + ": cannot parse number '" + t + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string opt_fixed(const std::optional<double>& v, int decimals) {
  return v ? format_fixed(*v, decimals) : std::string{};
}

nlohmann::ordered_json opt_json(const std::optional<double>& v, int digits) {
  return v ? nlohmann::ordered_json(round_significant(*v, digits)) : nlohmann::ordered_json(nullptr);
}

}  // namespace

double parse_angle(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (c != ' ' && c != '*') t.push_back(c);
  }
  const auto pos = t.find("pi");
  if (pos == std::string::npos) return parse_number(t, "angle");

  const std::string num = t.substr(0, pos);
  const std::string rest = t.substr(pos + 2);
  const double factor = num.empty() ? 1.0 : parse_number(num, "angle");
  double divisor = 1.0;
  if (!rest.empty()) {
    if (rest.front() != '/') throw DomainError("angle: cannot parse '" + std::string(text) + "'");
    divisor = parse_number(rest.substr(1), "angle");
    if (divisor == 0.0) throw DomainError("angle: division by zero");
  }
  return factor * std::numbers::pi / divisor;
}

std::string format_fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  // Avoid "-0.0000000".
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

double round_significant(double v, int digits) {
  if (!std::isfinite(v)) return v;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return std::strtod(buf, nullptr);
}

std::string_view status_name(RowStatus s) {
  return s == RowStatus::Ok ? "ok" : "no_bound_state";
}

void write_pes_csv(std::ostream& out, std::span<const PesRow> rows, int decimals) {
  out << "R,x,epsilon,E_electronic,V_nn,E_total,status\n";
  for (const PesRow& row : rows) {
    out << format_fixed(row.r, decimals) << ',' << opt_fixed(row.x, decimals) << ','
        << opt_fixed(row.epsilon, decimals) << ',' << opt_fixed(row.e_electronic, decimals) << ','
        << opt_fixed(row.v_nn, decimals) << ',' << opt_fixed(row.e_total, decimals) << ','
        << status_name(row.status) << '\n';
  }
}

std::vector<PesRow> read_pes_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "R,x,epsilon,E_electronic,V_nn,E_total,status") {
    throw DomainError("read_pes_csv: missing or unexpected header");
  }
  std::vector<PesRow> rows;
  const auto opt = [](const std::string& f) -> std::optional<double> {
    if (trim(f).empty()) return std::nullopt;
    return parse_number(f, "read_pes_csv");
  };
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 7) throw DomainError("read_pes_csv: expected 7 fields in '" + line + "'");
    PesRow row{};
    row.r = parse_number(f[0], "read_pes_csv");
    row.x = opt(f[1]);
    row.epsilon = opt(f[2]);
    row.e_electronic = opt(f[3]);
    row.v_nn = opt(f[4]);
    row.e_total = opt(f[5]);
    const std::string st = trim(f[6]);
    if (st == "ok") {
      row.status = RowStatus::Ok;
    } else if (st == "no_bound_state") {
      row.status = RowStatus::NoBoundState;
    } else {
      throw DomainError("read_pes_csv: unknown status '" + st + "'");
    }
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json pes_json(const PesTable& table, int digits) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const PesRow& row : table.rows) {
    rows.push_back({
        {"R", round_significant(row.r, digits)},
        {"x", opt_json(row.x, digits)},
        {"epsilon", opt_json(row.epsilon, digits)},
        {"E_electronic", opt_json(row.e_electronic, digits)},
        {"V_nn", opt_json(row.v_nn, digits)},
        {"E_total", opt_json(row.e_total, digits)},
        {"status", status_name(row.status)},
    });
  }
  return {
      {"schema_version", kJsonSchemaVersion},
      {"units", {{"length", "bohr"}, {"energy", "rydberg"}}},
      {"alpha", round_significant(table.alpha, digits)},
      {"rows", rows},
  };
}

void write_grid_csv(std::ostream& out, const AngularGrid& grid, int digits) {
  out << "theta,phi,psi\n";
  char buf[128];
  for (std::size_t i = 0; i < grid.theta_count; ++i) {
    for (std::size_t j = 0; j < grid.phi_count; ++j) {
      std::snprintf(buf, sizeof buf, "%.*g,%.*g,%.*g\n", digits, grid.theta[i], digits, grid.phi[j],
                    digits, grid.at(i, j));
      out << buf;
    }
  }
}

std::vector<std::pair<double, double>> read_reference_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open reference table " + path.string());
  std::vector<std::pair<double, double>> rows;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!header) {
      if (t != "R,x") throw DomainError("reference table " + path.string() + ": bad header");
      header = true;
      continue;
    }
    const auto f = split(t, ',');
    if (f.size() != 2) throw DomainError("reference table " + path.string() + ": bad row '" + t + "'");
    rows.emplace_back(parse_number(f[0], "reference table"), parse_number(f[1], "reference table"));
  }
  return rows;
}

std::string reference_table_name(double alpha) {
  constexpr double pi = std::numbers::pi;
  const std::pair<double, const char*> known[] = {
      {pi / 2, "alpha_pi_2.csv"}, {pi / 6, "alpha_pi_6.csv"},
      {pi / 3, "alpha_pi_3.csv"}, {pi / 8, "alpha_pi_8.csv"}};
  for (const auto& [a, name] : known) {
    if (std::abs(alpha - a) < 1e-12) return name;
  }
  return {};
}

}  // namespace h3sep::io
