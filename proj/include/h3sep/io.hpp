#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "h3sep/pes_scan.hpp"
#include "h3sep/wavefunction.hpp"

namespace h3sep::io {

inline constexpr int kJsonSchemaVersion = 1;
inline constexpr int kCsvDecimals = 7;
inline constexpr int kJsonDigits = 9;

/// Parses "pi/6", "2pi/3", "2*pi/3", "pi", "0.5236" and similar.
/// Throws DomainError on malformed input.
double parse_angle(std::string_view text);

/// Fixed-point with `decimals` digits after the point.
std::string format_fixed(double v, int decimals);

/// Rounds to `digits` significant digits (for JSON emission).
double round_significant(double v, int digits);

/// Columns: R,x,epsilon,E_electronic,V_nn,E_total,status. Undefined values are
/// empty fields.
void write_pes_csv(std::ostream& out, std::span<const PesRow> rows, int decimals = kCsvDecimals);
std::vector<PesRow> read_pes_csv(std::istream& in);

nlohmann::ordered_json pes_json(const PesTable& table, int digits = kJsonDigits);

/// theta,phi,psi triples, theta-major.
void write_grid_csv(std::ostream& out, const AngularGrid& grid, int digits = 10);

/// Reference (R, x) pairs: '#' comments, one "R,x" header line, then data.
std::vector<std::pair<double, double>> read_reference_table(const std::filesystem::path& path);

/// Name of the reference-table fixture for a tabulated angle
/// (pi/2, pi/6, pi/3, pi/8), or empty if alpha is not one of them.
std::string reference_table_name(double alpha);

std::string_view status_name(RowStatus s);

}  // namespace h3sep::io
