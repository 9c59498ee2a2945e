#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "h3sep/geometry.hpp"

namespace h3sep {

enum class RowStatus { Ok, NoBoundState };

/// One point of a potential-energy scan. Energies in Rydberg.
///
/// v_nn and e_total are empty at r = 0 (divergent repulsion) and x-derived
/// quantities are empty when the row has no bound state.
struct PesRow {
  double r;
  RowStatus status = RowStatus::Ok;
  std::optional<double> x;
  std::optional<double> epsilon;
  std::optional<double> e_electronic;
  std::optional<double> v_nn;
  std::optional<double> e_total;
};

struct PesTable {
  double alpha;
  std::vector<PesRow> rows;  ///< strictly increasing in r
};

struct StabilityReport {
  std::size_t usable_rows;
  bool monotone_decreasing;
  std::optional<double> minimum_r;  ///< location of an interior minimum of e_total
  std::optional<double> minimum_e_total;
  std::string classification;
};

/// Classical proton-proton repulsion 4/R + 1/(R sin alpha) in Rydberg (pair
/// energy 2/d for unit charges). Throws DomainError at r = 0.
double nuclear_repulsion(const Geometry& geom);

/// Ground-state row for one geometry; NoBoundState is recorded, not thrown.
PesRow pes_row(const Geometry& geom, double tol = 1e-10);

/// One row per r value, evaluated concurrently and returned in input order.
/// r_values must be nonempty, non-negative and strictly increasing.
PesTable scan_r(double alpha, std::span<const double> r_values, double tol = 1e-10);

/// Uniform grid of n points on [r_min, r_max], 0 < r_min < r_max, n >= 2.
PesTable comparison_curve(double alpha, double r_min, double r_max, std::size_t n,
                          double tol = 1e-10);

/// Looks for an interior minimum of e_total over the rows where it is defined.
/// Throws DomainError with fewer than 3 such rows.
StabilityReport stability_report(const PesTable& table);

}  // namespace h3sep
