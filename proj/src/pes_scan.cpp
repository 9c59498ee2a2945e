#include "h3sep/pes_scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "h3sep/errors.hpp"
#include "h3sep/secular.hpp"

namespace h3sep {

double nuclear_repulsion(const Geometry& geom) {
  if (!(geom.r() > 0.0)) throw DomainError("nuclear_repulsion: r must be positive");
  return 4.0 / geom.r() + 1.0 / (geom.r() * std::sin(geom.alpha()));
}

PesRow pes_row(const Geometry& geom, double tol) {
  PesRow row{};
  row.r = geom.r();
  try {
    const SecularRoot root = ground_state_root(geom, tol);
    row.x = root.x;
    row.epsilon = root.epsilon;
    row.e_electronic = -root.epsilon;
  } catch (const NoBoundState&) {
    row.status = RowStatus::NoBoundState;
  }
  if (geom.r() > 0.0) {
    row.v_nn = nuclear_repulsion(geom);
    if (row.e_electronic) row.e_total = *row.e_electronic + *row.v_nn;
  }
  return row;
}

PesTable scan_r(double alpha, std::span<const double> r_values, double tol) {
  if (r_values.empty()) throw DomainError("scan_r: no r values");
  for (std::size_t i = 0; i < r_values.size(); ++i) {
    if (!(r_values[i] >= 0.0)) throw DomainError("scan_r: r values must be non-negative");
    if (i > 0 && !(r_values[i] > r_values[i - 1])) {
      throw DomainError("scan_r: r values must be strictly increasing");
    }
  }
  // Validate alpha up front so workers never throw.
  (void)Geometry(0.0, alpha);

  PesTable table{alpha, std::vector<PesRow>(r_values.size())};
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < r_values.size(); i = next++) {
      table.rows[i] = pes_row(Geometry(r_values[i], alpha), tol);
    }
  };
  const std::size_t n_threads =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, r_values.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }
  return table;
}

PesTable comparison_curve(double alpha, double r_min, double r_max, std::size_t n, double tol) {
  if (!(r_min > 0.0 && r_min < r_max)) throw DomainError("comparison_curve: need 0 < r_min < r_max");
  if (n < 2) throw DomainError("comparison_curve: need n >= 2");
  std::vector<double> rs(n);
  const double step = (r_max - r_min) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) rs[i] = r_min + step * static_cast<double>(i);
  rs.back() = r_max;
  return scan_r(alpha, rs, tol);
}

StabilityReport stability_report(const PesTable& table) {
  std::vector<std::pair<double, double>> pts;
  for (const PesRow& row : table.rows) {
    if (row.e_total) pts.emplace_back(row.r, *row.e_total);
  }
  if (pts.size() < 3) {
    throw DomainError("stability_report: need at least 3 rows with a total energy, got " +
                      std::to_string(pts.size()));
  }
  StabilityReport rep{};
  rep.usable_rows = pts.size();
  rep.monotone_decreasing = true;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    rep.monotone_decreasing = rep.monotone_decreasing && pts[i].second < pts[i - 1].second;
  }
  // Lowest interior point that is below both neighbours.
  for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
    const double e = pts[i].second;
    if (e < pts[i - 1].second && e < pts[i + 1].second &&
        (!rep.minimum_e_total || e < *rep.minimum_e_total)) {
      rep.minimum_r = pts[i].first;
      rep.minimum_e_total = e;
    }
  }
  if (rep.monotone_decreasing) {
    rep.classification = "unstable (monotone decreasing)";
  } else if (rep.minimum_r) {
    rep.classification = "bound (interior minimum)";
  } else {
    rep.classification = "unstable";
  }
  return rep;
}

}  // namespace h3sep
