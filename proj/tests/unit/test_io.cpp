#include <doctest.h>

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include "h3sep/errors.hpp"
#include "h3sep/io.hpp"
#include "test_support.hpp"

using namespace h3sep;

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

TEST_SUITE("io") {

TEST_CASE("angles in symbolic and decimal form") {
  CHECK(io::parse_angle("pi/6") == kPi / 6.0);
  CHECK(io::parse_angle("pi/2") == kPi / 2.0);
  CHECK(io::parse_angle("2pi/3") == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-15));
  CHECK(io::parse_angle("2*pi/3") == doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-15));
  CHECK(io::parse_angle("pi") == kPi);
  CHECK(io::parse_angle("0.5236") == 0.5236);
  CHECK(io::parse_angle(" pi/8 ") == kPi / 8.0);
  for (const char* bad : {"", "pie/6", "pi/0", "pi/", "abc", "1.0x"}) {
    CHECK_THROWS_AS(io::parse_angle(bad), DomainError);
  }
}

TEST_CASE("fixed formatting") {
  CHECK(io::format_fixed(1.23456789, 7) == "1.2345679");
  CHECK(io::format_fixed(-1e-12, 7) == "0.0000000");
  CHECK(io::format_fixed(2.0, 3) == "2.000");
  CHECK(io::round_significant(1.234567891234, 9) == 1.23456789);
}

TEST_CASE("CSV round trip is byte-identical") {
  const std::vector<double> rs{0.0, 0.7, 2.2};
  const PesTable t = scan_r(kPi / 3.0, rs);
  PesRow missing{5.0};
  missing.status = RowStatus::NoBoundState;
  std::vector<PesRow> rows = t.rows;
  rows.push_back(missing);

  std::ostringstream first;
  io::write_pes_csv(first, rows);
  std::istringstream in(first.str());
  const auto parsed = io::read_pes_csv(in);
  REQUIRE(parsed.size() == rows.size());
  CHECK_FALSE(parsed[0].e_total.has_value());
  CHECK(parsed[3].status == RowStatus::NoBoundState);
  CHECK_FALSE(parsed[3].x.has_value());
  std::ostringstream second;
  io::write_pes_csv(second, parsed);
  CHECK(first.str() == second.str());
}

TEST_CASE("CSV header and malformed input") {
  std::ostringstream out;
  io::write_pes_csv(out, std::vector<PesRow>{});
  CHECK(out.str() == "R,x,epsilon,E_electronic,V_nn,E_total,status\n");
  std::istringstream bad("R,x\n1,2\n");
  CHECK_THROWS_AS(io::read_pes_csv(bad), DomainError);
  std::istringstream bad_status("R,x,epsilon,E_electronic,V_nn,E_total,status\n1,,,,,,maybe\n");
  CHECK_THROWS_AS(io::read_pes_csv(bad_status), DomainError);
}

TEST_CASE("JSON carries schema, units and nulls") {
  const std::vector<double> rs{0.0, 1.0};
  const auto j = io::pes_json(scan_r(kPi / 2.0, rs));
  CHECK(j["schema_version"] == io::kJsonSchemaVersion);
  CHECK(j["units"]["energy"] == "rydberg");
  CHECK(j["rows"].size() == 2);
  CHECK(j["rows"][0]["E_total"].is_null());
  CHECK(j["rows"][1]["x"].get<double>() == doctest::Approx(1.8749557).epsilon(1e-7));
  CHECK(j["rows"][1]["status"] == "ok");
}

TEST_CASE("JSON and CSV encode the same numbers") {
  const std::vector<double> rs{1.2};
  const PesTable t = scan_r(kPi / 8.0, rs);
  const auto j = io::pes_json(t);
  std::ostringstream csv;
  io::write_pes_csv(csv, t.rows);
  std::istringstream in(csv.str());
  const auto parsed = io::read_pes_csv(in);
  CHECK(std::abs(j["rows"][0]["x"].get<double>() - *parsed[0].x) <= 5e-8);
  CHECK(std::abs(j["rows"][0]["E_total"].get<double>() - *parsed[0].e_total) <= 5e-8);
}

TEST_CASE("reference tables") {
  for (double alpha : h3sep::testing::kTableAngles) {
    const auto rows = h3sep::testing::reference_rows(alpha);
    REQUIRE(rows.size() == 20);
    CHECK(rows.front().first == 0.0);
    CHECK(rows.front().second == 2.1349367);
    CHECK(rows.back().first == 3.0);
  }
  CHECK(io::reference_table_name(kPi / 6.0) == "alpha_pi_6.csv");
  CHECK(io::reference_table_name(0.5).empty());
  CHECK_THROWS(io::read_reference_table(h3sep::testing::data_dir() / "missing.csv"));
}

TEST_CASE("grid CSV layout") {
  AngularGrid g{1.0, 2, 2, {0.5, 1.5}, {1.0, 2.0}, {1.0, 2.0, 3.0, 4.0}};
  std::ostringstream out;
  io::write_grid_csv(out, g, 3);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "theta,phi,psi");
  int count = 0;
  while (std::getline(in, line)) ++count;
  CHECK(count == 4);
}

}
