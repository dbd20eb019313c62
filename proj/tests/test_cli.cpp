#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <sstream>
#include <string>

#include "ssbath/cli.hpp"
#include "ssbath/error.hpp"

using namespace ssbath::cli;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("grids include both endpoints") {
    const auto g = log_grid(0.1, 30.0, 300);
    CHECK(g.size() == 300);
    CHECK(g.front() == 0.1);
    CHECK(g.back() == 30.0);
    for (std::size_t i = 1; i < g.size(); ++i) CHECK(g[i] > g[i - 1]);
    const auto l = lin_grid(0.0, 10.0, 101);
    CHECK(l[50] == doctest::Approx(5.0).epsilon(1e-15));
    CHECK_THROWS_AS(log_grid(0.0, 1.0, 10), ssbath::ConfigError);
    CHECK_THROWS_AS(lin_grid(0.0, 1.0, 1), ssbath::ConfigError);
  }

  TEST_CASE("csv layout") {
    Table t{{"a", "b", "flag"}, {false, false, true}, {{1.5, std::nullopt, 1.0}, {-2.0, 1e-300, 0.0}}};
    const std::string s = render(t, Format::csv);
    CHECK(s.find('\r') == std::string::npos);
    CHECK(s.back() == '\n');
    const auto ls = lines(s);
    REQUIRE(ls.size() == 3);
    CHECK(ls[0] == "a,b,flag");
    for (const auto& l : ls) CHECK(fields(l).size() == 3);
    CHECK(ls[1] == "1.5000000000000000e+00,,1");
    CHECK(ls[2] == "-2.0000000000000000e+00,1.0000000000000000e-300,0");
  }

  TEST_CASE("json layout") {
    Table t{{"a", "b", "flag"}, {false, false, true}, {{1.5, std::nullopt, 1.0}}};
    const auto j = nlohmann::json::parse(render(t, Format::json));
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 1);
    CHECK(j[0]["a"].get<double>() == 1.5);
    CHECK(j[0]["b"].is_null());
    CHECK(j[0]["flag"].is_number_integer());
  }

  TEST_CASE("correlate at q = 1 reproduces equilibrium") {
    CorrelateConfig c;
    c.q = 1.0;
    c.n_points = 21;
    const auto r = cmd_correlate(c);
    CHECK(r.failed_rows == 0);
    REQUIRE(r.table.rows.size() == 21);
    CHECK(r.table.columns.size() == 7);
    for (const auto& row : r.table.rows) {
      REQUIRE(row[5]);
      REQUIRE(row[6]);
      CHECK(*row[5] == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(*row[6] == doctest::Approx(1.0).epsilon(1e-13));
    }
    CHECK(lines(render(r.table, Format::csv)).size() == 22);
  }

  TEST_CASE("correlate reports invalid normalization as empty rows") {
    CorrelateConfig c;
    c.q = 0.6;
    c.beta_tilde = 1.0;
    c.n_points = 5;
    const auto r = cmd_correlate(c);
    CHECK(r.failed_rows == 5);
    CHECK_FALSE(r.diagnostics.empty());
    for (const auto& row : r.table.rows) {
      CHECK_FALSE(row[1]);
      CHECK(row[3]);
    }
    CHECK_THROWS_AS(cmd_correlate({1.2, 3.5, 1.0, 1.0, 10.0, 1}), ssbath::ConfigError);
    CHECK_THROWS_AS(cmd_correlate({1.6, 3.5, 1.0, 1.0, 10.0, 5}), ssbath::DomainError);
  }

  TEST_CASE("temp-map at q = 1 is the identity") {
    TempMapConfig c;
    c.q_list = {1.0};
    c.n = 30;
    const auto r = cmd_temp_map(c);
    REQUIRE(r.table.rows.size() == 30);
    for (const auto& row : r.table.rows) {
      REQUIRE(row[2]);
      CHECK(*row[2] == doctest::Approx(*row[1]).epsilon(1e-6));
    }
  }

  TEST_CASE("su-plane rows run from hot to cold grid order") {
    SuPlaneConfig c;
    c.n = 40;
    const auto r = cmd_su_plane(c);
    REQUIRE(r.table.rows.size() == 40);
    for (std::size_t i = 0; i < r.table.rows.size(); ++i) {
      const auto& row = r.table.rows[i];
      CHECK(*row[1] == doctest::Approx(1.0 / *row[0]).epsilon(1e-14));
      if (i) CHECK(*row[0] > *r.table.rows[i - 1][0]);
    }
  }

  TEST_CASE("stark at q = 1, Theta = 0 has one transition") {
    StarkConfig c;
    c.n = 120;
    const auto r = cmd_stark(c);
    CHECK(r.failed_rows == 0);
    int changes = 0;
    for (std::size_t i = 1; i < r.table.rows.size(); ++i) {
      if ((*r.table.rows[i][1] > 0) != (*r.table.rows[i - 1][1] > 0)) ++changes;
    }
    CHECK(changes == 1);
  }

  TEST_CASE("qme samples and rejects unknown initial states") {
    QmeConfig c;
    c.t_max = 1.0;
    c.dt = 0.01;
    c.sample_every = 10;
    const auto r = cmd_qme(c);
    CHECK(r.table.rows.size() == 11);
    for (const auto& row : r.table.rows) CHECK(*row[1] + *row[2] == doctest::Approx(1.0).epsilon(1e-14));
    c.init = "mixed";
    CHECK_THROWS_AS(cmd_qme(c), ssbath::ConfigError);
  }

  TEST_CASE("rendering is deterministic") {
    StarkConfig c;
    c.n = 30;
    c.q = 1.2;
    CHECK(render(cmd_stark(c).table, Format::csv) == render(cmd_stark(c).table, Format::csv));
    CorrelateConfig k;
    k.n_points = 11;
    CHECK(render(cmd_correlate(k).table, Format::json) == render(cmd_correlate(k).table, Format::json));
  }
}
