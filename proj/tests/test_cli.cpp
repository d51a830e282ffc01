#include <doctest.h>

#include <cmath>
#include <cstdlib>

#include <json.hpp>

#include "cli_support.hpp"
#include "quatstat/discrepancy.hpp"
#include "quatstat/errors.hpp"
#include "quatstat/two_level.hpp"

using namespace quatstat;
using namespace quatstat::testing;
using nlohmann::json;

namespace {

json read_json(const std::string& path) {
  std::ifstream in(path);
  return json::parse(in);
}

bool has_quantity(const DiscrepancyLog& log, const std::string& q) {
  for (const Discrepancy& d : log) {
    if (d.quantity == q) return true;
  }
  return false;
}

// Restores QUATSTAT_TOL when the test leaves.
struct TolEnv {
  explicit TolEnv(const char* value) { setenv("QUATSTAT_TOL", value, 1); }
  ~TolEnv() { unsetenv("QUATSTAT_TOL"); }
};

}  // namespace

TEST_CASE("beta grid parsing") {
  cli::RunConfig cfg;
  cli::parse_beta_spec("0.5:2:4", cfg);
  CHECK(cfg.beta_min == 0.5);
  CHECK(cfg.beta_max == 2.0);
  CHECK(cfg.beta_steps == 4);
  const auto grid = cli::beta_grid(cfg);
  REQUIRE(grid.size() == 4);
  CHECK(grid.front() == 0.5);
  CHECK(grid.back() == 2.0);
  CHECK(grid[1] == doctest::Approx(1.0));
  cfg.log_grid = true;
  const auto lg = cli::beta_grid(cfg);
  CHECK(lg[1] / lg[0] == doctest::Approx(lg[2] / lg[1]));
  CHECK(lg.back() == 2.0);
  CHECK_THROWS_AS(cli::parse_beta_spec("1:2", cfg), ParseError);
  CHECK_THROWS_AS(cli::parse_beta_spec("a:2:3", cfg), ParseError);
  CHECK_THROWS_AS(cli::parse_beta_spec("1:2:3x", cfg), ParseError);
  CHECK(cli::format_double(0.1) == "0.10000000000000001");
  CHECK(cli::format_double(std::nan("")) == "nan");
  CHECK(cli::format_double(-INFINITY) == "-inf");
}

TEST_CASE("thermo on the spin model") {
  ScratchDir dir;
  const auto r = run_cli({"thermo", "--model", "spin", "--discrepancies", dir.file("d.json")});
  CHECK(r.code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 51);
  CHECK(lines[0] == "beta,Z1,A,S,U,Cv");
  const auto first = split_numbers(lines[1]);
  REQUIRE(first.size() == 6);
  CHECK(first[0] == doctest::Approx(0.1));
  CHECK(split_numbers(lines[50])[0] == 5.0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = split_numbers(lines[i]);
    const double beta = row[0];
    const double want = 2 * std::cosh(beta) + 0.25 * beta * std::sinh(beta);
    CHECK(row[1] == doctest::Approx(want).epsilon(1e-14));
  }
}

TEST_CASE("thermo on a diagonal toy matches the spectral path") {
  ScratchDir dir;
  const auto params = dir.write("toy.json",
                                R"({"a": [0, 1, 0, 0], "b": [0, 0.25, 0, 0], "N": 3})");
  const auto closed = run_cli({"thermo", "--model", "toy", "--params", params, "--branch",
                               "rederived", "--beta", "0.2:4:9", "--discrepancies",
                               dir.file("d.json")});
  const auto spectral = run_cli({"thermo", "--model", "toy", "--params", params, "--path",
                                 "spectral", "--beta", "0.2:4:9"});
  REQUIRE(closed.code == 0);
  REQUIRE(spectral.code == 0);
  const auto a = split_lines(closed.out);
  const auto b = split_lines(spectral.out);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 1; i < a.size(); ++i) {
    const auto x = split_numbers(a[i]);
    const auto y = split_numbers(b[i]);
    for (std::size_t c = 0; c < x.size(); ++c) CHECK(x[c] == doctest::Approx(y[c]).epsilon(1e-10));
  }
}

TEST_CASE("qubit partition function") {
  ScratchDir dir;
  for (const char* phi : {"0", "0.7", "-2.1"}) {
    const auto r = run_cli({"thermo", "--model", "qubit", "--phi", phi, "--beta", "0.1:6:12",
                            "--discrepancies", dir.file("d.json")});
    REQUIRE(r.code == 0);
    const auto lines = split_lines(r.out);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto row = split_numbers(lines[i]);
      CHECK(row[1] == doctest::Approx(1 + std::exp(-2 * row[0])).epsilon(1e-14));
    }
  }
}

TEST_CASE("output does not depend on the worker count") {
  ScratchDir dir;
  for (const char* sub : {"thermo", "compare"}) {
    const auto one = run_cli({sub, "--beta", "0.1:8:64", "--jobs", "1", "--discrepancies",
                              dir.file("a.json")});
    const auto four = run_cli({sub, "--beta", "0.1:8:64", "--jobs", "4", "--discrepancies",
                               dir.file("b.json")});
    CHECK(one.code == four.code);
    CHECK(one.out == four.out);
    CHECK(read_json(dir.file("a.json")) == read_json(dir.file("b.json")));
  }
}

TEST_CASE("json output") {
  ScratchDir dir;
  const auto r = run_cli({"thermo", "--output", "json", "--beta", "1:2:3", "--discrepancies",
                          dir.file("d.json")});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc.at("rows").size() == 3);
  CHECK(doc.at("rows")[0].at("provenance") == "closed_form");
  CHECK(doc.at("discrepancy_count").get<int>() > 0);
  const auto out_file = dir.file("table.json");
  const auto w = run_cli({"thermo", "--output", "json", "--beta", "1:2:3", "--out", out_file,
                          "--discrepancies", dir.file("d.json")});
  CHECK(w.out.empty());
  CHECK(read_json(out_file) == doc);
}

TEST_CASE("pressure column") {
  ScratchDir dir;
  const auto r = run_cli({"thermo", "--model", "qubit", "--volume", "2", "--beta", "1:2:2",
                          "--discrepancies", dir.file("d.json")});
  REQUIRE(r.code == 0);
  const auto lines = split_lines(r.out);
  CHECK(lines[0] == "beta,Z1,A,S,U,Cv,P");
  // Levels {0, 2 (V0/V)^{2/3}}: P = (2/3)(2/V0) <n_upper>.
  const double beta = 1.0;
  const double up = std::exp(-2 * beta) / (1 + std::exp(-2 * beta));
  CHECK(split_numbers(lines[1])[6] == doctest::Approx((2.0 / 3.0) * (2.0 / 2.0) * up).epsilon(1e-8));
  CHECK(run_cli({"thermo", "--volume", "2", "--path", "spectral"}).code == 2);
}

TEST_CASE("exit codes") {
  ScratchDir dir;
  CHECK(run_cli({"thermo", "--model", "nope"}).code == 2);
  CHECK(run_cli({"thermo", "--beta", "1:x:2"}).code == 2);
  CHECK(run_cli({"thermo", "--beta", "0:1:2"}).code == 2);
  CHECK(run_cli({"thermo", "--model", "toy"}).code == 2);
  CHECK(run_cli({"thermo", "--output", "xml"}).code == 2);
  CHECK(run_cli({"bogus"}).code == 2);
  CHECK(run_cli({}).code == 2);
  const auto bad = dir.write("bad.json", "{\"n\": 2, \"entries\": [[1, 2]");
  CHECK(run_cli({"validate", "--params", bad}).code == 2);
  const auto ragged = dir.write(
      "ragged.json", R"({"n": 2, "entries": [[[0,1,0,0]], [[0,0,1,0], [0,-1,0,0]]]})");
  CHECK(run_cli({"validate", "--params", ragged}).code == 2);

  const auto unphysical = run_cli({"thermo", "--branch", "rederived", "--beta", "1:20:3",
                                   "--discrepancies", dir.file("d.json")});
  CHECK(unphysical.code == 3);
  CHECK(unphysical.err.find("error:") != std::string::npos);
  CHECK(run_cli({"thermo", "--branch", "rederived", "--beta", "1:5:3", "--discrepancies",
                 dir.file("d.json")})
            .code == 0);
}

TEST_CASE("compare writes the discrepancy log") {
  ScratchDir dir;
  const auto path = dir.file("disc.json");
  const auto r = run_cli({"compare", "--model", "spin", "--discrepancies", path});
  CHECK(r.code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 51);
  CHECK(lines[0] == "beta,Z_spectral,Z_formal,Z1_printed,Z1_rederived,Z_dyson");
  CHECK(r.err.find("self-check dyson") != std::string::npos);
  CHECK(r.err.find("FAIL") == std::string::npos);
  const DiscrepancyLog log = discrepancies_from_json(read_json(path));
  CHECK(has_quantity(log, "Z1_sign_branch"));
  CHECK(has_quantity(log, "U_spin_display"));
  CHECK(has_quantity(log, "S_spin_display"));
  CHECK(has_quantity(log, "Cv"));
  for (const Discrepancy& d : log) CHECK(d.printed_value != d.derived_value);

  const auto js = run_cli({"compare", "--output", "json", "--beta", "0.5:1:2", "--discrepancies",
                           dir.file("d2.json")});
  const json doc = json::parse(js.out);
  for (const auto& c : doc.at("self_checks")) CHECK(c.at("passed").get<bool>());
  CHECK(doc.at("summary").at("spectral_vs_formal").get<double>() > 0.0);
}

TEST_CASE("spectral column agrees with the exact spin partition function") {
  ScratchDir dir;
  const auto r = run_cli({"compare", "--model", "spin", "--v", "0.8", "--x", "2", "--beta",
                          "0.1:3:7", "--discrepancies", dir.file("d.json")});
  REQUIRE(r.code == 0);
  const auto lines = split_lines(r.out);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto row = split_numbers(lines[i]);
    const double beta = row[0];
    CHECK(row[1] == doctest::Approx(std::exp(-0.2 * beta) + std::exp(-1.8 * beta)).epsilon(1e-12));
    CHECK(row[2] == doctest::Approx(2 * std::cos(beta) * std::cos(0.8 * beta)).epsilon(1e-12));
  }
}

TEST_CASE("validate verdicts") {
  ScratchDir dir;
  const auto spin = run_cli({"validate", "--params", data_file("spin_operator.json")});
  REQUIRE(spin.code == 0);
  CHECK(spin.out.find("dimension: 2") != std::string::npos);
  CHECK(spin.out.find("pseudo-anti-Hermitian: yes") != std::string::npos);
  CHECK(spin.out.find("quasi-anti-Hermitian: yes") != std::string::npos);
  CHECK(spin.out.find("pseudo-Hermitian: no") != std::string::npos);

  const auto id = dir.write("id.json", R"({"n": 2, "entries": [[[1,0,0,0],[0,0,0,0]],[[0,0,0,0],[1,0,0,0]]]})");
  const auto r = run_cli({"validate", "--params", id});
  CHECK(r.out.find("pseudo-anti-Hermitian: no") != std::string::npos);
  CHECK(r.out.find("quasi-anti-Hermitian: no") != std::string::npos);
  CHECK(r.out.find("pseudo-Hermitian: yes (residual 0.000000e+00)") != std::string::npos);

  // d changed from -(alpha/gamma) conj(c) = j to 1.1 j.
  const auto broken = dir.write("broken.json", R"({"n": 2,
      "entries": [[[0,1,0,0],[0,0,0.25,0]],[[0,0,1.1,0],[0,-1,0,0]]],
      "metric": {"x": 2, "y": 1}})");
  const auto b = run_cli({"validate", "--params", broken});
  // |eta H eta^-1 + H^+|_F / |H|_F with entries -0.1 j and 0.025 j over (1, 0.25 j, 1.1 j, -1).
  const double want = std::sqrt(0.01 + 0.025 * 0.025) / std::sqrt(1 + 0.0625 + 1.21 + 1);
  const auto at = b.out.find("pseudo-anti-Hermitian: no (residual ");
  REQUIRE(at != std::string::npos);
  CHECK(std::stod(b.out.substr(at + 36)) == doctest::Approx(want).epsilon(1e-6));

  const auto model = run_cli({"validate", "--model", "qubit", "--phi", "1.3", "--output", "json"});
  const json doc = json::parse(model.out);
  CHECK(doc.at("quasi_anti_hermitian").at("verdict").get<bool>());
  CHECK(doc.at("quasi_anti_hermitian").at("residual").get<double>() <= 1e-12);

  const auto singular = dir.write("singular.json", R"({"n": 2,
      "entries": [[[0,1,0,0],[0,0,0,0]],[[0,0,0,0],[0,1,0,0]]], "metric": {"x": 1, "y": 1, "z": [1, 0]}})");
  CHECK(run_cli({"validate", "--params", singular}).code == 2);
}

TEST_CASE("negative temperature table") {
  const auto r = run_cli({"negtemp", "--model", "spin", "--N", "10", "--points", "11"});
  REQUIRE(r.code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 12);
  CHECK(lines[0] == "E,S_stirling,S_exact,T");
  CHECK(lines[6].substr(lines[6].rfind(',') + 1) == "infinite");
  CHECK(split_numbers(lines[1])[0] == doctest::Approx(5.0));
  CHECK(split_numbers(lines[11])[0] == doctest::Approx(15.0));
  CHECK(split_numbers(lines[1])[1] == 0.0);
  CHECK(split_numbers(lines[6])[1] == doctest::Approx(10 * std::log(2.0)).epsilon(1e-14));
  CHECK(split_numbers(lines[3])[3] > 0.0);
  CHECK(split_numbers(lines[9])[3] < 0.0);

  const auto gas = run_cli({"negtemp", "--e-plus", "2", "--e-minus", "1", "--N", "4", "--points",
                            "5", "--output", "json"});
  REQUIRE(gas.code == 0);
  const json doc = json::parse(gas.out);
  CHECK(doc.at("E_plus") == 2.0);
  CHECK(doc.at("rows")[2].at("T") == "infinite");
  CHECK(doc.at("rows")[1].at("S_exact").get<double>() == doctest::Approx(std::log(4.0)));
  CHECK(run_cli({"negtemp", "--model", "qubit"}).code == 2);
}

TEST_CASE("spectrum listing") {
  const auto r = run_cli({"spectrum", "--model", "spin", "--x", "2"});
  REQUIRE(r.code == 0);
  const auto lines = split_lines(r.out);
  REQUIRE(lines.size() == 3);
  CHECK(split_numbers(lines[1])[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(split_numbers(lines[2])[0] == doctest::Approx(1.5).epsilon(1e-12));
  const auto js = run_cli({"spectrum", "--model", "spin", "--x", "2", "--output", "json"});
  const json doc = json::parse(js.out);
  REQUIRE(doc.at("standard_spectrum").size() == 2);
  CHECK(doc.at("standard_spectrum")[0].at("im").get<double>() == doctest::Approx(1.5));
  CHECK(doc.at("standard_spectrum")[1].at("im").get<double>() == doctest::Approx(0.5));
  const auto file = run_cli({"spectrum", "--model", "toy", "--params", data_file("toy_complex.json")});
  REQUIRE(file.code == 0);
  const auto fl = split_lines(file.out);
  CHECK(split_numbers(fl[1])[0] == doctest::Approx(1 - std::sqrt(0.43)).epsilon(1e-12));
}

TEST_CASE("parameter files") {
  ScratchDir dir;
  const auto a = run_cli({"spectrum", "--model", "spin", "--params", data_file("spin.json"),
                          "--v", "0.9"});
  const auto b = run_cli({"spectrum", "--model", "spin", "--x", "2"});
  CHECK(a.out == b.out);
  const auto q = run_cli({"thermo", "--model", "qubit", "--params", data_file("qubit.json"),
                          "--beta", "1:1:1", "--discrepancies", dir.file("d.json")});
  CHECK(q.code == 0);
}

TEST_CASE("tolerance from the environment") {
  ScratchDir dir;
  {
    TolEnv env("not-a-number");
    CHECK(run_cli({"thermo"}).code == 2);
  }
  {
    TolEnv env("1e6");
    const auto r = run_cli({"thermo", "--output", "json", "--beta", "1:2:3", "--discrepancies",
                            dir.file("env.json")});
    REQUIRE(r.code == 0);
    CHECK(json::parse(r.out).at("discrepancy_count") == 0);
    CHECK_FALSE(std::filesystem::exists(dir.file("env.json")));
    const auto o = run_cli({"thermo", "--output", "json", "--beta", "1:2:3", "--tol", "1e-9",
                            "--discrepancies", dir.file("env.json")});
    CHECK(json::parse(o.out).at("discrepancy_count").get<int>() > 0);
  }
}
