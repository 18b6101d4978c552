#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "chaoswpt/experiments.hpp"

using namespace chaoswpt;

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

int count_fields(const std::string& line) {
  int n = 1;
  for (char c : line) n += (c == ',');
  return n;
}

cli::Options tiny_options() {
  cli::Options opts;
  opts.sim.n_symbols = 2'000;
  opts.sim.seed = 4242;
  opts.strict = false;  // statistical gates are calibrated for full-size runs
  return opts;
}

}  // namespace

TEST_CASE("config text: comments, whitespace, inf, later keys win") {
  std::istringstream in(
      "# run setup\n"
      "beta = 30   # spreading\n"
      "\n"
      "m = inf\n"
      "beta = 25\n"
      "seed=7\n");
  const auto kvs = cli::parse_config(in);
  REQUIRE(kvs.size() == 4);
  cli::Options opts;
  cli::apply_overrides(opts, kvs);
  CHECK(opts.sim.waveform.beta == 25);
  CHECK(std::isinf(opts.sim.channel.m));
  CHECK(opts.sim.seed == 7);
}

TEST_CASE("config errors name the offender") {
  std::istringstream missing_eq("beta 25\n");
  CHECK_THROWS_WITH_AS(cli::parse_config(missing_eq),
                       doctest::Contains("line 1"), cli::ConfigError);

  cli::Options opts;
  CHECK_THROWS_WITH_AS(cli::apply_overrides(opts, {{"bogus", "1"}}),
                       doctest::Contains("bogus"), cli::ConfigError);
  CHECK_THROWS_WITH_AS(cli::apply_overrides(opts, {{"beta", "abc"}}),
                       doctest::Contains("beta"), cli::ConfigError);
  CHECK_THROWS_WITH_AS(cli::apply_overrides(opts, {{"scheme", "qam"}}),
                       doctest::Contains("scheme"), cli::ConfigError);
  CHECK_THROWS_WITH_AS(cli::apply_overrides(opts, {{"strict", "maybe"}}),
                       doctest::Contains("strict"), cli::ConfigError);
}

TEST_CASE("every documented key applies") {
  cli::Options opts;
  cli::apply_overrides(
      opts, {{"scheme", "srdcsk"}, {"beta", "60"},      {"beta_r", "15"},
             {"psi", "none"},      {"m", "4"},          {"pt_dbm", "30"},
             {"distance_m", "25"}, {"alpha", "3"},      {"k2", "0.001"},
             {"k4", "0.4"},        {"r_ant", "75"},     {"degree", "6"},
             {"trajectory", "iid"}, {"hpa", "rapp"},    {"hpa_smoothness", "3"},
             {"hpa_sat_dbm", "20"}, {"n_symbols", "123"}, {"seed", "9"},
             {"confidence", "0.95"}, {"threads", "2"},  {"n_tones", "8"},
             {"strict", "false"},  {"out", "x.csv"}});
  CHECK(opts.sim.waveform.scheme == waveform::Scheme::SrDcsk);
  CHECK(opts.sim.waveform.beta == 60);
  CHECK(opts.sim.waveform.beta_r == 15);
  CHECK(opts.sim.correlator == receiver::CorrelatorMode::None);
  CHECK(opts.sim.channel.m == 4.0);
  CHECK(opts.sim.budget.p_t_watts == doctest::Approx(1.0));
  CHECK(opts.sim.budget.distance_m == 25.0);
  CHECK(opts.sim.budget.path_loss_exponent == 3.0);
  CHECK(opts.sim.budget.k2 == 0.001);
  CHECK(opts.sim.budget.k4 == 0.4);
  CHECK(opts.sim.budget.r_ant_ohms == 75.0);
  CHECK(opts.sim.chaos.degree == 6);
  CHECK(opts.sim.chaos.mode == chaos::TrajectoryMode::IidInvariant);
  CHECK(opts.sim.hpa.kind == analysis::HpaKind::Rapp);
  CHECK(opts.sim.hpa.smoothness == 3.0);
  CHECK(opts.sim.hpa.saturation_amplitude ==
        doctest::Approx(std::sqrt(0.1)).epsilon(1e-12));
  CHECK(opts.sim.n_symbols == 123);
  CHECK(opts.sim.seed == 9);
  CHECK(opts.sim.confidence == 0.95);
  CHECK(opts.sim.threads == 2);
  CHECK(opts.n_tones == 8);
  CHECK_FALSE(opts.strict);
  CHECK(opts.out_path == "x.csv");
}

TEST_CASE("dbm conversion round trip") {
  CHECK(cli::watts_from_dbm(30.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cli::watts_from_dbm(0.0) == doctest::Approx(1e-3).epsilon(1e-12));
  CHECK(cli::dbm_from_watts(cli::watts_from_dbm(17.0)) ==
        doctest::Approx(17.0).epsilon(1e-12));
}

TEST_CASE("csv header is the pinned contract") {
  CHECK(cli::csv_header() ==
        "experiment,sweep_param,sweep_value,scheme,psi,m,beta,beta_r,"
        "n_symbols,seed,z_analytic,z_mc_mean,z_mc_se,ci_low,ci_high,"
        "papr_emp,papr_theory\n");
}

TEST_CASE("custom experiment emits a single well-formed row") {
  cli::ExperimentSpec spec{"custom", tiny_options()};
  const auto result = cli::run_experiment(spec);
  CHECK(result.exit_code == cli::kOk);
  const auto lines = split_lines(result.csv);
  REQUIRE(lines.size() == 2);
  CHECK(lines[0] + "\n" == cli::csv_header());
  CHECK(count_fields(lines[1]) == 17);
  CHECK(lines[1].find("custom,none,") == 0);
  CHECK(lines[1].find("dcsk") != std::string::npos);
  CHECK(result.summary.find("max relative deviation") != std::string::npos);
}

TEST_CASE("unknown experiment and empty grids are config errors") {
  CHECK_THROWS_AS(cli::run_experiment({"fig99", tiny_options()}),
                  cli::ConfigError);
  CHECK_THROWS_AS(cli::run_sweep("beta", {}, tiny_options()), cli::ConfigError);
  CHECK_THROWS_AS(cli::run_sweep("voltage", {1.0}, tiny_options()),
                  cli::ConfigError);
  CHECK_THROWS_AS(cli::run_sweep("beta", {2.5}, tiny_options()),
                  cli::ConfigError);
  CHECK_THROWS_AS(cli::run_compare_multisine(tiny_options(), {}, {30.0}),
                  cli::ConfigError);
}

TEST_CASE("sweep emits one row per grid value with that value") {
  const auto result = cli::run_sweep("beta", {5.0, 10.0, 15.0}, tiny_options());
  CHECK(result.exit_code == cli::kOk);
  const auto lines = split_lines(result.csv);
  REQUIRE(lines.size() == 4);
  CHECK(lines[1].find("sweep_beta,beta,5,") == 0);
  CHECK(lines[2].find("sweep_beta,beta,10,") == 0);
  CHECK(lines[3].find("sweep_beta,beta,15,") == 0);
}

TEST_CASE("invalid sweep points are skipped with a note") {
  cli::Options opts = tiny_options();
  opts.sim.waveform.scheme = waveform::Scheme::SrDcsk;
  opts.sim.waveform.beta = 12;
  const auto result = cli::run_sweep("beta_r", {3.0, 5.0, 6.0}, opts);
  const auto lines = split_lines(result.csv);
  REQUIRE(lines.size() == 3);  // 5 does not divide 12
  CHECK(result.summary.find("skipped beta_r=5") != std::string::npos);
}

TEST_CASE("tone sweep produces multisine rows") {
  const auto result = cli::run_sweep("n_tones", {2.0, 4.0}, tiny_options());
  const auto lines = split_lines(result.csv);
  REQUIRE(lines.size() == 3);
  CHECK(lines[1].find("multisine") != std::string::npos);
  CHECK(lines[2].find("multisine") != std::string::npos);
}

TEST_CASE("peak-to-average report row respects the bound") {
  const auto result = cli::run_papr(tiny_options());
  const auto lines = split_lines(result.csv);
  REQUIRE(lines.size() == 2);
  std::istringstream row(lines[1]);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(row, field, ',')) fields.push_back(field);
  REQUIRE(fields.size() == 17);
  const double emp = std::stod(fields[15]);
  const double theory = std::stod(fields[16]);
  CHECK(emp <= theory);
  CHECK(theory == 100.0);  // default spreading factor 25, full correlator
}

TEST_CASE("multisine comparison covers both waveform families") {
  cli::Options opts = tiny_options();
  opts.sim.waveform.scheme = waveform::Scheme::OptimalSr;
  opts.sim.waveform.beta = 4;
  opts.sim.waveform.beta_r = 1;
  const auto result = cli::run_compare_multisine(opts, {2, 4}, {25.0, 30.0});
  const auto lines = split_lines(result.csv);
  REQUIRE(lines.size() == 1 + 2 + 4);
  CHECK(lines[1].find("optimal_sr") != std::string::npos);
  CHECK(lines[3].find("multisine") != std::string::npos);
  // infinity must round-trip as the literal "inf" in CSV when selected
  cli::Options nofade = opts;
  nofade.sim.channel.m = channel::kNoFading;
  const auto inf_result = cli::run_compare_multisine(nofade, {2}, {30.0});
  CHECK(split_lines(inf_result.csv)[1].find(",inf,") != std::string::npos);
}

TEST_CASE("experiment names list every canonical grid") {
  const auto& names = cli::experiment_names();
  CHECK(names.size() == 8);
  CHECK(names.front() == "fig3_beta_sweep");
  CHECK(names.back() == "custom");
}

TEST_CASE("selftest passes on defaults") {
  const auto result = cli::run_selftest(cli::Options{});
  CHECK(result.exit_code == cli::kOk);
  CHECK(result.csv.empty());
  CHECK(result.summary.find("FAIL") == std::string::npos);
}
