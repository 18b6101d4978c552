#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "chaoswpt/analysis.hpp"
#include "chaoswpt/montecarlo.hpp"

using namespace chaoswpt;

namespace {

mc::SimConfig small_config() {
  mc::SimConfig cfg;
  cfg.waveform.beta = 10;
  cfg.n_symbols = 20'000;
  cfg.seed = 99;
  return cfg;
}

}  // namespace

TEST_CASE("estimate is bit-identical across reruns and worker counts") {
  mc::SimConfig cfg = small_config();
  const auto first = mc::estimate_harvest(cfg);
  const auto again = mc::estimate_harvest(cfg);
  CHECK(first.mean == again.mean);
  CHECK(first.std_error == again.std_error);

  cfg.threads = 3;
  const auto threaded = mc::estimate_harvest(cfg);
  CHECK(first.mean == threaded.mean);
  CHECK(first.std_error == threaded.std_error);
  CHECK(first.ci_low == threaded.ci_low);
  CHECK(first.ci_high == threaded.ci_high);
}

TEST_CASE("harvest estimate brackets its closed form") {
  mc::SimConfig cfg = small_config();
  cfg.n_symbols = 50'000;
  const auto est = mc::estimate_harvest(cfg);
  REQUIRE(est.analytic.has_value());
  REQUIRE(est.rel_dev.has_value());
  CHECK(*est.rel_dev <= std::max(0.02, 3.0 * est.std_error / *est.analytic));
  CHECK(est.ci_low < est.ci_high);
  CHECK(est.n_symbols == 50'000);
}

TEST_CASE("no-fading run has no channel noise in the estimate") {
  mc::SimConfig cfg = small_config();
  cfg.channel.m = channel::kNoFading;
  cfg.waveform.beta = 5;
  const auto est = mc::estimate_harvest(cfg);
  REQUIRE(est.analytic.has_value());
  // half the symbols cancel the frame, so the fourth moment is heavy-tailed
  CHECK(*est.rel_dev <= std::max(0.02, 3.0 * est.std_error / *est.analytic));
}

TEST_CASE("replicated-reference schemes run and pair with their forms") {
  mc::SimConfig cfg = small_config();
  cfg.waveform.scheme = waveform::Scheme::SrDcsk;
  cfg.waveform.beta = 12;
  cfg.waveform.beta_r = 3;
  const auto est = mc::estimate_harvest(cfg);
  REQUIRE(est.analytic.has_value());
  CHECK(*est.rel_dev <= std::max(0.02, 3.0 * est.std_error / *est.analytic));

  // sample-wise harvesting of that frame has no paired expression
  cfg.correlator = receiver::CorrelatorMode::None;
  const auto unpaired = mc::estimate_harvest(cfg);
  CHECK_FALSE(unpaired.analytic.has_value());
  CHECK_FALSE(unpaired.rel_dev.has_value());
  CHECK(unpaired.mean > 0.0);
}

TEST_CASE("amplifier-limited run matches the delivered-power form") {
  mc::SimConfig cfg = small_config();
  cfg.waveform.beta = 5;
  cfg.channel.m = channel::kNoFading;  // chip noise only, tight comparison
  cfg.hpa.kind = analysis::HpaKind::Rapp;
  const auto est = mc::estimate_harvest(cfg);
  REQUIRE(est.analytic.has_value());
  const auto expected = analysis::closed_form_dc(
      cfg.waveform, cfg.correlator, cfg.channel, cfg.budget, cfg.hpa);
  REQUIRE(expected.has_value());
  CHECK(*est.analytic == *expected);
  CHECK(*est.rel_dev <= std::max(0.02, 3.0 * est.std_error / *expected));
}

TEST_CASE("peak ratio stays under the bound for a battery of seeds") {
  mc::SimConfig cfg = small_config();
  cfg.waveform.beta = 5;
  cfg.n_symbols = 2'000;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    cfg.seed = seed;
    cfg.correlator = receiver::CorrelatorMode::FullSymbol;
    const auto corr = mc::estimate_papr(cfg);
    CHECK(corr.theoretical == 20.0);
    CHECK(corr.empirical <= corr.theoretical);
    CHECK(corr.empirical > 0.0);

    cfg.correlator = receiver::CorrelatorMode::None;
    const auto none = mc::estimate_papr(cfg);
    CHECK(none.theoretical == 2.0);
    CHECK(none.empirical <= 2.0);
    CHECK(none.empirical > 1.0);
  }
}

TEST_CASE("peak ratio is worker-count invariant") {
  mc::SimConfig cfg = small_config();
  cfg.waveform.beta = 5;
  cfg.n_symbols = 10'000;
  const auto single = mc::estimate_papr(cfg);
  cfg.threads = 4;
  const auto multi = mc::estimate_papr(cfg);
  CHECK(single.empirical == multi.empirical);
}

TEST_CASE("sweep assigns per-point child seeds and tolerates bad points") {
  mc::SimConfig cfg = small_config();
  cfg.n_symbols = 2'000;
  const auto points = mc::sweep(mc::SweepParameter::Beta, {5.0, 10.0}, cfg);
  REQUIRE(points.size() == 2);
  REQUIRE(points[0].estimate.has_value());
  REQUIRE(points[1].estimate.has_value());
  CHECK(points[0].estimate->seed == mix_seed(cfg.seed, 0));
  CHECK(points[1].estimate->seed == mix_seed(cfg.seed, 1));
  CHECK(points[0].estimate->mean != points[1].estimate->mean);

  cfg.waveform.scheme = waveform::Scheme::SrDcsk;
  cfg.waveform.beta = 10;
  const auto bad = mc::sweep(mc::SweepParameter::BetaR, {7.0}, cfg);
  REQUIRE(bad.size() == 1);
  CHECK_FALSE(bad[0].estimate.has_value());
  CHECK(!bad[0].error.empty());

  const auto shapes =
      mc::sweep(mc::SweepParameter::M, {1.0, channel::kNoFading}, small_config());
  CHECK(shapes[1].estimate.has_value());
}

TEST_CASE("config validation rejects nonsense") {
  mc::SimConfig cfg = small_config();
  cfg.n_symbols = 0;
  CHECK_THROWS_AS(mc::estimate_harvest(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.confidence = 1.5;
  CHECK_THROWS_AS(mc::estimate_harvest(cfg), std::invalid_argument);
  cfg = small_config();
  cfg.waveform.beta_r = 7;
  cfg.waveform.scheme = waveform::Scheme::SrDcsk;
  CHECK_THROWS_AS(mc::estimate_harvest(cfg), std::invalid_argument);
}

TEST_CASE("iid chip mode agrees with trajectory mode on the estimate") {
  mc::SimConfig cfg = small_config();
  cfg.n_symbols = 40'000;
  const auto trajectory = mc::estimate_harvest(cfg);
  cfg.chaos.mode = chaos::TrajectoryMode::IidInvariant;
  const auto iid = mc::estimate_harvest(cfg);
  REQUIRE(trajectory.analytic.has_value());
  const double joint =
      3.0 * std::hypot(trajectory.std_error, iid.std_error);
  CHECK(std::abs(trajectory.mean - iid.mean) <= joint + 0.02 * *trajectory.analytic);
}

TEST_CASE("multisine baseline estimate matches its expected value") {
  analysis::MultisineConfig cfg;
  cfg.n_tones = 4;
  cfg.samples_per_period = 64;
  cfg.n_blocks = 50'000;
  cfg.seed = 17;
  const auto est = analysis::multisine_baseline(cfg);
  REQUIRE(est.analytic.has_value());
  CHECK(std::abs(est.mean - *est.analytic) <=
        std::max(0.02 * *est.analytic, 3.0 * est.std_error));

  const auto rerun = analysis::multisine_baseline(cfg);
  CHECK(est.mean == rerun.mean);
  cfg.threads = 3;
  const auto threaded = analysis::multisine_baseline(cfg);
  CHECK(est.mean == threaded.mean);
}
