#include <cmath>
#include <limits>
#include <stdexcept>

#include <doctest.h>

#include "chaoswpt/analysis.hpp"

using namespace chaoswpt;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
const double kEps1 = channel::LinkBudget{}.eps1();
const double kEps2 = channel::LinkBudget{}.eps2();
}  // namespace

TEST_CASE("harvested-DC closed forms at the default link budget") {
  // values computed independently from the expressions and frozen here
  CHECK(analysis::z_mc(kEps1, kEps2, 25, 1.0) ==
        doctest::Approx(0.00030139794921875).epsilon(1e-13));
  CHECK(analysis::z_mnc(kEps1, kEps2, 25, 1.0) ==
        doctest::Approx(2.7964721679687498e-05).epsilon(1e-13));
  CHECK(analysis::z_um_c(kEps1, kEps2, 25, 1.0) ==
        doctest::Approx(0.00016538244628906248).epsilon(1e-13));
  CHECK(analysis::z_mc(kEps1, kEps2, 25, kInf) ==
        doctest::Approx(0.000163980224609375).epsilon(1e-13));
  CHECK(analysis::z_sr_opt(kEps1, kEps2, 25, 1.0) ==
        doctest::Approx(0.011392614042968749).epsilon(1e-13));
  CHECK(analysis::z_sr(kEps1, kEps2, 60, 1, 1.0) ==
        doctest::Approx(0.36597467843505854).epsilon(1e-13));
  CHECK(analysis::z_mc(kEps1, kEps2, 60, 1.0) ==
        doctest::Approx(0.0016656480468749998).epsilon(1e-13));
}

TEST_CASE("sample-wise harvesting cannot see the modulation") {
  for (int beta : {2, 5, 25, 60}) {
    for (double m : {1.0, 4.0, kInf}) {
      CHECK(analysis::z_um_nc(kEps1, kEps2, beta, m) ==
            analysis::z_mnc(kEps1, kEps2, beta, m));
    }
  }
}

TEST_CASE("full-reference replication collapses to the two-sided frame") {
  const double a = analysis::z_sr(kEps1, kEps2, 60, 60, 1.0);
  const double b = analysis::z_mc(kEps1, kEps2, 60, 1.0);
  CHECK(a == doctest::Approx(b).epsilon(1e-13));
  // single-chip reference equals the dedicated expression
  CHECK(analysis::z_sr(kEps1, kEps2, 60, 1, 1.0) ==
        doctest::Approx(analysis::z_sr_opt(kEps1, kEps2, 60, 1.0)).epsilon(1e-13));
}

TEST_CASE("shorter references harvest more") {
  const int divisors[] = {1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60};
  double prev = std::numeric_limits<double>::infinity();
  for (int beta_r : divisors) {
    const double z = analysis::z_sr(kEps1, kEps2, 60, beta_r, 1.0);
    CHECK(z < prev);
    prev = z;
  }
}

TEST_CASE("z_sr validates divisibility and supports the limit form") {
  CHECK_THROWS_AS(analysis::z_sr(kEps1, kEps2, 60, 7, 1.0),
                  std::invalid_argument);
  // beta_r = 0 selects the continuous limit
  const double limit = analysis::z_sr(kEps1, kEps2, 10, 0, 1.0);
  const double by_hand = kEps1 * 50.0 + kEps2 * (3.0 * 2.0 / 8.0) * 1e4;
  CHECK(limit == doctest::Approx(by_hand).epsilon(1e-13));
}

TEST_CASE("fading-gap sign structure at (m1, m2) = (10, 1)") {
  CHECK(analysis::delta_gap(kEps2, 3, 10.0, 1.0) == 0.0);  // exact crossover
  CHECK(analysis::delta_gap(kEps2, 1, 10.0, 1.0) < 0.0);
  CHECK(analysis::delta_gap(kEps2, 2, 10.0, 1.0) < 0.0);
  for (int beta = 4; beta <= 64; ++beta) {
    CHECK(analysis::delta_gap(kEps2, beta, 10.0, 1.0) > 0.0);
  }
}

TEST_CASE("fading gap equals the difference of the closed forms") {
  for (int beta : {1, 2, 3, 7, 25}) {
    for (double m1 : {2.0, 10.0, 40.0}) {
      const double direct = analysis::delta_gap(kEps2, beta, m1, 1.0);
      const double diff = analysis::z_mc(kEps1, kEps2, beta, m1) -
                          analysis::z_um_c(kEps1, kEps2, beta, 1.0);
      CHECK(direct == doctest::Approx(diff).epsilon(1e-11).scale(kEps2));
    }
  }
}

TEST_CASE("modulation-threshold values") {
  auto opt = analysis::beta_opt(40.0, 1.0);
  REQUIRE(opt.has_value());
  CHECK(*opt == 10.5);
  CHECK(*analysis::beta_opt(80.0, 1.0) == 20.5);
  CHECK(*analysis::beta_opt(100.0, 1.0) == 25.5);
  CHECK(*analysis::beta_opt(150.0, 1.0) == 38.0);
  CHECK(*analysis::beta_opt(10.0, 1.0) == 3.0);
  // no finite threshold when the modulated link stops fading entirely
  CHECK_FALSE(analysis::beta_opt(kInf, 1.0).has_value());
  CHECK(analysis::beta_opt(kInf, 2.0).has_value());
}

TEST_CASE("closed_form_dc dispatch matches the family expressions") {
  waveform::WaveformSpec spec;
  spec.beta = 25;
  channel::ChannelParams ch;
  channel::LinkBudget budget;

  auto z = analysis::closed_form_dc(spec, receiver::CorrelatorMode::FullSymbol,
                                    ch, budget);
  REQUIRE(z.has_value());
  CHECK(*z == doctest::Approx(analysis::z_mc(kEps1, kEps2, 25, 1.0)).epsilon(1e-13));

  z = analysis::closed_form_dc(spec, receiver::CorrelatorMode::None, ch, budget);
  REQUIRE(z.has_value());
  CHECK(*z == doctest::Approx(analysis::z_mnc(kEps1, kEps2, 25, 1.0)).epsilon(1e-13));

  spec.scheme = waveform::Scheme::Unmodulated;
  z = analysis::closed_form_dc(spec, receiver::CorrelatorMode::FullSymbol, ch,
                               budget);
  REQUIRE(z.has_value());
  CHECK(*z ==
        doctest::Approx(analysis::z_um_c(kEps1, kEps2, 25, 1.0)).epsilon(1e-13));

  spec.scheme = waveform::Scheme::OptimalSr;
  spec.beta_r = 1;
  z = analysis::closed_form_dc(spec, receiver::CorrelatorMode::FullSymbol, ch,
                               budget);
  REQUIRE(z.has_value());
  CHECK(*z ==
        doctest::Approx(analysis::z_sr_opt(kEps1, kEps2, 25, 1.0)).epsilon(1e-13));

  // sample-wise harvesting of replicated references has no closed form here
  spec.scheme = waveform::Scheme::SrDcsk;
  spec.beta = 60;
  spec.beta_r = 15;
  CHECK_FALSE(analysis::closed_form_dc(spec, receiver::CorrelatorMode::None, ch,
                                       budget)
                  .has_value());
}

TEST_CASE("closed_form_dc folds the amplifier into the delivered power") {
  waveform::WaveformSpec spec;
  spec.beta = 25;
  channel::ChannelParams ch;
  channel::LinkBudget budget;
  analysis::HpaModel hpa;
  hpa.kind = analysis::HpaKind::Rapp;

  const auto with_hpa = analysis::closed_form_dc(
      spec, receiver::CorrelatorMode::FullSymbol, ch, budget, hpa);
  REQUIRE(with_hpa.has_value());

  channel::LinkBudget delivered = budget;
  delivered.p_t_watts = analysis::hpa_delivered_power(budget.p_t_watts, hpa);
  CHECK(delivered.p_t_watts < budget.p_t_watts);  // soft limiter compresses
  const double expected = analysis::z_mc(delivered.eps1(), delivered.eps2(), 25, 1.0);
  CHECK(*with_hpa == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("rapp transfer basics") {
  analysis::HpaModel hpa;
  hpa.kind = analysis::HpaKind::Rapp;
  const double a_sat = hpa.saturation_amplitude;
  CHECK(analysis::hpa_apply(1e-6, hpa) == doctest::Approx(1e-6).epsilon(1e-6));
  CHECK(analysis::hpa_apply(100.0, hpa) <= a_sat * (1.0 + 1e-12));
  CHECK(analysis::hpa_apply(100.0, hpa) == doctest::Approx(a_sat).epsilon(1e-3));
  CHECK(analysis::hpa_apply(-100.0, hpa) ==
        doctest::Approx(-analysis::hpa_apply(100.0, hpa)));
  analysis::HpaModel ideal;
  CHECK(analysis::hpa_apply(3.7, ideal) == 3.7);
  CHECK(analysis::hpa_delivered_power(4.0, ideal) == 4.0);
}

TEST_CASE("multisine time averages are exact trigonometric moments") {
  // N = 1: average of s^2 is P, of s^4 is (3/2) P^2, peak 2P
  const auto one = analysis::multisine_time_moments(1, 3.0, 16, 1);
  CHECK(one.t2 == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(one.t4 == doctest::Approx(13.5).epsilon(1e-12));
  CHECK(one.peak == doctest::Approx(6.0).epsilon(1e-12));

  const auto four = analysis::multisine_time_moments(4, 2.0, 64, 1);
  CHECK(four.t2 == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(four.peak / four.t2 == doctest::Approx(8.0).epsilon(1e-9));

  // resolution guard: fewer than 8 samples per tone is rejected
  CHECK_THROWS_AS(analysis::multisine_time_moments(4, 1.0, 16, 1),
                  std::invalid_argument);
}

TEST_CASE("multisine expected DC assembles gains, fading and time averages") {
  analysis::MultisineConfig cfg;
  cfg.n_tones = 4;
  cfg.p_t_watts = 1.0;
  cfg.samples_per_period = 64;

  const auto mm = analysis::multisine_time_moments(4, 1.0, 64, 1);
  const double g = cfg.budget.path_gain();
  const double k2r = cfg.budget.k2_rant();
  const double k4r2 = cfg.budget.k4_rant2();

  cfg.channel.m = kInf;
  CHECK(analysis::multisine_dc(cfg) ==
        doctest::Approx(k2r * g * mm.t2 + k4r2 * g * g * mm.t4).epsilon(1e-12));
  cfg.channel.m = 1.0;  // fourth-order term doubles under Rayleigh fading
  CHECK(analysis::multisine_dc(cfg) ==
        doctest::Approx(k2r * g * mm.t2 + 2.0 * k4r2 * g * g * mm.t4)
            .epsilon(1e-12));
}
