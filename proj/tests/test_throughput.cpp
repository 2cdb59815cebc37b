#include <stdexcept>
#include <algorithm>
#include <random>

#include "crsense/throughput.hpp"
#include "doctest.h"
#include "test_util.hpp"

using namespace crsense;

namespace {

// Fixed two-channel scenario with hand-picked error probabilities.
// Channel 0: theta1 = 0.4, theta2 = 0.6 (t_c = 0, pi0 = 0.4, gamma = 1).
// Channel 1: theta1 = theta2 = 0.5.
Scenario hand_scenario() {
  std::vector<SuProfile> sus(2);
  sus[0] = {0, 2, {0.1, 0.1}, {0.2, 0.1}};
  sus[1] = {1, 2, {0.1, 0.1}, {0.2, 0.1}};
  return make_scenario(0.0, {0.4, 0.5}, {1.0, 1.0}, std::move(sus));
}

}  // namespace

TEST_CASE("likelihoods: singleton complementary pairs") {
  const Scenario s = hand_scenario();
  const auto out = likelihoods({0}, 0, s);
  REQUIRE(out.size() == 2);
  CHECK(out[0].reports == 0);
  CHECK(out[0].likelihood_idle == doctest::Approx(0.9).epsilon(1e-15));
  CHECK(out[1].likelihood_idle == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(out[1].likelihood_busy == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(out[0].likelihood_busy == doctest::Approx(0.2).epsilon(1e-15));
}

TEST_CASE("likelihoods: two SUs, hand product of the idle factors") {
  const Scenario s = hand_scenario();
  const auto out = likelihoods({0, 1}, 0, s);
  REQUIRE(out.size() == 4);
  CHECK(out[0].reports == 0);  // y = (0,0)
  CHECK(out[0].likelihood_idle == doctest::Approx(0.81).epsilon(1e-15));
  CHECK(out[3].reports == 3);  // y = (1,1)
  CHECK(out[3].likelihood_idle == doctest::Approx(0.01).epsilon(1e-15));
}

TEST_CASE("likelihoods: normalization per hypothesis") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Scenario s = test::random_scenario(rng, 3, 6);
    std::vector<int> set;
    for (int i = 0; i < 6; ++i)
      if (rng() % 2) set.push_back(i);
    if (set.empty()) set.push_back(0);
    const auto out = likelihoods(set, static_cast<int>(rng() % 3), s);
    double idle = 0.0, busy = 0.0;
    for (const auto& o : out) {
      idle += o.likelihood_idle;
      busy += o.likelihood_busy;
    }
    CHECK(idle == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(busy == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("likelihoods: guard and empty-set errors") {
  const Scenario s = hand_scenario();
  CHECK_THROWS_WITH_AS(likelihoods({}, 0, s), doctest::Contains("nonempty"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(likelihoods({0, 1}, 0, s, 1),
                       doctest::Contains("too large for exhaustive"),
                       std::invalid_argument);
}

TEST_CASE("channel_throughput: empty set yields theta2") {
  const Scenario s = hand_scenario();
  CHECK(channel_throughput({}, 0, s) == s.channels[0].theta2);
  CHECK(channel_throughput({}, 1, s) == s.channels[1].theta2);
}

TEST_CASE("channel_throughput: hand-enumerated examples") {
  const Scenario s = hand_scenario();
  // one SU: max(0.36, 0.12) + max(0.04, 0.48) = 0.84
  CHECK(channel_throughput({0}, 0, s) == doctest::Approx(0.84).epsilon(1e-14));
  // two SUs on the symmetric channel: 0.405 + 0.045 + 0.045 + 0.405 = 0.9
  CHECK(channel_throughput({0, 1}, 1, s) == doctest::Approx(0.9).epsilon(1e-14));
}

TEST_CASE("channel_throughput: perfect-reporting closed form") {
  // pf = 0 everywhere and theta1 >= theta2 * prod(pm):
  // value = theta1 + theta2 * (1 - prod(pm))
  std::vector<SuProfile> sus(3);
  sus[0] = {0, 1, {0.0}, {0.3}};
  sus[1] = {1, 1, {0.0}, {0.5}};
  sus[2] = {2, 1, {0.0}, {0.7}};
  const Scenario s = make_scenario(0.2, {0.5}, {0.8}, std::move(sus));
  const double t1 = s.channels[0].theta1, t2 = s.channels[0].theta2;
  const double prod = 0.3 * 0.5 * 0.7;
  REQUIRE(t1 >= t2 * prod);
  CHECK(channel_throughput({0, 1, 2}, 0, s) ==
        doctest::Approx(t1 + t2 * (1.0 - prod)).epsilon(1e-13));
}

TEST_CASE("single_su_throughput: closed-form cases") {
  const Scenario s = hand_scenario();
  CHECK(single_su_throughput(0, 0, s) == doctest::Approx(0.84).epsilon(1e-15));

  std::vector<SuProfile> sus(2);
  sus[0] = {0, 1, {0.0}, {0.0}};   // perfect sensor
  sus[1] = {1, 1, {0.5}, {0.5}};   // coin flip
  const Scenario t = make_scenario(0.0, {0.3}, {2.0}, std::move(sus));
  const double t1 = t.channels[0].theta1, t2 = t.channels[0].theta2;
  CHECK(single_su_throughput(0, 0, t) == t1 + t2);
  CHECK(single_su_throughput(1, 0, t) == std::max(t1, t2));
}

TEST_CASE("closed form equals enumeration on random singletons, exactly") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10000; ++trial) {
    const Scenario s = test::random_scenario(rng, 1, 1);
    CHECK(channel_throughput({0}, 0, s) == single_su_throughput(0, 0, s));
  }
}

TEST_CASE("Lemma-style bounds on random singletons") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10000; ++trial) {
    const Scenario s = test::random_scenario(rng, 1, 1);
    const double t1 = s.channels[0].theta1, t2 = s.channels[0].theta2;
    const double u = single_su_throughput(0, 0, s);
    CHECK(u >= std::max(t1, t2) - 1e-12);
    CHECK(u <= t1 + t2 + 1e-12);
  }
}

TEST_CASE("cap, floor, monotonicity, coin-flip neutrality") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 2, n = 6;
    Scenario s = test::random_scenario(rng, m, n);
    // make SU 5 a coin flipper on every channel
    for (int k = 0; k < m; ++k) {
      s.sus[5].pf[k] = 0.5;
      s.sus[5].pm[k] = 0.5;
    }
    const int k = static_cast<int>(rng() % m);
    const double t1 = s.channels[k].theta1, t2 = s.channels[k].theta2;

    std::vector<int> set;
    for (int i = 0; i < 4; ++i)
      if (rng() % 2) set.push_back(i);

    const double base = channel_throughput(set, k, s);
    CHECK(base <= t1 + t2 + 1e-12);
    if (!set.empty()) CHECK(base >= std::max(t1, t2) - 1e-12);

    // adding an SU never hurts (also covers the empty set -> theta2 case)
    std::vector<int> grown = set;
    grown.push_back(4);
    CHECK(channel_throughput(grown, k, s) >= base - 1e-12);

    if (!set.empty()) {
      std::vector<int> with_coin = set;
      with_coin.push_back(5);
      CHECK(channel_throughput(with_coin, k, s) ==
            doctest::Approx(base).epsilon(1e-12));
    }
  }
}

TEST_CASE("system_throughput: edge cases and feasibility") {
  const Scenario s = hand_scenario();
  Assignment empty{{{}, {}}};
  CHECK(system_throughput(empty, s) ==
        s.channels[0].theta2 + s.channels[1].theta2);

  Assignment a{{{0, 1}, {}}};
  CHECK(system_throughput(a, s) ==
        channel_throughput({0, 1}, 0, s) + s.channels[1].theta2);

  const double cap = s.channels[0].theta1 + s.channels[0].theta2 +
                     s.channels[1].theta1 + s.channels[1].theta2;
  Assignment b{{{0, 1}, {0, 1}}};
  CHECK(system_throughput(b, s) <= cap + 1e-12);

  // SU 0 has budget 2; using it three times must name it
  std::vector<SuProfile> sus(1);
  sus[0] = {0, 1, {0.1, 0.1}, {0.1, 0.1}};
  const Scenario t = make_scenario(0.0, {0.5, 0.5}, {1.0, 1.0}, std::move(sus));
  Assignment over{{{0}, {0}}};
  CHECK_THROWS_WITH_AS(system_throughput(over, t), doctest::Contains("SU 0"),
                       std::invalid_argument);
}

TEST_CASE("invalid scenarios are rejected with field paths") {
  std::vector<SuProfile> sus(1);
  sus[0] = {0, 1, {1.5}, {0.1}};
  CHECK_THROWS_WITH_AS(make_scenario(0.2, {0.5}, {1.0}, std::move(sus)),
                       doctest::Contains("su[0].pf[0]"), std::invalid_argument);
}
