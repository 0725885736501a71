#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cosmo/model.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace cosmo;

namespace {

TransferMatrix diag(std::array<double, 5> d) { return TransferMatrix(d); }
ResourceVector vec(std::array<double, 5> v) { return ResourceVector(v); }

oracle::Regime to_oracle(ConstraintRegime r) {
  switch (r) {
    case ConstraintRegime::Default: return oracle::Regime::Default;
    case ConstraintRegime::Mobilization: return oracle::Regime::Mobilization;
    case ConstraintRegime::Cooperation: return oracle::Regime::Cooperation;
  }
  return oracle::Regime::Default;
}

}  // namespace

TEST_CASE("resource vectors reject negative and non-finite entries") {
  CHECK_THROWS_AS(vec({1, -1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(vec({1, 1, std::nan(""), 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(vec({1, 1, 1, std::numeric_limits<double>::infinity(), 1}),
                  std::invalid_argument);
  CHECK_NOTHROW(vec({0, 0, 0, 0, 0}));
}

TEST_CASE("transfer matrices need positive finite diagonals") {
  CHECK_THROWS_AS(diag({1, 0, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(diag({1, 1, 1, 1, -2}), std::invalid_argument);
  CHECK(diag({1.8, 1.8, 1.8, 1.8, 1.8}).trace() == doctest::Approx(9.0));
}

TEST_CASE("apply_transfer multiplies elementwise") {
  CHECK(apply_transfer(TransferMatrix::uniform(1.8), ResourceVector::filled(1.0)) ==
        ResourceVector::filled(1.8));
  const auto v = vec({3, 0.5, 7, 11, 13});
  CHECK(apply_transfer(TransferMatrix::uniform(1.0), v) == v);
  const auto r = apply_transfer(diag({2.5, 1.8, 1.8, 1.8, 1.2}), ResourceVector::filled(2.0));
  CHECK(r == vec({5.0, 3.6, 3.6, 3.6, 2.4}));
}

TEST_CASE("apply_transfer reports overflow") {
  const auto big = ResourceVector::filled(std::numeric_limits<double>::max());
  CHECK_THROWS_AS(apply_transfer(TransferMatrix::uniform(2.0), big), OverflowError);
}

TEST_CASE("growth composes to powers of the diagonal") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(1.0, 2.5);
  std::uniform_real_distribution<double> start(0.1, 50.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::array<double, 5> g{}, v0{};
    for (int k = 0; k < 5; ++k) {
      g[k] = coef(rng);
      v0[k] = start(rng);
    }
    const int n = 1 + trial % 20;
    ResourceVector v = vec(v0);
    for (int i = 0; i < n; ++i) v = apply_transfer(diag(g), v);
    for (int k = 0; k < 5; ++k) {
      const double expected = std::pow(g[k], n) * v0[k];
      CHECK(std::fabs(v[static_cast<std::size_t>(k)] - expected) <= 1e-9 * expected);
    }
  }
}

TEST_CASE("matrix_regime picks one regime") {
  CHECK(matrix_regime({PrivateAction::DoNothing, {}, false}) == ConstraintRegime::Default);
  CHECK(matrix_regime({PrivateAction::MobilizeForWar, {}, false}) ==
        ConstraintRegime::Mobilization);
  CHECK(matrix_regime({PrivateAction::DoNothing, {InitiateCooperation{"X"}}, false}) ==
        ConstraintRegime::Cooperation);
  CHECK(matrix_regime({PrivateAction::DoNothing, {}, true}) == ConstraintRegime::Cooperation);
  CHECK(matrix_regime({PrivateAction::MobilizeForWar, {InitiateCooperation{"X"}}, true}) ==
        ConstraintRegime::Mobilization);
  CHECK(matrix_regime({PrivateAction::DoNothing, {ExpressFriendliness{"X"}}, false}) ==
        ConstraintRegime::Default);
}

TEST_CASE("check_matrix examples") {
  CHECK(check_matrix(TransferMatrix::uniform(1.8), ConstraintRegime::Default).accepted());
  CHECK(check_matrix(diag({2.3, 2.3, 1.7, 1.7, 1.0}), ConstraintRegime::Mobilization).accepted());

  const auto too_strong = check_matrix(diag({3.6, 1.35, 1.35, 1.35, 1.35}),
                                       ConstraintRegime::Mobilization);
  REQUIRE_FALSE(too_strong.accepted());
  CHECK(too_strong.violation == MatrixViolation::MilitaryAboveMaximum);
  CHECK(too_strong.reason.find("military exceeds 3.5") != std::string::npos);

  const auto off_sum = check_matrix(diag({2.5, 1.8, 1.8, 1.8, 1.2}),
                                    ConstraintRegime::Mobilization);
  REQUIRE_FALSE(off_sum.accepted());
  CHECK(off_sum.violation == MatrixViolation::DiagonalSumNotEqual);
  CHECK(off_sum.reason.find("diagonal sum 9.1") != std::string::npos);

  CHECK(check_matrix(diag({1.5, 2.125, 2.125, 2.125, 2.125}), ConstraintRegime::Cooperation)
            .accepted());
  CHECK(check_matrix(diag({1.6, 2.0, 2.0, 2.0, 2.0}), ConstraintRegime::Cooperation).violation ==
        MatrixViolation::MilitaryNotBelowCooperationCap);
  CHECK(check_matrix(diag({2.0, 2.0, 2.0, 2.0, 2.0}), ConstraintRegime::Default).violation ==
        MatrixViolation::DiagonalSumExceeded);
  CHECK(check_matrix(diag({0.9, 1.0, 1.0, 1.0, 1.0}), ConstraintRegime::Default).violation ==
        MatrixViolation::EntryBelowMinimum);
  CHECK(check_matrix(diag({1.0, 2.6, 1.0, 1.0, 1.0}), ConstraintRegime::Default).violation ==
        MatrixViolation::EntryAboveMaximum);
}

TEST_CASE("check_matrix bounds are inclusive within epsilon") {
  CHECK(check_matrix(diag({1.0, 1.0, 1.0, 1.0, 1.0}), ConstraintRegime::Default).accepted());
  CHECK(check_matrix(diag({2.5, 2.5, 1.0, 1.0, 1.0 + 1e-10}), ConstraintRegime::Default)
            .accepted());
  CHECK(check_matrix(diag({3.5, 1.375, 1.375, 1.375, 1.375}), ConstraintRegime::Mobilization)
            .accepted());
  CHECK_FALSE(check_matrix(diag({1.6 - 5e-10, 2, 2, 2, 2}), ConstraintRegime::Cooperation)
                  .accepted());
  CHECK(check_matrix(diag({1.6 - 2e-9, 2, 2, 2, 2}), ConstraintRegime::Cooperation).accepted());
}

TEST_CASE("check_matrix agrees with the predicate oracle on generated matrices") {
  for (auto regime : {ConstraintRegime::Default, ConstraintRegime::Mobilization,
                      ConstraintRegime::Cooperation}) {
    const double mil_hi = regime == ConstraintRegime::Mobilization  ? 3.5
                          : regime == ConstraintRegime::Cooperation ? 1.6
                                                                    : 2.5;
    const double target = regime == ConstraintRegime::Cooperation ? 10.0 : 9.0;
    int accepted = 0, rejected = 0;
    for (const auto& d : gen::matrix_diagonals(400, mil_hi, target, 20240601)) {
      const auto result = check_matrix(diag(d), regime);
      const bool expected = oracle::matrix_admissible(d, to_oracle(regime));
      CHECK_MESSAGE(result.accepted() == expected, "regime " << to_string(regime) << " diag "
                                                              << d[0] << "," << d[1] << "," << d[2]
                                                              << "," << d[3] << "," << d[4]);
      (result.accepted() ? accepted : rejected)++;
      if (!result.accepted()) CHECK_FALSE(result.reason.empty());
    }
    CHECK(accepted > 20);
    CHECK(rejected > 20);
  }
}

TEST_CASE("war_outcome threshold") {
  CHECK(war_outcome(10, 5) == WarResult::Success);
  CHECK(war_outcome(9.9, 5) == WarResult::Failure);
  CHECK(war_outcome(0, 0) == WarResult::Success);
  CHECK(war_outcome(10 - 1e-10, 5) == WarResult::Success);
}

TEST_CASE("war_outcome is monotone") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> m(0.0, 20.0);
  for (int i = 0; i < 500; ++i) {
    const double a = m(rng), d = m(rng), bump = m(rng);
    if (war_outcome(a, d) == WarResult::Success) {
      CHECK(war_outcome(a + bump, d) == WarResult::Success);
    } else {
      CHECK(war_outcome(a, d + bump) == WarResult::Failure);
    }
  }
}

TEST_CASE("war_loot halves everything but the military") {
  CHECK(war_loot(vec({5, 8, 6, 4, 2})) == vec({0, 4, 3, 2, 1}));
  CHECK(war_loot(ResourceVector::filled(0)) == ResourceVector::filled(0));
  CHECK(war_loot(vec({3, 10, 10, 10, 10})) == vec({0, 5, 5, 5, 5}));

  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> r(0.0, 1e6);
  for (int i = 0; i < 200; ++i) {
    const auto v = vec({r(rng), r(rng), r(rng), r(rng), r(rng)});
    const auto loot = war_loot(v);
    CHECK(loot.military() == 0.0);
    double sum_v = 0, sum_loot = 0;
    for (std::size_t k = 1; k < 5; ++k) {
      sum_v += v[k];
      sum_loot += loot[k];
      CHECK(loot[k] + loot[k] == v[k]);
    }
    CHECK(sum_loot == doctest::Approx(sum_v / 2).epsilon(1e-12));
  }
}

TEST_CASE("lanchester attrition examples") {
  const auto a = lanchester_attrition(10, 5);
  CHECK(a.attacker_after == doctest::Approx(8.660254037844386).epsilon(1e-12));
  CHECK(a.defender_after == 0.0);
  const auto tie = lanchester_attrition(5, 5);
  CHECK(tie.attacker_after == 0.0);
  CHECK(tie.defender_after == 0.0);
  const auto none = lanchester_attrition(0, 7);
  CHECK(none.attacker_after == 0.0);
  CHECK(none.defender_after == 7.0);
}

TEST_CASE("lanchester attrition matches the oracle and is antisymmetric") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> m(0.0, 100.0);
  for (int i = 0; i < 500; ++i) {
    const double a = m(rng), d = m(rng);
    const auto fwd = lanchester_attrition(a, d);
    const auto rev = lanchester_attrition(d, a);
    const auto expect = oracle::square_law(a, d);
    CHECK(fwd.attacker_after == doctest::Approx(expect[0]).epsilon(1e-9));
    CHECK(fwd.defender_after == doctest::Approx(expect[1]).epsilon(1e-9));
    CHECK(fwd.attacker_after == rev.defender_after);
    CHECK(fwd.defender_after == rev.attacker_after);
    CHECK((fwd.attacker_after > 0) == (a > d));
    CHECK_FALSE((fwd.attacker_after > 0 && fwd.defender_after > 0));
  }
}

TEST_CASE("worldview names and aliases") {
  CHECK(parse_worldview("friendly_cooperation") == Worldview::Pacifism);
  CHECK(parse_worldview("Friendly Cooperation") == Worldview::Pacifism);
  CHECK(parse_worldview("concealment") == Worldview::Isolationism);
  CHECK(parse_worldview("MILITARISM") == Worldview::Militarism);
  CHECK(parse_worldview("isolationism") == Worldview::Isolationism);
  CHECK_FALSE(parse_worldview("anarchy").has_value());
  for (auto w : {Worldview::Pacifism, Worldview::Militarism, Worldview::Isolationism}) {
    CHECK(parse_worldview(to_string(w)) == w);
    CHECK(parse_worldview(prompt_name(w)) == w);
  }
}

TEST_CASE("same_public_actions ignores order and bare Do Nothing") {
  CHECK(same_public_actions({DoNothing{}}, {}));
  CHECK(same_public_actions({ExpressFriendliness{"A"}, InitiateCooperation{"B"}},
                            {InitiateCooperation{"B"}, ExpressFriendliness{"A"}}));
  CHECK_FALSE(same_public_actions({LaunchAnnihilationWar{"Earth"}}, {DoNothing{}}));
  CHECK_FALSE(same_public_actions({ExpressFriendliness{"A"}}, {InitiateCooperation{"A"}}));
}
