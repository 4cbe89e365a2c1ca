#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "plb/oracle.hpp"
#include "plb/validation.hpp"

using namespace plb;

TEST_CASE("enumeration basics") {
    const PLInstance uniform({1.0, 1.0, 1.0});
    const Subset all3{0, 1, 2};
    const DiscreteDistribution full = enumerate_top_m_distribution(uniform, all3, 3);
    CHECK(full.support.size() == 6);
    for (double p : full.probs) CHECK(p == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

    const DiscreteDistribution winners = enumerate_top_m_distribution(uniform, all3, 1);
    for (std::size_t i = 0; i < winners.support.size(); ++i) {
        CHECK(winners.probs[i] ==
              doctest::Approx(winner_prob(uniform, all3, winners.support[i].front()))
                  .epsilon(1e-12));
    }

    const PLInstance skew({2.0, 1.0, 1.0});
    const DiscreteDistribution top2 = enumerate_top_m_distribution(skew, all3, 2);
    const int slot = top2.find({0, 1});
    REQUIRE(slot >= 0);
    CHECK(top2.probs[static_cast<std::size_t>(slot)] == doctest::Approx(0.25).epsilon(1e-12));

    const PLInstance big({1, 1, 1, 1, 1, 1, 1, 1, 1});
    std::vector<int> nine;
    for (int i = 0; i < 9; ++i) nine.push_back(i);
    CHECK_THROWS_AS(enumerate_top_m_distribution(big, Subset{nine}, 2), std::invalid_argument);
}

TEST_CASE("two enumeration routes agree") {
    const CheckResult res = check_enumeration_equivalence(2026);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("tv distance") {
    DiscreteDistribution p;
    p.support = {{0}, {1}};
    p.probs = {0.6, 0.4};
    DiscreteDistribution q = p;
    CHECK(tv_distance(p, q) == doctest::Approx(0.0));

    q.probs = {0.4, 0.6};
    CHECK(tv_distance(p, q) == doctest::Approx(0.2).epsilon(1e-12));

    DiscreteDistribution point = p;
    point.probs = {1.0, 0.0};
    DiscreteDistribution other = p;
    other.probs = {0.0, 1.0};
    CHECK(tv_distance(point, other) == doctest::Approx(1.0));

    DiscreteDistribution mismatched;
    mismatched.support = {{1}, {0}};
    mismatched.probs = {0.4, 0.6};
    CHECK_THROWS_AS(tv_distance(p, mismatched), std::invalid_argument);
}

TEST_CASE("winner KL") {
    const PLInstance a({0.6, 0.4, 0.4});
    const Subset pair{0, 1};
    CHECK(winner_kl(a, a, pair) == doctest::Approx(0.0));

    const LowerBoundFamily fam = build_lower_bound_instances(2, 0.1, 1.0);
    const double kl_fwd = winner_kl(fam.true_instance, fam.alternatives[0], Subset{0, 1});
    const double kl_bwd = winner_kl(fam.alternatives[0], fam.true_instance, Subset{0, 1});
    CHECK(kl_fwd == doctest::Approx(0.2 * std::log(1.5)).epsilon(1e-12));
    CHECK(kl_fwd <= lower_bound_kl_cap(2, 0.1));
    CHECK(kl_fwd != kl_bwd);  // KL is asymmetric in general
}

TEST_CASE("lower-bound instance construction") {
    const LowerBoundFamily fam = build_lower_bound_instances(3, 0.1, 1.0);
    CHECK(fam.true_instance.thetas()[0] == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(fam.true_instance.thetas()[1] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(fam.true_instance.thetas()[2] == doctest::Approx(0.4).epsilon(1e-12));

    REQUIRE(fam.alternatives.size() == 2);
    const PLInstance& alt1 = fam.alternatives[0];
    CHECK(alt1.thetas()[0] == doctest::Approx(0.24).epsilon(1e-12));
    CHECK(alt1.thetas()[1] == doctest::Approx(0.36).epsilon(1e-12));
    CHECK(alt1.thetas()[2] == doctest::Approx(0.16).epsilon(1e-12));
    CHECK(alt1.best_set() == std::vector<int>{1});

    // item 0 sits exactly at the eps boundary of each perturbed instance,
    // and the strict comparison must reject it
    for (const PLInstance& alt : fam.alternatives) {
        CHECK(pairwise_prob(alt, 0, alt.best_set().front()) <= 0.5 - 0.1 + 1e-12);
        CHECK_FALSE(is_eps_optimal(alt, 0, 0.1));
    }

    CHECK_THROWS_AS(build_lower_bound_instances(3, 0.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_lower_bound_instances(3, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("kl bound suite") {
    const CheckResult res = check_kl_bound(2026);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("sampler exactness suite") {
    const CheckResult res = check_sampler_exactness(2026);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("coupling equivalence suite") {
    const CheckResult res = check_coupling_equivalence(2026);
    INFO(res.detail);
    CHECK(res.pass);
}
