#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <map>

#include "plb/choice_model.hpp"
#include "plb/oracle.hpp"

using namespace plb;

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(PLInstance({1.0}), std::invalid_argument);
    CHECK_THROWS_AS(PLInstance({1.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(PLInstance({1.0, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(PLInstance({1.0, std::numeric_limits<double>::infinity()}),
                    std::invalid_argument);

    const PLInstance tied({0.7, 1.0, 1.0});
    CHECK(tied.best_set() == std::vector<int>{1, 2});
}

TEST_CASE("winner probabilities") {
    const PLInstance even({1.0, 1.0});
    CHECK(winner_prob(even, Subset{0, 1}, 0) == doctest::Approx(0.5).epsilon(1e-12));

    const PLInstance simplex({0.5, 0.3, 0.2});
    CHECK(winner_prob(simplex, Subset{0, 1, 2}, 1) == doctest::Approx(0.3).epsilon(1e-12));

    // leader at theta(1/2 + eps) among theta(1/2 - eps), theta = 1, eps = 0.1
    const PLInstance gap({0.6, 0.4, 0.4});
    CHECK(winner_prob(gap, Subset{0, 1}, 0) == doctest::Approx(0.6).epsilon(1e-12));

    CHECK_THROWS_AS(winner_prob(gap, Subset{0, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(winner_prob(gap, Subset{0, 0}, 0), std::invalid_argument);
}

TEST_CASE("pairwise probabilities") {
    const PLInstance inst({0.6, 0.4, 2.0, 1.0});
    CHECK(pairwise_prob(inst, 0, 1) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(pairwise_prob(inst, 2, 3) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(pairwise_prob(inst, 0, 1) + pairwise_prob(inst, 1, 0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(pairwise_prob(inst, 1, 1), std::invalid_argument);
}

TEST_CASE("top-m probabilities") {
    const PLInstance uniform({1.0, 1.0, 1.0});
    const Subset all3{0, 1, 2};
    CHECK(top_m_prob(uniform, all3, TopMRanking{2, 0, 1}) ==
          doctest::Approx(1.0 / 6.0).epsilon(1e-12));

    const PLInstance skew({2.0, 1.0, 1.0});
    CHECK(top_m_prob(skew, all3, TopMRanking{0, 1}) == doctest::Approx(0.25).epsilon(1e-12));

    // m = 1 reduces to the winner law
    const Subset pair{0, 2};
    CHECK(top_m_prob(skew, pair, TopMRanking{0}) ==
          doctest::Approx(winner_prob(skew, pair, 0)).epsilon(1e-12));

    CHECK_THROWS_AS(top_m_prob(skew, pair, TopMRanking{1}), std::invalid_argument);
    CHECK_THROWS_AS(top_m_prob(skew, all3, TopMRanking{0, 0}), std::invalid_argument);
}

TEST_CASE("normalization, scale invariance and IIA") {
    Rng rng = make_rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> t(5);
        for (double& x : t) x = 0.05 + uniform_double(rng);
        const PLInstance inst(t);
        for (double& x : t) x *= 37.5;
        const PLInstance scaled(t);

        const Subset s{0, 2, 4};
        double sum = 0.0;
        for (int item : s.items) sum += winner_prob(inst, s, item);
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));

        for (int item : s.items) {
            CHECK(winner_prob(inst, s, item) ==
                  doctest::Approx(winner_prob(scaled, s, item)).epsilon(1e-12));
        }

        const Subset s1{0, 1, 2, 3};
        const Subset s2{0, 2, 4};
        const double r1 = winner_prob(inst, s1, 0) / winner_prob(inst, s1, 2);
        const double r2 = winner_prob(inst, s2, 0) / winner_prob(inst, s2, 2);
        CHECK(r1 == doctest::Approx(r2).epsilon(1e-12));

        const TopMRanking rank{2, 0};
        CHECK(top_m_prob(inst, s2, rank) ==
              doctest::Approx(top_m_prob(scaled, s2, rank)).epsilon(1e-12));
    }
}

TEST_CASE("total order consistency") {
    Rng rng = make_rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const double a = 0.05 + uniform_double(rng);
        const double b = 0.05 + uniform_double(rng);
        const PLInstance inst({a, b});
        CHECK((pairwise_prob(inst, 0, 1) >= 0.5) == (a >= b));
    }
}

TEST_CASE("winner sampling matches the winner law") {
    const PLInstance inst({0.5, 0.3, 0.2});
    const Subset s{0, 1, 2};
    Rng rng = make_rng(13);

    const Subset solo{1};
    CHECK(sample_winner(inst, solo, rng) == 1);

    std::map<int, int> counts;
    const int draws = 100000;
    for (int d = 0; d < draws; ++d) ++counts[sample_winner(inst, s, rng)];
    double tv = 0.0;
    for (int item : s.items) {
        tv += std::abs(static_cast<double>(counts[item]) / draws - winner_prob(inst, s, item));
    }
    CHECK(tv / 2.0 < 0.01);
}

TEST_CASE("top-m sampling: first element is the winner draw") {
    const PLInstance inst({0.9, 0.4, 0.7, 0.2});
    const Subset s{0, 1, 2, 3};
    Rng a = make_rng(17);
    Rng b = make_rng(17);
    for (int d = 0; d < 200; ++d) {
        const int w = sample_winner(inst, s, a);
        const TopMRanking r = sample_top_m(inst, s, 3, b);
        CHECK(r.ranked.front() == w);
        // keep the streams aligned: the top-3 draw consumed two more uniforms
        a();
        a();
    }
}

TEST_CASE("top-m sampling frequencies match the sequential law") {
    const PLInstance inst({2.0, 1.0, 1.0});
    const Subset s{0, 1, 2};
    Rng rng = make_rng(19);
    const DiscreteDistribution exact = enumerate_top_m_distribution(inst, s, 2);
    DiscreteDistribution emp = empirical_top_m_distribution(inst, s, 2, 100000, rng);
    CHECK(tv_distance(emp, exact) < 0.01);
    const int slot = exact.find({0, 1});
    REQUIRE(slot >= 0);
    CHECK(exact.probs[static_cast<std::size_t>(slot)] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(emp.probs[static_cast<std::size_t>(slot)] == doctest::Approx(0.25).epsilon(0.05));

    CHECK_THROWS_AS(sample_top_m(inst, s, 4, rng), std::invalid_argument);
    const Subset solo{2};
    Rng r2 = make_rng(1);
    CHECK(sample_top_m(inst, solo, 1, r2).ranked == std::vector<int>{2});
}

TEST_CASE("coupled sampler on a bare pair always consumes a coin") {
    const PLInstance inst({0.7, 0.3});
    const Subset pair{0, 1};
    CoinStream coins = CoinStream::for_pair(inst, 0, 1, 5);
    Rng rng = make_rng(23);
    for (int d = 1; d <= 50; ++d) {
        const int w = sample_winner_coupled(inst, pair, 0, 1, coins, rng);
        CHECK((w == 0 || w == 1));
        CHECK(coins.tosses() == static_cast<std::uint64_t>(d));
    }
}

TEST_CASE("coupled sampler marginals and conditionals") {
    const PLInstance inst({0.5, 0.3, 0.2});
    const Subset s{0, 1, 2};
    CoinStream coins = CoinStream::for_pair(inst, 0, 1, 29);
    Rng rng = make_rng(31);

    const int draws = 100000;
    std::map<int, int> counts;
    std::int64_t in_pair = 0;
    std::int64_t got_i = 0;
    for (int d = 0; d < draws; ++d) {
        const int w = sample_winner_coupled(inst, s, 0, 1, coins, rng);
        ++counts[w];
        if (w == 0 || w == 1) {
            ++in_pair;
            got_i += (w == 0) ? 1 : 0;
        }
    }
    double tv = 0.0;
    for (int item : s.items) {
        tv += std::abs(static_cast<double>(counts[item]) / draws - winner_prob(inst, s, item));
    }
    CHECK(tv / 2.0 < 0.01);
    CHECK(static_cast<double>(got_i) / static_cast<double>(in_pair) ==
          doctest::Approx(pairwise_prob(inst, 0, 1)).epsilon(0.02));

    CHECK_THROWS_AS(sample_winner_coupled(inst, Subset{1, 2}, 0, 1, coins, rng),
                    std::invalid_argument);
}

TEST_CASE("eps-optimality") {
    const PLInstance gap({1.0, 0.6, 0.6});
    CHECK(is_eps_optimal(gap, 0, 0.01));
    CHECK_FALSE(is_eps_optimal(gap, 1, 0.1));  // p = 0.375 < 0.4

    const PLInstance close({1.0, 0.9});
    CHECK(is_eps_optimal(close, 1, 0.1));  // p ~ 0.4737 > 0.4

    const PLInstance tied({0.7, 1.0, 1.0});
    CHECK(is_eps_optimal(tied, 1, 0.2));
    CHECK(is_eps_optimal(tied, 2, 0.2));

    CHECK_THROWS_AS(is_eps_optimal(gap, 0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(is_eps_optimal(gap, 0, 0.6), std::invalid_argument);
}
