#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "plb/rank_breaking.hpp"
#include "plb/validation.hpp"

using namespace plb;

TEST_CASE("full-ranking break yields all pairs") {
    // s = {a,b,c,d} = {0,1,2,3}, ranking b > a > c > d
    PairwiseCounts pc({0, 1, 2, 3});
    rank_break_update(pc, Subset{0, 1, 2, 3}, TopMRanking{1, 0, 2, 3});

    CHECK(pc.total_increments() == 6);
    CHECK(pc.wins(1, 0) == 1);
    CHECK(pc.wins(1, 2) == 1);
    CHECK(pc.wins(1, 3) == 1);
    CHECK(pc.wins(0, 2) == 1);
    CHECK(pc.wins(0, 3) == 1);
    CHECK(pc.wins(2, 3) == 1);
    CHECK(pc.wins(0, 1) == 0);

    CHECK(copeland_winners(pc, Subset{0, 1, 2, 3}) == std::vector<int>{1});
}

TEST_CASE("top-2 break yields five pairs") {
    // ranking b > a from {a,b,c,d}
    PairwiseCounts pc({0, 1, 2, 3});
    rank_break_update(pc, Subset{0, 1, 2, 3}, TopMRanking{1, 0});

    CHECK(pc.total_increments() == 5);
    CHECK(pc.wins(1, 0) == 1);
    CHECK(pc.wins(1, 2) == 1);
    CHECK(pc.wins(1, 3) == 1);
    CHECK(pc.wins(0, 2) == 1);
    CHECK(pc.wins(0, 3) == 1);
    CHECK(pc.wins(2, 3) == 0);
}

TEST_CASE("winner-only break beats every co-player once") {
    PairwiseCounts pc({4, 7, 9});
    rank_break_update(pc, Subset{4, 7, 9}, TopMRanking{7});
    CHECK(pc.total_increments() == 2);
    CHECK(pc.wins(7, 4) == 1);
    CHECK(pc.wins(7, 9) == 1);

    CHECK_THROWS_AS(rank_break_update(pc, Subset{4, 7, 9}, TopMRanking{5}),
                    std::invalid_argument);
}

TEST_CASE("increment conservation across random update sequences") {
    Rng rng = make_rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = 2 + static_cast<int>(uniform_below(rng, 7));
        const int m = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
        const int t = 1 + static_cast<int>(uniform_below(rng, 20));

        std::vector<double> scores(static_cast<std::size_t>(k));
        for (double& x : scores) x = 0.1 + uniform_double(rng);
        const PLInstance inst(scores);
        std::vector<int> items(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) items[static_cast<std::size_t>(i)] = i;
        const Subset s{items};

        PairwiseCounts pc(items);
        for (int round = 0; round < t; ++round) {
            rank_break_update(pc, s, sample_top_m(inst, s, m, rng));
        }
        const std::int64_t per_update = static_cast<std::int64_t>(m) * k -
                                        static_cast<std::int64_t>(m) * (m + 1) / 2;
        CHECK(pc.total_increments() == static_cast<std::int64_t>(t) * per_update);
    }
}

TEST_CASE("empirical preference estimates") {
    PairwiseCounts pc({0, 1});
    CHECK(empirical_pref(pc, 0, 1) == 0.5);  // no evidence yet
    for (int i = 0; i < 3; ++i) pc.add_win(0, 1);
    pc.add_win(1, 0);
    CHECK(empirical_pref(pc, 0, 1) == doctest::Approx(0.75));
    CHECK(empirical_pref(pc, 0, 1) + empirical_pref(pc, 1, 0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(empirical_pref(pc, 0, 0), std::invalid_argument);
}

TEST_CASE("copeland winners") {
    PairwiseCounts fresh({0, 1, 2});
    CHECK(copeland_winners(fresh, Subset{0, 1, 2}) == std::vector<int>{0, 1, 2});
    CHECK(copeland_winners(fresh, Subset{2}) == std::vector<int>{2});
}

TEST_CASE("appearance counts") {
    const Subset s{0, 1, 2, 3};

    std::vector<TopMRanking> history;
    for (int t = 0; t < 4; ++t) history.push_back(TopMRanking{0, 1, 2, 3});
    AppearanceCounts full = appearance_counts(s, history);
    for (std::int64_t q : full.q) CHECK(q == 4);  // m = k: everyone appears each round

    history.clear();
    history.push_back(TopMRanking{2, 0});
    AppearanceCounts single = appearance_counts(s, history);
    std::int64_t ones = 0;
    for (std::int64_t q : single.q) ones += (q == 1) ? 1 : 0;
    CHECK(ones == 2);
    CHECK(single.max_q() == 1);

    // t = 10, m = 2, k = 4: the most frequent item appears at least 5 times
    Rng rng = make_rng(103);
    const PLInstance inst({0.4, 0.3, 0.2, 0.1});
    history.clear();
    for (int t = 0; t < 10; ++t) history.push_back(sample_top_m(inst, s, 2, rng));
    CHECK(appearance_counts(s, history).max_q() >= 5);
}

TEST_CASE("pigeonhole bound over random histories") {
    const CheckResult res = check_rank_breaking_pigeonhole(2026);
    INFO(res.detail);
    CHECK(res.pass);
}

TEST_CASE("pairwise estimate concentration") {
    const CheckResult res = check_pairwise_concentration(2026);
    INFO(res.detail);
    CHECK(res.pass);
}
