#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "plb/rng.hpp"

namespace plb {

// A multinomial-logit subset-choice instance: positive score theta_i per
// item, winner of a played subset S drawn with probability
// theta_i / sum_{j in S} theta_j. Scores are scale-invariant. Immutable
// after construction and safe to share across threads.
class PLInstance {
public:
    explicit PLInstance(std::vector<double> thetas);

    int size() const { return static_cast<int>(thetas_.size()); }
    double theta(int i) const { return thetas_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& thetas() const { return thetas_; }

    // All indices attaining the maximal score (ties allowed).
    const std::vector<int>& best_set() const { return best_; }

private:
    std::vector<double> thetas_;
    std::vector<int> best_;
};

// Ordered list of distinct item indices.
struct Subset {
    std::vector<int> items;

    Subset() = default;
    Subset(std::initializer_list<int> init) : items(init) {}
    explicit Subset(std::vector<int> v) : items(std::move(v)) {}

    int size() const { return static_cast<int>(items.size()); }
    bool contains(int item) const;

    // Throws std::invalid_argument unless items are distinct, in [0, n),
    // and non-empty.
    void validate(int n) const;
};

// The first m entries of a ranking drawn from a played subset.
struct TopMRanking {
    std::vector<int> ranked;

    TopMRanking() = default;
    TopMRanking(std::initializer_list<int> init) : ranked(init) {}
    explicit TopMRanking(std::vector<int> v) : ranked(std::move(v)) {}

    int size() const { return static_cast<int>(ranked.size()); }

    // Entries must be distinct members of s.
    void validate_for(const Subset& s) const;
};

// i.i.d. biased-coin source with a toss counter; used by the coupled
// winner sampler to decide i-vs-j outcomes.
class CoinStream {
public:
    CoinStream(double p_heads, std::uint64_t seed);
    static CoinStream for_pair(const PLInstance& inst, int i, int j, std::uint64_t seed);

    bool next();
    std::uint64_t tosses() const { return tosses_; }
    double p_heads() const { return p_; }

private:
    double p_;
    Rng rng_;
    std::uint64_t tosses_ = 0;
};

// Exact choice probabilities.
double winner_prob(const PLInstance& inst, const Subset& s, int item);
double pairwise_prob(const PLInstance& inst, int i, int j);
double top_m_prob(const PLInstance& inst, const Subset& s, const TopMRanking& r);

// Samplers. Winner selection is inverse-CDF over the subset's scores in
// item order; top-m sampling draws winners sequentially without
// replacement, so its first element has the winner law.
int sample_winner(const PLInstance& inst, const Subset& s, Rng& rng);
TopMRanking sample_top_m(const PLInstance& inst, const Subset& s, int m, Rng& rng);

// Allocation-free variant for hot loops; `items` must already be valid
// for `inst` and 1 <= m <= |items|. `weight_buf` is scratch.
void sample_top_m_into(const PLInstance& inst, const std::vector<int>& items, int m, Rng& rng,
                       std::vector<double>& weight_buf, std::vector<int>& out_ranked);

// Coupled winner draw for the pair {i, j}: with probability
// (theta_i + theta_j) / sum_{l in s} theta_l the outcome is decided by the
// next coin of `coins`, otherwise a winner of s \ {i, j} is drawn from
// `rng`. Marginal law equals sample_winner's.
int sample_winner_coupled(const PLInstance& inst, const Subset& s, int i, int j,
                          CoinStream& coins, Rng& rng);

// True iff item's pairwise win probability against a best item exceeds
// 1/2 - eps (strict). Requires 0 < eps <= 1/2.
bool is_eps_optimal(const PLInstance& inst, int item, double eps);

}  // namespace plb
