#pragma once

#include <vector>

#include "plb/choice_model.hpp"

namespace plb {

// Exact distribution over a finite outcome set (items or rankings),
// stored in a fixed enumeration order so empirical counterparts can be
// compared outcome-by-outcome.
struct DiscreteDistribution {
    std::vector<std::vector<int>> support;
    std::vector<double> probs;

    int find(const std::vector<int>& outcome) const;  // -1 if absent
    void check() const;  // probs >= 0, sum within 1e-10 of 1
};

// Exhaustive distribution of all ordered m-tuples drawn from s, built by
// recursive winner marginalization (draw a winner, recurse on the rest).
// Guarded to |s| <= 8.
DiscreteDistribution enumerate_top_m_distribution(const PLInstance& inst, const Subset& s, int m);

// Empirical counterpart on the same support/order; draws via sample_top_m.
DiscreteDistribution empirical_top_m_distribution(const PLInstance& inst, const Subset& s, int m,
                                                  std::int64_t draws, Rng& rng);

// (1/2) sum |p - q| over a shared support.
double tv_distance(const DiscreteDistribution& p, const DiscreteDistribution& q);

// KL(winner law of a on s || winner law of b on s), natural log.
double winner_kl(const PLInstance& a, const PLInstance& b, const Subset& s);

// Hard identification family: a near-uniform true instance whose best
// item leads by eps, plus one perturbed instance per other arm in which
// that arm becomes the unique best. Requires 0 < eps <= 1/sqrt(8).
struct LowerBoundFamily {
    PLInstance true_instance;
    std::vector<PLInstance> alternatives;  // alternatives[a-1] perturbs arm a
};

LowerBoundFamily build_lower_bound_instances(int n, double eps, double theta);

// (1/k) (R - 1/R)^2 with R = (1/2 + eps) / (1/2 - eps): the cap the exact
// winner KL of a lower-bound pair must respect on any k-subset.
double lower_bound_kl_cap(int k, double eps);

}  // namespace plb
