#pragma once

#include <cstdint>
#include <vector>

#include "plb/choice_model.hpp"

namespace plb {

// Dense pairwise win-count matrix w_ij over a fixed item universe.
// w_ij counts how often i was ranked above (or beat) j; the diagonal is
// unused. Owned by a single algorithm run; not synchronized.
class PairwiseCounts {
public:
    explicit PairwiseCounts(std::vector<int> universe);

    const std::vector<int>& universe() const { return universe_; }
    bool indexes(int item) const;

    std::int64_t wins(int i, int j) const;         // w_ij
    std::int64_t comparisons(int i, int j) const;  // n_ij = w_ij + w_ji
    std::int64_t total_increments() const { return total_; }

    void add_win(int winner, int loser);
    void reset();

private:
    int local(int item) const;

    std::vector<int> universe_;
    std::vector<int> local_;  // global id -> local slot, -1 if absent
    std::vector<std::int64_t> w_;
    std::int64_t total_ = 0;
};

// Credits each ranked item with one win over every item of s it precedes
// and over every unranked item of s: position l adds |s| - l increments,
// so a top-m ranking adds m*|s| - m(m+1)/2 in total.
void rank_break_update(PairwiseCounts& pc, const Subset& s, const TopMRanking& r);

// w_ij / (w_ij + w_ji); defined as 1/2 when the pair was never compared.
double empirical_pref(const PairwiseCounts& pc, int i, int j);

// All items of `universe` maximizing sum_j 1(w_ij >= w_ji), ascending.
std::vector<int> copeland_winners(const PairwiseCounts& pc, const Subset& universe);

// Per-item appearance totals q_i over a history of top-m outputs from one
// played subset. At least one item must appear ceil(m*t/k) times.
struct AppearanceCounts {
    std::vector<int> items;       // the subset, in its own order
    std::vector<std::int64_t> q;  // aligned with items

    std::int64_t max_q() const;
};

AppearanceCounts appearance_counts(const Subset& s, const std::vector<TopMRanking>& history);

}  // namespace plb
