#include "plb/rank_breaking.hpp"

#include <algorithm>
#include <stdexcept>

namespace plb {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

PairwiseCounts::PairwiseCounts(std::vector<int> universe) : universe_(std::move(universe)) {
    require(!universe_.empty(), "PairwiseCounts: empty universe");
    int max_id = 0;
    for (int it : universe_) {
        require(it >= 0, "PairwiseCounts: negative item id");
        max_id = std::max(max_id, it);
    }
    local_.assign(static_cast<std::size_t>(max_id) + 1, -1);
    for (std::size_t slot = 0; slot < universe_.size(); ++slot) {
        require(local_[static_cast<std::size_t>(universe_[slot])] == -1,
                "PairwiseCounts: duplicate item in universe");
        local_[static_cast<std::size_t>(universe_[slot])] = static_cast<int>(slot);
    }
    w_.assign(universe_.size() * universe_.size(), 0);
}

bool PairwiseCounts::indexes(int item) const {
    return item >= 0 && static_cast<std::size_t>(item) < local_.size() &&
           local_[static_cast<std::size_t>(item)] >= 0;
}

int PairwiseCounts::local(int item) const {
    require(indexes(item), "PairwiseCounts: item not in universe");
    return local_[static_cast<std::size_t>(item)];
}

std::int64_t PairwiseCounts::wins(int i, int j) const {
    return w_[static_cast<std::size_t>(local(i)) * universe_.size() +
              static_cast<std::size_t>(local(j))];
}

std::int64_t PairwiseCounts::comparisons(int i, int j) const {
    return wins(i, j) + wins(j, i);
}

void PairwiseCounts::add_win(int winner, int loser) {
    require(winner != loser, "PairwiseCounts: winner equals loser");
    w_[static_cast<std::size_t>(local(winner)) * universe_.size() +
       static_cast<std::size_t>(local(loser))] += 1;
    ++total_;
}

void PairwiseCounts::reset() {
    std::fill(w_.begin(), w_.end(), 0);
    total_ = 0;
}

void rank_break_update(PairwiseCounts& pc, const Subset& s, const TopMRanking& r) {
    r.validate_for(s);
    for (int it : s.items) {
        require(pc.indexes(it), "rank_break_update: subset item not indexed");
    }
    const int m = r.size();
    for (int pos = 0; pos < m; ++pos) {
        const int winner = r.ranked[pos];
        for (int other : s.items) {
            if (other == winner) continue;
            bool precedes = false;
            for (int q = 0; q < pos; ++q) {
                if (r.ranked[q] == other) {
                    precedes = true;
                    break;
                }
            }
            if (!precedes) pc.add_win(winner, other);
        }
    }
}

double empirical_pref(const PairwiseCounts& pc, int i, int j) {
    require(i != j, "empirical_pref: items must differ");
    const std::int64_t wij = pc.wins(i, j);
    const std::int64_t n = wij + pc.wins(j, i);
    if (n == 0) return 0.5;
    return static_cast<double>(wij) / static_cast<double>(n);
}

std::vector<int> copeland_winners(const PairwiseCounts& pc, const Subset& universe) {
    require(!universe.items.empty(), "copeland_winners: empty universe");
    std::vector<int> best;
    int best_score = -1;
    for (int i : universe.items) {
        int score = 0;
        for (int j : universe.items) {
            if (j == i) continue;
            if (pc.wins(i, j) >= pc.wins(j, i)) ++score;
        }
        if (score > best_score) {
            best_score = score;
            best.clear();
        }
        if (score == best_score) best.push_back(i);
    }
    std::sort(best.begin(), best.end());
    return best;
}

std::int64_t AppearanceCounts::max_q() const {
    std::int64_t best = 0;
    for (std::int64_t v : q) best = std::max(best, v);
    return best;
}

AppearanceCounts appearance_counts(const Subset& s, const std::vector<TopMRanking>& history) {
    AppearanceCounts out;
    out.items = s.items;
    out.q.assign(s.items.size(), 0);
    if (history.empty()) return out;
    const int m = history.front().size();
    for (const TopMRanking& r : history) {
        require(r.size() == m, "appearance_counts: rankings must share one length");
        r.validate_for(s);
        for (int item : r.ranked) {
            for (std::size_t slot = 0; slot < s.items.size(); ++slot) {
                if (s.items[slot] == item) {
                    ++out.q[slot];
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace plb
