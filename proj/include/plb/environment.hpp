#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plb/choice_model.hpp"
#include "plb/rng.hpp"

namespace plb {

// What a play of a subset reveals: the winner only, the top-m ranking,
// or the full ranking of the played subset.
enum class FeedbackMode { winner, top_m, full_ranking };

std::string to_string(FeedbackMode mode);
FeedbackMode feedback_mode_from_string(const std::string& s);

// The query interface between an identification algorithm and the hidden
// instance. Each play draws one top-m ranking from the instance and
// advances the round counter by exactly one, whatever m is. The instance
// itself is never exposed through this interface.
class BattleEnvironment {
public:
    BattleEnvironment(PLInstance instance, FeedbackMode mode, int m, std::uint64_t seed);

    int num_items() const { return n_; }
    FeedbackMode mode() const { return mode_; }
    int ranking_size() const { return m_; }  // meaningful for top_m mode
    std::uint64_t rounds_played() const { return rounds_; }

    // Returned reference stays valid until the next play.
    const TopMRanking& play(const Subset& s);

private:
    PLInstance instance_;
    FeedbackMode mode_;
    int m_;
    int n_;
    Rng rng_;
    std::uint64_t rounds_ = 0;

    std::vector<std::uint8_t> seen_;
    std::vector<double> weight_buf_;
    TopMRanking feedback_;
};

}  // namespace plb
