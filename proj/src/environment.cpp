#include "plb/environment.hpp"

#include <stdexcept>

namespace plb {

std::string to_string(FeedbackMode mode) {
    switch (mode) {
        case FeedbackMode::winner: return "WI";
        case FeedbackMode::top_m: return "TR";
        case FeedbackMode::full_ranking: return "FR";
    }
    return "?";
}

FeedbackMode feedback_mode_from_string(const std::string& s) {
    if (s == "WI" || s == "wi") return FeedbackMode::winner;
    if (s == "TR" || s == "tr") return FeedbackMode::top_m;
    if (s == "FR" || s == "fr") return FeedbackMode::full_ranking;
    throw std::invalid_argument("unknown feedback mode: " + s);
}

BattleEnvironment::BattleEnvironment(PLInstance instance, FeedbackMode mode, int m,
                                     std::uint64_t seed)
    : instance_(std::move(instance)),
      mode_(mode),
      m_(mode == FeedbackMode::winner ? 1 : m),
      n_(instance_.size()),
      rng_(make_rng(seed)),
      seen_(static_cast<std::size_t>(n_), 0) {
    if (mode_ == FeedbackMode::top_m && (m_ < 1 || m_ > n_)) {
        throw std::invalid_argument("BattleEnvironment: need 1 <= m <= n for top-m feedback");
    }
}

const TopMRanking& BattleEnvironment::play(const Subset& s) {
    if (s.items.empty()) throw std::invalid_argument("play: empty subset");
    for (int it : s.items) {
        if (it < 0 || it >= n_) {
            throw std::invalid_argument("play: item index out of range");
        }
        if (seen_[static_cast<std::size_t>(it)]) {
            for (int undo : s.items) {
                if (undo == it) break;
                seen_[static_cast<std::size_t>(undo)] = 0;
            }
            throw std::invalid_argument("play: items must be distinct");
        }
        seen_[static_cast<std::size_t>(it)] = 1;
    }
    for (int it : s.items) seen_[static_cast<std::size_t>(it)] = 0;

    int m_eff = 1;
    switch (mode_) {
        case FeedbackMode::winner: m_eff = 1; break;
        case FeedbackMode::full_ranking: m_eff = s.size(); break;
        case FeedbackMode::top_m:
            if (s.size() < m_) {
                throw std::invalid_argument("play: subset smaller than ranking length m");
            }
            m_eff = m_;
            break;
    }

    ++rounds_;
    sample_top_m_into(instance_, s.items, m_eff, rng_, weight_buf_, feedback_.ranked);
    return feedback_;
}

}  // namespace plb
