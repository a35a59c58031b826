#ifndef POLLCTL_WINNERS_HPP
#define POLLCTL_WINNERS_HPP

#include <set>
#include <string>
#include <vector>

#include "pollctl/geo.hpp"

namespace pollctl {

struct ScoreBoard {
  std::vector<long long> scores;  // indexed by candidate declaration order
  long long total_participating = 0;

  long long score_of(const GeoInstance& instance, const std::string& candidate) const {
    return scores.at(instance.candidate_pos(candidate));
  }
};

// Each participating voter contributes one point to its top-ranked candidate.
ScoreBoard plurality_scores(const GeoInstance& instance, const Selection& sel);
ScoreBoard plurality_scores(const GeoInstance& instance, const ReachTable& table,
                            const std::vector<char>& chosen_sites);

// Argmax of the scoreboard.  On an empty participating set every candidate
// wins at score 0 (nonunique-winner model throughout).
std::set<std::string> plurality_winners(const GeoInstance& instance, const Selection& sel);
std::set<std::string> winners_of(const GeoInstance& instance, const ScoreBoard& board);

// score(p) - score(r)
long long margin(const GeoInstance& instance, const Selection& sel, const std::string& p,
                 const std::string& r);

// CONSTRUCTIVE: |sel| >= k and the target is a winner.
// DESTRUCTIVE:  |sel| >= k and the target is not a winner (strictly beaten).
bool evaluate_control(const GeoInstance& instance, const ControlQuery& query,
                      const Selection& sel);
bool evaluate_control(const GeoInstance& instance, const ControlQuery& query,
                      std::size_t selection_size, const ScoreBoard& board);

}  // namespace pollctl

#endif
