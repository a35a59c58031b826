#include "pollctl/winners.hpp"

#include <algorithm>

#include "pollctl/error.hpp"

namespace pollctl {

ScoreBoard plurality_scores(const GeoInstance& instance, const Selection& sel) {
  std::vector<char> chosen(instance.sites.size(), 0);
  for (const auto& id : sel.site_ids) chosen[instance.site_pos(id)] = 1;
  return plurality_scores(instance, ReachTable::build(instance), chosen);
}

ScoreBoard plurality_scores(const GeoInstance& instance, const ReachTable& table,
                            const std::vector<char>& chosen_sites) {
  ScoreBoard board;
  board.scores.assign(instance.candidates.size(), 0);
  for (std::size_t v = 0; v < table.reach.size(); ++v) {
    for (std::uint32_t s : table.reach[v]) {
      if (chosen_sites[s]) {
        ++board.scores[table.top_candidate[v]];
        ++board.total_participating;
        break;
      }
    }
  }
  return board;
}

std::set<std::string> winners_of(const GeoInstance& instance, const ScoreBoard& board) {
  long long best = 0;  // empty board: everyone wins at 0
  for (long long s : board.scores) best = std::max(best, s);
  std::set<std::string> out;
  for (std::size_t i = 0; i < board.scores.size(); ++i)
    if (board.scores[i] == best) out.insert(instance.candidates[i]);
  return out;
}

std::set<std::string> plurality_winners(const GeoInstance& instance, const Selection& sel) {
  return winners_of(instance, plurality_scores(instance, sel));
}

long long margin(const GeoInstance& instance, const Selection& sel, const std::string& p,
                 const std::string& r) {
  if (p == r) throw Error(Errc::INVALID_ARGUMENT, "margin requires two distinct candidates");
  ScoreBoard board = plurality_scores(instance, sel);
  return board.scores[instance.candidate_pos(p)] - board.scores[instance.candidate_pos(r)];
}

bool evaluate_control(const GeoInstance& instance, const ControlQuery& query,
                      std::size_t selection_size, const ScoreBoard& board) {
  if (static_cast<long long>(selection_size) < query.min_sites) return false;
  long long target_score = board.scores[instance.candidate_pos(query.target)];
  long long best = 0;
  for (long long s : board.scores) best = std::max(best, s);
  bool target_wins = (target_score == best);
  return query.mode == ControlMode::CONSTRUCTIVE ? target_wins : !target_wins;
}

bool evaluate_control(const GeoInstance& instance, const ControlQuery& query,
                      const Selection& sel) {
  return evaluate_control(instance, query, sel.size(), plurality_scores(instance, sel));
}

}  // namespace pollctl
