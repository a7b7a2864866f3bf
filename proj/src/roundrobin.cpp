#include "ttpk/roundrobin.hpp"

#include <string>

namespace ttpk {

namespace {

int mod(int a, int b) { return ((a % b) + b) % b; }

void require_even(int s, const char* what) {
  if (s < 4 || s % 2 != 0) {
    throw std::invalid_argument(std::string(what) + " needs an even count >= 4, got " +
                                std::to_string(s));
  }
}

}  // namespace

int circle_node_at(int s, int round, int position) {
  return mod(position - round, s - 1);
}

int circle_position_of(int s, int round, int node) {
  if (node == s - 1) return 0;
  return mod(node + round - 1, s - 1) + 1;
}

int circle_partner_position(int s, int position) {
  return position == 1 ? 0 : s + 1 - position;
}

RoundPlan circle_rounds(int s) {
  require_even(s, "circle method");
  RoundPlan plan{s, {}};
  for (int r = 1; r <= s - 1; ++r) {
    std::vector<RoundPairing> round;
    round.push_back({1, s - 1, circle_node_at(s, r, 1)});
    for (int c = 2; c <= s / 2; ++c) {
      round.push_back({c, circle_node_at(s, r, c), circle_node_at(s, r, s + 1 - c)});
    }
    plan.rounds.push_back(std::move(round));
  }
  return plan;
}

ScheduleTable special_ttp2(int m) {
  require_even(m, "special TTP-2");
  const RoundPlan plan = circle_rounds(m);
  // gamma[r] holds (host, traveller) pairs of day r+1.
  std::vector<std::vector<std::pair<int, int>>> gamma;
  for (int r = 1; r <= m - 1; ++r) {
    std::vector<std::pair<int, int>> day;
    for (const RoundPairing& p : plan.rounds[r - 1]) {
      bool first_travels = p.column == 1 ? (r % 2 == 1) : (p.column % 2 == 0);
      if (first_travels) {
        day.emplace_back(p.second, p.first);
      } else {
        day.emplace_back(p.first, p.second);
      }
    }
    gamma.push_back(std::move(day));
  }

  ScheduleTable t(m, 2 * m - 2);
  for (int r = 0; r < m - 1; ++r) {
    for (auto [host, away] : gamma[r]) t.set_game(r, host, away);
  }
  // Second half: reversed Gamma_{m-2}, Gamma_{m-1}, Gamma_1, ..., Gamma_{m-3}.
  std::vector<int> order{m - 3, m - 2};
  for (int r = 0; r <= m - 4; ++r) order.push_back(r);
  for (int i = 0; i < m - 1; ++i) {
    for (auto [host, away] : gamma[order[i]]) t.set_game(m - 1 + i, away, host);
  }
  return t;
}

Opening opening_of(const ScheduleView& s, int team) {
  bool d0 = s.at(team, 0).home, d1 = s.at(team, 1).home;
  if (!d0 && d1) return Opening::kAwayHome;
  if (d0 && !d1) return Opening::kHomeAway;
  return Opening::kOther;
}

std::vector<int> seat_assignment(std::span<const SeatDemand> demands,
                                 const ScheduleView& sched) {
  const int m = sched.teams();
  if (static_cast<int>(demands.size()) != m) {
    throw std::invalid_argument("one demand per team required");
  }
  std::vector<int> seat(m, -1);
  std::vector<bool> taken(m, false);
  auto take = [&](int team, Opening want) {
    for (int s = 0; s < m; ++s) {
      if (!taken[s] && opening_of(sched, s) == want) {
        taken[s] = true;
        seat[team] = s;
        return;
      }
    }
    throw std::invalid_argument(
        std::string("no seat left opening ") +
        (want == Opening::kAwayHome ? "AH" : "HA") + " for team " +
        std::to_string(team + 1));
  };
  for (int team = 0; team < m; ++team) {
    if (demands[team] == SeatDemand::kAwayHome) take(team, Opening::kAwayHome);
    if (demands[team] == SeatDemand::kHomeAway) take(team, Opening::kHomeAway);
  }
  int next = 0;
  for (int team = 0; team < m; ++team) {
    if (seat[team] >= 0) continue;
    while (taken[next]) ++next;
    taken[next] = true;
    seat[team] = next;
  }
  return seat;
}

}  // namespace ttpk
