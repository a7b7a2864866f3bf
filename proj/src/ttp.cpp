#include "ttpk/ttp.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ttpk/parallel.hpp"

namespace ttpk {

TtpInstance::TtpInstance(std::shared_ptr<const MetricInstance> metric,
                         std::vector<int> placement)
    : TtpInstance(metric, static_cast<int>(placement.size()), placement, 0) {}

TtpInstance::TtpInstance(std::shared_ptr<const MetricInstance> metric, int teams,
                         std::vector<int> placement, int default_vertex)
    : metric_(std::move(metric)),
      teams_(teams),
      placement_(std::move(placement)),
      default_vertex_(default_vertex) {
  if (!metric_) throw std::invalid_argument("TTP instance needs a metric");
  if (teams_ < 4 || teams_ % 2 != 0) {
    throw std::invalid_argument("TTP needs an even team count >= 4, got " +
                                std::to_string(teams_));
  }
  if (static_cast<int>(placement_.size()) > teams_) {
    throw std::invalid_argument("more placements than teams");
  }
  auto bad = [&](int v) { return v < 0 || v >= metric_->size(); };
  if (std::any_of(placement_.begin(), placement_.end(), bad) ||
      (static_cast<int>(placement_.size()) < teams_ && bad(default_vertex_))) {
    throw std::invalid_argument("team placed on a vertex outside the metric");
  }
}

TtpInstance TtpInstance::Colocated(int teams) {
  return TtpInstance(std::make_shared<const MetricInstance>(MetricInstance::Colocated(1)),
                     teams, {}, 0);
}

std::string ScheduleViolation::ToString() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kDayCount: os << "wrong number of days"; break;
    case Kind::kBadOpponent: os << "invalid opponent"; break;
    case Kind::kMutual: os << "inconsistent with opponent's row"; break;
    case Kind::kMissingGame: os << "missing game"; break;
    case Kind::kDuplicateGame: os << "repeated game"; break;
    case Kind::kNoRepeat: os << "no-repeat violated"; break;
    case Kind::kBoundedByK: os << "bounded-by-k violated"; break;
  }
  if (team >= 0) os << " team=" << team + 1;
  if (day >= 0) os << " day=" << day + 1;
  if (other >= 0) os << " other=" << other + 1;
  return os.str();
}

std::vector<ScheduleViolation> validate_schedule(const ScheduleView& s, int k,
                                                 const ValidateOptions& opt) {
  using Kind = ScheduleViolation::Kind;
  const int n = s.teams();
  const int days = s.days();
  std::vector<int> teams;
  if (opt.teams) {
    teams = *opt.teams;
  } else {
    teams.resize(n);
    for (int t = 0; t < n; ++t) teams[t] = t;
  }

  std::vector<std::vector<ScheduleViolation>> per_team(teams.size());
  parallel_for(static_cast<int>(teams.size()), opt.threads, [&](int idx) {
    const int t = teams[idx];
    auto& out = per_team[idx];
    auto add = [&](ScheduleViolation v) {
      if (static_cast<int>(out.size()) < opt.max_per_team) out.push_back(v);
    };
    std::vector<std::uint8_t> hosted(n, 0), visited(n, 0);
    int run = 0;
    bool run_home = false;
    int prev_opp = -1;
    for (int g = 0; g < days; ++g) {
      const Game game = s.at(t, g);
      if (game.opponent < 0 || game.opponent >= n || game.opponent == t) {
        add({Kind::kBadOpponent, t, g, game.opponent});
        prev_opp = -1;
        run = 0;
        continue;
      }
      const Game back = s.at(game.opponent, g);
      if (back.opponent != t || back.home == game.home) {
        add({Kind::kMutual, t, g, game.opponent});
      }
      auto& cnt = game.home ? hosted[game.opponent] : visited[game.opponent];
      if (cnt < 255) ++cnt;
      if (game.opponent == prev_opp) add({Kind::kNoRepeat, t, g, game.opponent});
      prev_opp = game.opponent;
      if (run > 0 && game.home == run_home) {
        ++run;
      } else {
        run = 1;
        run_home = game.home;
      }
      if (run == k + 1) add({Kind::kBoundedByK, t, g});
    }
    for (int o = 0; o < n; ++o) {
      if (o == t) continue;
      for (auto c : {hosted[o], visited[o]}) {
        if (c == 0) add({Kind::kMissingGame, t, -1, o});
        if (c > 1) add({Kind::kDuplicateGame, t, -1, o});
      }
    }
  });

  std::vector<ScheduleViolation> out;
  if (days != 2 * (n - 1)) out.push_back({Kind::kDayCount});
  for (auto& v : per_team) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

Itinerary itinerary(const ScheduleView& s, const TtpInstance& inst, int team) {
  Itinerary it;
  const int home = inst.vertex(team);
  it.venues.reserve(s.days() + 2);
  it.venues.push_back(home);
  for (int g = 0; g < s.days(); ++g) {
    Game game = s.at(team, g);
    it.venues.push_back(game.home ? home : inst.vertex(game.opponent));
  }
  it.venues.push_back(home);
  it.weight = walk_weight(it.venues, inst.metric());
  return it;
}

Weight window_weight(const ScheduleView& s, const TtpInstance& inst, int team,
                     int begin_day, int end_day) {
  const int home = inst.vertex(team);
  int at = home;
  Weight w = 0;
  for (int g = begin_day; g < end_day; ++g) {
    Game game = s.at(team, g);
    int next = game.home ? home : inst.vertex(game.opponent);
    w += inst.dist(at, next);
    at = next;
  }
  return w + inst.dist(at, home);
}

Weight itinerary_weight(const ScheduleView& s, const TtpInstance& inst, int team) {
  return window_weight(s, inst, team, 0, s.days());
}

int away_trips(const ScheduleView& s, int team, int begin_day, int end_day) {
  int trips = 0;
  bool away = false;
  for (int g = begin_day; g < end_day; ++g) {
    bool now_away = !s.at(team, g).home;
    if (now_away && !away) ++trips;
    away = now_away;
  }
  return trips;
}

Weight walk_weight(const std::vector<int>& venues, const MetricInstance& m) {
  Weight w = 0;
  for (std::size_t i = 1; i < venues.size(); ++i) w += m.dist(venues[i - 1], venues[i]);
  return w;
}

Weight schedule_cost(const ScheduleView& s, const TtpInstance& inst, int threads) {
  if (inst.teams() != s.teams()) {
    throw std::invalid_argument("schedule and instance disagree on team count");
  }
  std::vector<Weight> per(s.teams());
  parallel_for(s.teams(), threads,
               [&](int t) { per[t] = itinerary_weight(s, inst, t); });
  Weight total = 0;
  for (Weight w : per) total += w;
  return total;
}

void enumerate_feasible_ttp(int teams, int k,
                            const std::function<void(const ScheduleTable&)>& visit,
                            bool allow_six) {
  if (teams != 4 && !(allow_six && teams == 6)) {
    throw CapacityExceeded("exhaustive TTP search supports 4 teams (6 with the "
                           "long-running flag), got " + std::to_string(teams));
  }
  const int n = teams;
  const int days = 2 * (n - 1);
  ScheduleTable table(n, days);
  std::vector<std::vector<bool>> played(n, std::vector<bool>(n, false));
  std::vector<int> last_opp(n, -1), run(n, 0);
  std::vector<bool> run_home(n, false);
  std::vector<bool> matched(n, false);

  auto day_step = [&](auto&& self, int day) -> void {
    if (day == days) {
      visit(table);
      return;
    }
    // Build the day's directed perfect matching team by team.
    auto pair_step = [&](auto&& pself) -> void {
      int a = 0;
      while (a < n && matched[a]) ++a;
      if (a == n) {
        std::vector<int> saved_last = last_opp;
        for (int t = 0; t < n; ++t) last_opp[t] = table.at(t, day).opponent;
        self(self, day + 1);
        last_opp = std::move(saved_last);
        std::fill(matched.begin(), matched.end(), true);
        return;
      }
      for (int b = a + 1; b < n; ++b) {
        if (matched[b] || last_opp[a] == b) continue;
        for (int host_is_a = 1; host_is_a >= 0; --host_is_a) {
          const int host = host_is_a ? a : b;
          const int away = host_is_a ? b : a;
          if (played[host][away]) continue;
          const int sr_h = run[host], sr_a = run[away];
          const bool sh_h = run_home[host], sh_a = run_home[away];
          run[host] = (run[host] > 0 && sh_h) ? run[host] + 1 : 1;
          run_home[host] = true;
          run[away] = (run[away] > 0 && !sh_a) ? run[away] + 1 : 1;
          run_home[away] = false;
          if (run[host] <= k && run[away] <= k) {
            matched[a] = matched[b] = true;
            played[host][away] = true;
            table.set_game(day, host, away);
            pself(pself);
            played[host][away] = false;
            matched[a] = matched[b] = false;
          }
          run[host] = sr_h;
          run[away] = sr_a;
          run_home[host] = sh_h;
          run_home[away] = sh_a;
        }
      }
    };
    std::fill(matched.begin(), matched.end(), false);
    pair_step(pair_step);
  };
  day_step(day_step, 0);
}

TtpOptimum brute_force_ttp(const TtpInstance& inst, int k, bool allow_six) {
  TtpOptimum best;
  bool found = false;
  best.cost = std::numeric_limits<Weight>::max();
  enumerate_feasible_ttp(
      inst.teams(), k,
      [&](const ScheduleTable& t) {
        Weight c = schedule_cost(t, inst);
        if (c < best.cost) {
          best.cost = c;
          best.schedule = t;
          found = true;
        }
      },
      allow_six);
  if (!found) throw Error("no feasible schedule exists");
  return best;
}

}  // namespace ttpk
