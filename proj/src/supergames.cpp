#include "ttpk/supergames.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "ttpk/ttp.hpp"

namespace ttpk {

namespace {

int mod(int a, int b) { return ((a % b) + b) % b; }

void require_block(int k, int d, std::span<const int> x, std::span<const int> y) {
  if (k < 1 || d < 1) throw std::invalid_argument("block needs k, d >= 1");
  if (static_cast<int>(x.size()) != k * d || static_cast<int>(y.size()) != k * d) {
    throw std::invalid_argument("super-teams must hold exactly k*d = " +
                                std::to_string(k * d) + " teams");
  }
}

bool fixed_node_is_x(int t) { return t == 1 || t % 2 == 0; }

}  // namespace

SlotPlan slot_plan(int s) {
  if (s < 4 || s % 2 != 0) {
    throw std::invalid_argument("slot plan needs an even super-team count >= 4");
  }
  SlotPlan plan{s, {}};
  const RoundPlan rounds = circle_rounds(s);
  // first_is_x[c-1]: direction of the drawing's column c.
  std::vector<bool> first_is_x(s / 2);
  first_is_x[0] = true;
  for (int c = 2; c <= s / 2; ++c) first_is_x[c - 1] = c % 2 == 0;

  for (int t = 1; t <= s - 1; ++t) {
    if (t >= 2) {
      for (int c = (t == 2 ? 2 : 1); c <= s / 2; ++c) first_is_x[c - 1] = !first_is_x[c - 1];
    }
    std::vector<SuperGame> slot;
    for (const RoundPairing& p : rounds.rounds[t - 1]) {
      SuperGame g;
      g.kind = (p.column == 1 && t >= 2) ? SuperGameKind::kLeft : SuperGameKind::kNormal;
      if (first_is_x[p.column - 1]) {
        g.away = p.first;
        g.home = p.second;
      } else {
        g.away = p.second;
        g.home = p.first;
      }
      slot.push_back(g);
    }
    plan.slots.push_back(std::move(slot));
  }

  // Invariants: one game per super-team per slot, each pair exactly once,
  // slot 1 all normal, one left game (on U_s) afterwards, U_1 always the
  // receiving side of a normal game.
  std::vector<std::vector<int>> met(s, std::vector<int>(s, 0));
  for (int t = 1; t <= s - 1; ++t) {
    std::vector<int> seen(s, 0);
    int lefts = 0;
    for (const SuperGame& g : plan.slots[t - 1]) {
      ++seen[g.away];
      ++seen[g.home];
      ++met[std::min(g.away, g.home)][std::max(g.away, g.home)];
      if (g.kind == SuperGameKind::kLeft) {
        ++lefts;
        if (g.away != s - 1 && g.home != s - 1) {
          throw std::logic_error("left super-game without U_s in slot " + std::to_string(t));
        }
      }
      if (g.away == 0 || g.home == 0) {
        if (g.home != 0 || g.kind != SuperGameKind::kNormal) {
          throw std::logic_error("U_1 not hosting a normal game in slot " + std::to_string(t));
        }
      }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) { return c != 1; })) {
      throw std::logic_error("slot " + std::to_string(t) + " is not a perfect matching");
    }
    if (lefts != (t == 1 ? 0 : 1)) {
      throw std::logic_error("wrong number of left games in slot " + std::to_string(t));
    }
  }
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b) {
      if (met[a][b] != 1) throw std::logic_error("super-teams do not meet exactly once");
    }
  }
  return plan;
}

SlotRole slot_role(int s, int u, int t) {
  const SuperGameKind leftmost = t == 1 ? SuperGameKind::kNormal : SuperGameKind::kLeft;
  if (u == s - 1) return {circle_node_at(s, t, 1), fixed_node_is_x(t), leftmost};
  const int p = circle_position_of(s, t, u);
  if (p == 1) return {s - 1, !fixed_node_is_x(t), leftmost};
  const bool top = p <= s / 2;
  const int c = top ? p : s + 1 - p;
  const bool top_is_x = (c + t) % 2 == 1;
  return {circle_node_at(s, t, s + 1 - p), top == top_is_x, SuperGameKind::kNormal};
}

Game normal_game(int k, int d, bool x_side, int index, int day) {
  const int span = 2 * k * d;
  const int r = mod(day - index % k - 2 * k * (index / k), span);
  const int rem = r % (2 * k);
  const bool x_away = rem < k;
  return {k * (r / (2 * k)) + rem % k, x_side ? !x_away : x_away};
}

namespace {

// Matching played on day `day` of a left block. With kd odd the second half
// runs s_0, s_{kd-1}, s_1, ..., s_{kd-2} so that, as for even kd, the x-side
// opens and closes the block away.
int left_matching(int kd, int day) {
  if (day < kd) return day;
  const int j = day - kd;
  if (kd % 2 == 0 || j == 0) return j;
  return j == 1 ? kd - 1 : j - 1;
}

}  // namespace

Game left_game(int k, int d, bool x_side, int index, int day) {
  const int kd = k * d;
  const int i = left_matching(kd, day);
  const bool x_away = (i % 2 == 0) != (day >= kd);
  return {mod(i - index, kd), x_side ? !x_away : x_away};
}

GameBlock extend_normal(int k, int d, std::span<const int> x, std::span<const int> y) {
  require_block(k, d, x, y);
  const int kd = k * d;
  GameBlock b{k, d, {x.begin(), x.end()}, {y.begin(), y.end()}, ScheduleTable(2 * kd, 2 * kd)};
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int ip = 0; ip < k; ++ip) {
        for (int jp = 0; jp < k; ++jp) {
          const int day = (2 * k * (i + j) + ip + jp) % (2 * kd);
          const int xr = k * i + ip, yr = kd + k * j + jp;
          b.table.set_game(day, yr, xr);
          b.table.set_game((day + k) % (2 * kd), xr, yr);
        }
      }
    }
  }
  return b;
}

GameBlock extend_left(int k, int d, std::span<const int> x, std::span<const int> y) {
  require_block(k, d, x, y);
  const int kd = k * d;
  GameBlock b{k, d, {x.begin(), x.end()}, {y.begin(), y.end()}, ScheduleTable(2 * kd, 2 * kd)};
  // s_i has x travelling; odd i are played reversed in the first half and
  // the second half reverses every venue.
  for (int day = 0; day < 2 * kd; ++day) {
    const int i = left_matching(kd, day);
    const bool x_travels = (i % 2 == 0) == (day < kd);
    for (int a = 0; a < kd; ++a) {
      const int xr = a, yr = kd + mod(i - a, kd);
      if (x_travels) {
        b.table.set_game(day, yr, xr);
      } else {
        b.table.set_game(day, xr, yr);
      }
    }
  }
  return b;
}

void SuperTeamLayout::check() const {
  if (k < 3) throw std::invalid_argument("layout needs k >= 3");
  if (d < 1) throw std::invalid_argument("layout needs d >= 1");
  if (s < 4 || s % 2 != 0) throw std::invalid_argument("layout needs an even s >= 4");
  const long long n = static_cast<long long>(k) * d * s;
  if (2 * (n - 1) > 2'000'000'000LL) throw std::invalid_argument("layout too large");
}

ConstructedSchedule::ConstructedSchedule(SuperTeamLayout layout) : layout_(layout) {
  layout_.check();
  const int m = layout_.m(), s = layout_.s;
  seat_key_.assign(s, -1);
  std::map<std::vector<SeatDemand>, int> keys;
  auto key_of = [&](const std::vector<SeatDemand>& demands) {
    auto [it, fresh] = keys.try_emplace(demands, static_cast<int>(seat_maps_.size()));
    if (fresh) {
      TailSeats ts;
      ts.seat = seat_assignment(demands, tail_);
      ts.team_of_seat.assign(ts.seat.size(), -1);
      for (std::size_t a = 0; a < ts.seat.size(); ++a) ts.team_of_seat[ts.seat[a]] = a;
      seat_maps_.push_back(std::move(ts));
    }
    return it->second;
  };

  if (!merged_tail()) {
    tail_ = special_ttp2(m);
    for (int u = 0; u < s; ++u) seat_key_[u] = key_of(tail_demands(u, s - 1));
  } else {
    tail_ = special_ttp2(2 * m);
    for (int u = 0; u < s; ++u) {
      const int v = slot_role(s, u, s - 1).partner;
      if (u > v) continue;
      std::vector<SeatDemand> demands = tail_demands(u, s - 2);
      std::vector<SeatDemand> other = tail_demands(v, s - 2);
      demands.insert(demands.end(), other.begin(), other.end());
      seat_key_[u] = seat_key_[v] = key_of(demands);
    }
  }
}

std::vector<SeatDemand> ConstructedSchedule::tail_demands(int u, int t) const {
  const int k = layout_.k, d = layout_.d, m = layout_.m();
  const SlotRole role = slot_role(layout_.s, u, t);
  std::vector<SeatDemand> out(m, SeatDemand::kEither);
  for (int a = 0; a < m; ++a) {
    auto venue = [&](int day) {
      return role.kind == SuperGameKind::kNormal ? normal_game(k, d, role.x_side, a, day).home
                                                 : left_game(k, d, role.x_side, a, day).home;
    };
    const bool last = venue(2 * m - 1);
    int run = 1;
    while (run < 2 * m && venue(2 * m - 1 - run) == last) ++run;
    if (run >= k) out[a] = last ? SeatDemand::kAwayHome : SeatDemand::kHomeAway;
  }
  return out;
}

int ConstructedSchedule::tail_begin() const {
  return (layout_.s - (merged_tail() ? 2 : 1)) * 2 * layout_.m();
}

Game ConstructedSchedule::at(int team, int day) const {
  const int m = layout_.m(), s = layout_.s;
  const int u = team / m, a = team % m;
  const int tb = tail_begin();
  if (day < tb) {
    const int t = day / (2 * m) + 1, delta = day % (2 * m);
    const SlotRole role = slot_role(s, u, t);
    const Game g = role.kind == SuperGameKind::kNormal
                       ? normal_game(layout_.k, layout_.d, role.x_side, a, delta)
                       : left_game(layout_.k, layout_.d, role.x_side, a, delta);
    return {role.partner * m + g.opponent, g.home};
  }
  const TailSeats& sm = seat_maps_[seat_key_[u]];
  if (!merged_tail()) {
    const Game g = tail_.at(sm.seat[a], day - tb);
    return {u * m + sm.team_of_seat[g.opponent], g.home};
  }
  const int v = slot_role(s, u, s - 1).partner;
  const int lo = std::min(u, v), hi = std::max(u, v);
  const Game g = tail_.at(sm.seat[u == lo ? a : m + a], day - tb);
  const int local = sm.team_of_seat[g.opponent];
  return {local < m ? lo * m + local : hi * m + local - m, g.home};
}

ScheduleTable assemble_schedule(const SuperTeamLayout& layout, int threads) {
  ConstructedSchedule built(layout);
  ScheduleTable table = materialize(built);
  ValidateOptions opt;
  opt.threads = threads;
  opt.max_per_team = 1;
  auto violations = validate_schedule(table, layout.k, opt);
  if (!violations.empty()) {
    throw AssemblyError("assembled schedule for k=" + std::to_string(layout.k) +
                        " d=" + std::to_string(layout.d) + " s=" + std::to_string(layout.s) +
                        " is infeasible: " + violations.front().ToString() + " (" +
                        std::to_string(violations.size()) + " violations)");
  }
  return table;
}

}  // namespace ttpk
