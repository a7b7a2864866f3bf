#pragma once

#include <span>
#include <vector>

#include "ttpk/roundrobin.hpp"
#include "ttpk/schedule.hpp"

namespace ttpk {

enum class SuperGameKind { kNormal, kLeft };

// Directed super-pairing of one time slot. `away` is the x-side (it travels
// in the opening games of a normal block), `home` the y-side.
struct SuperGame {
  int away = -1;
  int home = -1;
  SuperGameKind kind = SuperGameKind::kNormal;
  bool operator==(const SuperGame&) const = default;
};

// s-1 super-game slots; the intra-super-team slot that follows is implicit.
struct SlotPlan {
  int s = 0;
  std::vector<std::vector<SuperGame>> slots;  // slots[t-1], leftmost edge first
};

// Circle rotation with edge directions attached to drawing positions: slot 1
// has the leftmost edge U_s -> U_1 and column c directed top -> bottom iff c
// is even; slot 2 flips every edge but the leftmost, which turns left-type;
// every later slot flips all edges. Invariants are checked on the result
// (std::logic_error if one fails). Throws std::invalid_argument for odd s.
SlotPlan slot_plan(int s);

// Closed form of the same plan for one super-team (0-based u, 1-based t).
struct SlotRole {
  int partner = -1;
  bool x_side = false;
  SuperGameKind kind = SuperGameKind::kNormal;
};
SlotRole slot_role(int s, int u, int t);

// Cell of a 2kd-day super-game block seen from one team: `index` is the
// team's position inside its super-team, the result's opponent is an index
// into the other super-team.
Game normal_game(int k, int d, bool x_side, int index, int day);
Game left_game(int k, int d, bool x_side, int index, int day);

// A 2kd-day block between X (rows 0..kd-1) and Y (rows kd..2kd-1), built
// forward from the extension rules. Opponents in `table` are row numbers.
struct GameBlock {
  int k = 0;
  int d = 0;
  std::vector<int> x;  // external team ids, carried through for assembly
  std::vector<int> y;
  ScheduleTable table;
};

// x_{ki+i'} away at y_{kj+j'} on day (2k(i+j)+i'+j') mod 2kd, home k days
// later. Throws std::invalid_argument unless |X| = |Y| = kd.
GameBlock extend_normal(int k, int d, std::span<const int> x, std::span<const int> y);
// Matchings s_i = {x_a -> y_{(i-a) mod kd}} in the order s_0, ~s_1, s_2, ...
// (~ = venues swapped), then the same kd days once more with venues swapped.
// For odd kd the repeated half is reordered to s_0, s_{kd-1}, s_1, ...,
// s_{kd-2} so the x-side still starts and ends the block away.
GameBlock extend_left(int k, int d, std::span<const int> x, std::span<const int> y);

struct SuperTeamLayout {
  int k = 0;
  int d = 0;
  int s = 0;

  int m() const { return k * d; }
  int teams() const { return m() * s; }
  int days() const { return 2 * (teams() - 1); }
  // Days covered by super-game slots 1..s-1.
  int super_slot_days() const { return (s - 1) * 2 * m(); }
  // Throws std::invalid_argument unless k >= 3, d >= 1, s even >= 4.
  void check() const;
};

// The full assembled schedule, computed cell by cell. Team u*m + a is the
// a-th member of super-team U_{u+1}. Memory is O(s + m^2), so this also
// backs reduction-scale instances that cannot be materialized.
//
// With m even the last 2m-2 days are one special TTP-2 round per
// super-team. With m odd no single-round-robin exists inside a super-team,
// so slot s-1 and the intra slot are replaced by one special TTP-2 round on
// each slot-(s-1) pair of super-teams (2m teams, 4m-2 days); the day count
// is unchanged.
class ConstructedSchedule final : public ScheduleView {
 public:
  explicit ConstructedSchedule(SuperTeamLayout layout);

  int teams() const override { return layout_.teams(); }
  int days() const override { return layout_.days(); }
  Game at(int team, int day) const override;

  const SuperTeamLayout& layout() const { return layout_; }
  bool merged_tail() const { return layout_.m() % 2 != 0; }
  // First day of the TTP-2 tail.
  int tail_begin() const;

 private:
  struct TailSeats {
    std::vector<int> seat;          // local team -> row of `tail_`
    std::vector<int> team_of_seat;  // inverse
  };

  // Trailing-run demands of one super-team at the end of slot t.
  std::vector<SeatDemand> tail_demands(int u, int t) const;

  SuperTeamLayout layout_;
  ScheduleTable tail_;
  std::vector<TailSeats> seat_maps_;
  std::vector<int> seat_key_;  // per super-team (per pair leader when merged)
};

// Materializes and validates; throws AssemblyError naming the first
// violation.
ScheduleTable assemble_schedule(const SuperTeamLayout& layout, int threads = 1);

}  // namespace ttpk
