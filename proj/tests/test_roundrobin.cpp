#include <doctest.h>

#include <set>

#include "ttpk/roundrobin.hpp"
#include "ttpk/ttp.hpp"

using namespace ttpk;

namespace {

std::set<int> pair_of(const RoundPairing& p) { return {p.first, p.second}; }

}  // namespace

TEST_CASE("circle layout of the sixteen-node drawings") {
  RoundPlan plan = circle_rounds(16);
  REQUIRE(plan.rounds.size() == 15u);
  CHECK(plan.rounds[0][0].column == 1);
  CHECK(pair_of(plan.rounds[0][0]) == std::set<int>{15, 0});
  CHECK(pair_of(plan.rounds[1][0]) == std::set<int>{15, 14});
  CHECK(pair_of(plan.rounds[2][0]) == std::set<int>{15, 13});
  // round r puts node (i - r) mod 15 at cycle position i
  CHECK(circle_node_at(16, 1, 2) == 1);
  CHECK(circle_node_at(16, 3, 1) == 13);
  for (int r = 1; r <= 15; ++r) {
    for (int node = 0; node < 15; ++node) {
      CHECK(circle_node_at(16, r, circle_position_of(16, r, node)) == node);
    }
  }
}

TEST_CASE("circle rounds cover every pair once") {
  for (int s = 4; s <= 64; s += 2) {
    RoundPlan plan = circle_rounds(s);
    CHECK(plan.rounds.size() == static_cast<std::size_t>(s - 1));
    std::vector<int> met(s * s, 0);
    for (const auto& round : plan.rounds) {
      std::vector<int> seen(s, 0);
      CHECK(round.size() == static_cast<std::size_t>(s / 2));
      for (const auto& p : round) {
        ++seen[p.first];
        ++seen[p.second];
        ++met[std::min(p.first, p.second) * s + std::max(p.first, p.second)];
      }
      for (int c : seen) CHECK(c == 1);
    }
    for (int a = 0; a < s; ++a)
      for (int b = a + 1; b < s; ++b) CHECK(met[a * s + b] == 1);
  }
  CHECK_THROWS_AS(circle_rounds(5), std::invalid_argument);
  CHECK_THROWS_AS(circle_rounds(2), std::invalid_argument);
}

TEST_CASE("special TTP-2 on six teams") {
  ScheduleTable t = special_ttp2(6);
  CHECK(t.days() == 10);
  CHECK(t.signed_cell(0, 0) == 6);   // team 1, day 1: home vs 6
  CHECK(t.signed_cell(4, 2) == -3);  // team 5, day 3: away at 3
  ScheduleTable golden = load_schedule(TTPK_GOLDEN_DIR "/table_ttp2_m6.txt");
  CHECK(t == golden);
  int ah = 0, ha = 0;
  for (int team = 0; team < 6; ++team) {
    ah += opening_of(t, team) == Opening::kAwayHome;
    ha += opening_of(t, team) == Opening::kHomeAway;
  }
  CHECK(ah == 3);
  CHECK(ha == 3);
  CHECK_THROWS_AS(special_ttp2(7), std::invalid_argument);
}

TEST_CASE("special TTP-2 is feasible for k=2 with half AH openings") {
  for (int m = 4; m <= 40; m += 2) {
    ScheduleTable t = special_ttp2(m);
    CHECK(validate_schedule(t, 2).empty());
    int ah = 0;
    for (int team = 0; team < m; ++team) {
      Opening o = opening_of(t, team);
      CHECK(o != Opening::kOther);
      ah += o == Opening::kAwayHome;
    }
    CHECK(ah == m / 2);
  }
}

TEST_CASE("seat assignment") {
  ScheduleTable t = special_ttp2(6);
  std::vector<SeatDemand> either(6, SeatDemand::kEither);
  CHECK(seat_assignment(either, t) == std::vector<int>{0, 1, 2, 3, 4, 5});

  std::vector<SeatDemand> two(6, SeatDemand::kEither);
  two[0] = two[1] = SeatDemand::kAwayHome;
  two[5] = SeatDemand::kHomeAway;
  auto seat = seat_assignment(two, t);
  CHECK(opening_of(t, seat[0]) == Opening::kAwayHome);
  CHECK(opening_of(t, seat[1]) == Opening::kAwayHome);
  CHECK(opening_of(t, seat[5]) == Opening::kHomeAway);
  CHECK(std::set<int>(seat.begin(), seat.end()).size() == 6u);

  std::vector<SeatDemand> too_many(6, SeatDemand::kEither);
  for (int i = 0; i < 4; ++i) too_many[i] = SeatDemand::kAwayHome;
  CHECK_THROWS_AS(seat_assignment(too_many, t), std::invalid_argument);
}
