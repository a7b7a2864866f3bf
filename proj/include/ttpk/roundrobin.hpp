#pragma once

#include <span>
#include <vector>

#include "ttpk/schedule.hpp"

namespace ttpk {

// Circle method layout. Participant s-1 is the fixed node, drawn at the far
// left; the others sit on a cycle of positions 1..s-1. Position 1 faces the
// fixed node, and for columns c = 2..s/2 the top position c faces the bottom
// position s+1-c. Each round every cycle node moves one position forward.
//
// Participants are 0-based here (participant i is U_{i+1}); rounds,
// positions, and columns keep the 1-based numbering of the drawings.

// Participant at `position` in `round`: ((position - round) mod (s-1)).
int circle_node_at(int s, int round, int position);
// Inverse of circle_node_at for cycle nodes; 0 for the fixed node.
int circle_position_of(int s, int round, int node);
// Position paired with `position` (0 stands for the fixed node).
int circle_partner_position(int s, int position);

struct RoundPairing {
  int column = 0;   // 1 = leftmost edge
  int first = -1;   // fixed node (column 1) or top node
  int second = -1;  // position-1 node (column 1) or bottom node
};

struct RoundPlan {
  int participants = 0;
  std::vector<std::vector<RoundPairing>> rounds;  // s-1 rounds of s/2 pairs
};

// Undirected pairings with positional metadata. Throws std::invalid_argument
// unless s is even and at least 4.
RoundPlan circle_rounds(int s);

// Double round-robin on m teams where every team opens with AH or HA and no
// team has more than two consecutive home or away games. Days 1..m-1 follow
// the circle layout with fixed column directions (column c: top team travels
// iff c is even) and a leftmost edge whose direction flips every day, the
// fixed team travelling on odd days. The second half replays days
// m-2, m-1, 1, ..., m-3 with venues swapped.
ScheduleTable special_ttp2(int m);

enum class Opening { kAwayHome, kHomeAway, kOther };
Opening opening_of(const ScheduleView& s, int team);

enum class SeatDemand { kEither, kAwayHome, kHomeAway };

// seat[team] = schedule row the team plays. Teams with a hard demand get
// the lowest unused seat with that opening, in team order; the remaining
// teams then take the lowest unused seats. Throws std::invalid_argument when
// the demand for one opening exceeds the seats that have it.
std::vector<int> seat_assignment(std::span<const SeatDemand> demands,
                                 const ScheduleView& sched);

}  // namespace ttpk
