#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ttpk/metric.hpp"
#include "ttpk/schedule.hpp"

namespace ttpk {

// Teams placed on metric vertices. The first `placement.size()` teams have
// explicit vertices; every later team sits on `default_vertex`. That keeps
// reduction-scale instances (one explicit super-team, millions of
// co-located dummies) linear in the explicit part.
class TtpInstance {
 public:
  TtpInstance(std::shared_ptr<const MetricInstance> metric,
              std::vector<int> placement);
  TtpInstance(std::shared_ptr<const MetricInstance> metric, int teams,
              std::vector<int> placement, int default_vertex);

  // Every team on vertex 0 of a one-point metric.
  static TtpInstance Colocated(int teams);

  int teams() const { return teams_; }
  int vertex(int team) const {
    return team < static_cast<int>(placement_.size()) ? placement_[team]
                                                      : default_vertex_;
  }
  const MetricInstance& metric() const { return *metric_; }
  Weight dist(int a, int b) const { return metric_->dist(a, b); }

 private:
  std::shared_ptr<const MetricInstance> metric_;
  int teams_;
  std::vector<int> placement_;
  int default_vertex_;
};

struct ScheduleViolation {
  enum class Kind {
    kDayCount,
    kBadOpponent,
    kMutual,
    kMissingGame,
    kDuplicateGame,
    kNoRepeat,
    kBoundedByK,
  };
  Kind kind;
  int team = -1;
  int day = -1;
  int other = -1;

  auto operator<=>(const ScheduleViolation&) const = default;
  std::string ToString() const;
};

struct ValidateOptions {
  // Restrict the per-team checks to these teams (sampled validation at
  // reduction scale). Cross-row reads still consult the opponents' rows.
  std::optional<std::vector<int>> teams;
  int threads = 1;
  // Stop collecting after this many violations per team.
  int max_per_team = 16;
};

// Mutual consistency, double round-robin completeness, no-repeat and
// bounded-by-k. Violations come back sorted; empty iff feasible.
std::vector<ScheduleViolation> validate_schedule(const ScheduleView& s, int k,
                                                 const ValidateOptions& opt = {});

struct Itinerary {
  std::vector<int> venues;  // home, one venue per day, home
  Weight weight = 0;
};

// Direct-traveling walk of one team; reads only that team's row.
Itinerary itinerary(const ScheduleView& s, const TtpInstance& inst, int team);
// Same weight without storing the venues.
Weight itinerary_weight(const ScheduleView& s, const TtpInstance& inst, int team);
// Walk that starts at home before `begin_day` and returns home after the
// game on `end_day - 1`.
Weight window_weight(const ScheduleView& s, const TtpInstance& inst, int team,
                     int begin_day, int end_day);
// Maximal runs of away games inside [begin_day, end_day).
int away_trips(const ScheduleView& s, int team, int begin_day, int end_day);
// Sum of consecutive distances along a vertex walk.
Weight walk_weight(const std::vector<int>& venues, const MetricInstance& m);

// Exact total over all teams.
Weight schedule_cost(const ScheduleView& s, const TtpInstance& inst, int threads = 1);

struct TtpOptimum {
  ScheduleTable schedule;
  Weight cost = 0;
};

// Exhaustive day-by-day search with no-repeat and bounded-by-k pruning.
// Teams limited to 4, or 6 with `allow_six` (slow). Ties keep the first
// schedule in search order. Throws CapacityExceeded beyond the bound.
TtpOptimum brute_force_ttp(const TtpInstance& inst, int k, bool allow_six = false);

// Calls `visit` on every feasible schedule in search order.
void enumerate_feasible_ttp(int teams, int k,
                            const std::function<void(const ScheduleTable&)>& visit,
                            bool allow_six = false);

}  // namespace ttpk
