#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include "ttpk/ktour.hpp"
#include "ttpk/supergames.hpp"
#include "ttpk/ttp.hpp"

namespace ttpk {

// Everything derived from (I, solution): the saturated instance and its
// packing, the super-team layout, the TTP instance J and its constructed
// schedule. U_1 (teams 0..m-1) carries the packing, team a sitting on
// vertex a mod k of path a / k; every other team is a dummy on the depot.
struct ReductionBundle {
  KtcInstance instance;
  Saturation saturation;
  SuperTeamLayout layout;
  TtpInstance ttp;
  std::shared_ptr<const ConstructedSchedule> schedule;
  Weight depot_sum = 0;       // sum of w(o, x) over I
  Weight packing_weight = 0;  // W_pack

  int m() const { return layout.m(); }
  int d() const { return layout.d; }
  int s() const { return layout.s; }
  int teams() const { return layout.teams(); }
  // Dummy count m(s-1); also the multiplier applied to k-TC weights.
  std::int64_t dummies() const { return static_cast<std::int64_t>(m()) * (s() - 1); }
  bool is_dummy(int team) const { return team >= m() && team < teams(); }
};

// Full reduction: saturate, then s = m^2 super-teams.
ReductionBundle build_bundle(const KtcInstance& inst, const KtcSolution& sol);
// Desk-scale variant with m = k*d and a free even s. Requires k*d to cover
// the solution (at least n-1 and k per tour).
ReductionBundle build_mini_bundle(const KtcInstance& inst, const KtcSolution& sol,
                                  int d, int s);

// `count` dummies spread evenly over D_J, always including the first and
// last one (all of D_J if count covers it).
std::vector<int> dummy_sample(const ReductionBundle& b, int count);

struct CostReport {
  Weight total = 0;
  Weight packed_total = 0;  // the m teams of U_1
  Weight dummy_weight = 0;  // one dummy's itinerary (sampled scan)
  std::int64_t dummy_count = 0;
  int sampled = 0;
  bool full_scan = false;
};

// Cost of the bundle's constructed schedule. U_1 is streamed exactly; the
// dummies are either scanned in full or represented by a sample that must
// agree (Error otherwise) and is multiplied by the dummy count.
CostReport streamed_cost(const ReductionBundle& b, int sample = 8, bool full_scan = false,
                         int threads = 1);

// Shortcut a dummy's itinerary over every depot-placed venue; the
// depot-free stretches are the tours. Throws std::invalid_argument if the
// team is not a dummy.
KtcSolution extract_ktc(const ScheduleView& s, const ReductionBundle& b, int dummy);

struct Extraction {
  KtcSolution solution;
  Weight weight = 0;
  int dummy = -1;
};
// Lightest extraction over the sample (first one wins ties).
Extraction best_extraction(const ScheduleView& s, const ReductionBundle& b,
                           std::span<const int> sample, int threads = 1);

struct BoundReport {
  Weight lower_lhs = 0, lower_rhs = 0;
  Weight upper_lhs = 0, upper_rhs = 0;
  Weight lred_lhs = 0, lred_rhs = 0;
  bool lower_pass() const { return lower_lhs >= lower_rhs; }
  bool upper_pass() const { return upper_lhs <= upper_rhs; }
  bool lred_pass() const { return lred_lhs <= lred_rhs; }
  bool all_pass() const { return lower_pass() && upper_pass() && lred_pass(); }
};

// With D = m(s-1), E = 2d(s-1)*sum and F = (4m+6)*sum:
//   lower: cost >= D*S_I + E
//   upper: cost <= D*W_pack + E + F
//   lred:  D*(S_I - W_pack) <= cost - (D*W_pack + E) + F
BoundReport verify_bounds(Weight cost, const ReductionBundle& b, Weight extracted);
// Same, with the exact cost of an arbitrary schedule on J.
BoundReport verify_bounds(const ScheduleView& s, const ReductionBundle& b,
                          Weight extracted, int threads = 1);

void write_bounds(std::ostream& out, const BoundReport& r);

}  // namespace ttpk
