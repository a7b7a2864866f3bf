#include "ttpk/reduction.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ttpk/parallel.hpp"

namespace ttpk {

namespace {

ReductionBundle make_bundle(const KtcInstance& inst, Saturation sat, SuperTeamLayout layout) {
  layout.check();
  const int k = layout.k, m = layout.m();
  std::vector<int> placement(m);
  for (int a = 0; a < m; ++a) {
    placement[a] = sat.instance.position(sat.packing.paths[a / k][a % k]);
  }
  TtpInstance ttp(std::make_shared<const MetricInstance>(inst.metric()), layout.teams(),
                  std::move(placement), inst.depot());
  const Weight w_pack = packing_weight(sat.packing, sat.instance);
  return ReductionBundle{inst,
                         std::move(sat),
                         layout,
                         std::move(ttp),
                         std::make_shared<const ConstructedSchedule>(layout),
                         inst.depot_sum(),
                         w_pack};
}

}  // namespace

ReductionBundle build_bundle(const KtcInstance& inst, const KtcSolution& sol) {
  Saturation sat = saturate(inst, sol);
  const int m = sat.instance.m;
  const long long teams = 1LL * m * m * m;
  if (teams > 40'000'000) {
    throw CapacityExceeded("reduction with m=" + std::to_string(m) + " needs " +
                           std::to_string(teams) + " teams");
  }
  const int k = inst.k();
  return make_bundle(inst, std::move(sat), SuperTeamLayout{k, m / k, m * m});
}

ReductionBundle build_mini_bundle(const KtcInstance& inst, const KtcSolution& sol, int d,
                                  int s) {
  SuperTeamLayout layout{inst.k(), d, s};
  layout.check();
  return make_bundle(inst, pack_solution(inst, sol, layout.m()), layout);
}

std::vector<int> dummy_sample(const ReductionBundle& b, int count) {
  const std::int64_t total = b.dummies();
  std::vector<int> out;
  if (count <= 0) return out;
  if (count >= total) {
    for (int t = b.m(); t < b.teams(); ++t) out.push_back(t);
    return out;
  }
  if (count == 1) return {b.m()};
  for (int i = 0; i < count; ++i) {
    out.push_back(b.m() + static_cast<int>((total - 1) * i / (count - 1)));
  }
  return out;
}

CostReport streamed_cost(const ReductionBundle& b, int sample, bool full_scan, int threads) {
  const ScheduleView& s = *b.schedule;
  CostReport r;
  r.full_scan = full_scan;
  r.dummy_count = b.dummies();

  std::vector<Weight> packed(b.m());
  parallel_for(b.m(), threads, [&](int t) { packed[t] = itinerary_weight(s, b.ttp, t); });
  for (Weight w : packed) r.packed_total += w;

  std::vector<int> teams;
  if (full_scan) {
    teams = dummy_sample(b, b.teams());
  } else {
    teams = dummy_sample(b, std::max(sample, 1));
  }
  std::vector<Weight> per(teams.size());
  parallel_for(static_cast<int>(teams.size()), threads,
               [&](int i) { per[i] = itinerary_weight(s, b.ttp, teams[i]); });
  r.sampled = static_cast<int>(teams.size());
  r.dummy_weight = per.front();

  if (full_scan) {
    Weight sum = 0;
    for (Weight w : per) sum += w;
    r.total = r.packed_total + sum;
    return r;
  }
  for (std::size_t i = 0; i < per.size(); ++i) {
    if (per[i] != r.dummy_weight) {
      throw Error("dummy itineraries disagree: team " + std::to_string(teams[0] + 1) +
                  " weighs " + std::to_string(r.dummy_weight) + ", team " +
                  std::to_string(teams[i] + 1) + " weighs " + std::to_string(per[i]));
    }
  }
  r.total = r.packed_total + r.dummy_weight * r.dummy_count;
  return r;
}

KtcSolution extract_ktc(const ScheduleView& s, const ReductionBundle& b, int dummy) {
  if (!b.is_dummy(dummy)) {
    throw std::invalid_argument("team " + std::to_string(dummy + 1) + " is not a dummy");
  }
  const int depot = b.instance.depot();
  KtcSolution sol;
  Tour current;
  auto close = [&] {
    if (!current.stops.empty()) sol.tours.push_back(std::move(current));
    current = Tour{};
  };
  for (int g = 0; g < s.days(); ++g) {
    const Game game = s.at(dummy, g);
    const int v = b.ttp.vertex(game.home ? dummy : game.opponent);
    if (v == depot) {
      close();
    } else {
      current.stops.push_back(v);
    }
  }
  close();
  return sol;
}

Extraction best_extraction(const ScheduleView& s, const ReductionBundle& b,
                           std::span<const int> sample, int threads) {
  if (sample.empty()) throw std::invalid_argument("extraction sample is empty");
  std::vector<Extraction> found(sample.size());
  parallel_for(static_cast<int>(sample.size()), threads, [&](int i) {
    found[i].dummy = sample[i];
    found[i].solution = extract_ktc(s, b, sample[i]);
    found[i].weight = solution_weight(found[i].solution, b.instance);
  });
  auto best = std::min_element(found.begin(), found.end(),
                               [](const auto& x, const auto& y) { return x.weight < y.weight; });
  return std::move(*best);
}

BoundReport verify_bounds(Weight cost, const ReductionBundle& b, Weight extracted) {
  const Weight boost = b.dummies();
  const Weight slots = b.s() - 1;
  const Weight e = 2 * b.d() * slots * b.depot_sum;
  const Weight f = (4 * Weight{b.m()} + 6) * b.depot_sum;
  BoundReport r;
  r.lower_lhs = cost;
  r.lower_rhs = boost * extracted + e;
  r.upper_lhs = cost;
  r.upper_rhs = boost * b.packing_weight + e + f;
  r.lred_lhs = boost * (extracted - b.packing_weight);
  r.lred_rhs = cost - (boost * b.packing_weight + e) + f;
  return r;
}

BoundReport verify_bounds(const ScheduleView& s, const ReductionBundle& b, Weight extracted,
                          int threads) {
  return verify_bounds(schedule_cost(s, b.ttp, threads), b, extracted);
}

void write_bounds(std::ostream& out, const BoundReport& r) {
  out << "BOUNDS 1\n";
  out << "lower_lhs=" << r.lower_lhs << " lower_rhs=" << r.lower_rhs
      << " pass=" << r.lower_pass() << "\n";
  out << "upper_lhs=" << r.upper_lhs << " upper_rhs=" << r.upper_rhs
      << " pass=" << r.upper_pass() << "\n";
  out << "lred_lhs=" << r.lred_lhs << " lred_rhs=" << r.lred_rhs
      << " pass=" << r.lred_pass() << "\n";
}

}  // namespace ttpk
