#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "ttpk/ktour.hpp"

using namespace ttpk;

namespace {

KtcInstance line_instance(int n, int k = 3) {
  std::vector<Weight> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = std::abs(i - j);
  return KtcInstance(MetricInstance(n, t), 0, k);
}

// Depot 0 at distance `far` from each customer, customers pairwise `near`.
KtcInstance star(int customers, Weight far, Weight near, int k = 3) {
  const int n = customers + 1;
  std::vector<Weight> t(n * n, near);
  for (int i = 0; i < n; ++i) {
    t[i * n + i] = 0;
    if (i > 0) t[i] = t[i * n] = far;
  }
  return KtcInstance(MetricInstance(n, t), 0, k);
}

Weight sum_depot(const KtcInstance& inst) {
  Weight s = 0;
  for (int v : inst.customers()) s += inst.dist(inst.depot(), v);
  return s;
}

}  // namespace

TEST_CASE("tour weights") {
  CHECK(tour_weight(Tour{{1}}, star(1, 3, 0)) == 6);
  CHECK(tour_weight(Tour{{1, 2}}, star(2, 1, 0)) == 2);
  KtcInstance line = line_instance(4);
  CHECK(tour_weight(Tour{{1, 2, 3}}, line) == 6);
  CHECK(solution_weight(brute_force_ktc(line), line) == 6);
  CHECK_THROWS_AS(tour_weight(Tour{{7}}, line), std::out_of_range);
  CHECK_THROWS_AS(tour_weight(Tour{{0, 1}}, line), std::invalid_argument);
}

TEST_CASE("solution validation") {
  KtcInstance line = line_instance(5);
  KtcSolution singles{{Tour{{1}}, Tour{{2}}, Tour{{3}}, Tour{{4}}}};
  CHECK(validate_ktc_solution(singles, line).empty());

  auto v = validate_ktc_solution(KtcSolution{{Tour{{1, 2, 3, 4}}}}, line);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == SolutionViolation::Kind::kCapacity);

  v = validate_ktc_solution(KtcSolution{{Tour{{1, 2}}, Tour{{2, 3, 4}}}}, line);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == SolutionViolation::Kind::kDuplicate);
  CHECK(v[0].vertex == 2);

  v = validate_ktc_solution(KtcSolution{{Tour{{1, 2}}, Tour{{3}}}}, line);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == SolutionViolation::Kind::kUncovered);

  v = validate_ktc_solution(KtcSolution{{Tour{{0, 1, 2}}, Tour{{3, 4}}}}, line);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].kind == SolutionViolation::Kind::kDepotListed);

  v = validate_ktc_solution(KtcSolution{{Tour{}, Tour{{1, 2, 3}}, Tour{{4}}}}, line);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].kind == SolutionViolation::Kind::kEmptyTour);
}

TEST_CASE("exact solver") {
  KtcSolution sol = brute_force_ktc(star(3, 1, 0));
  CHECK(sol.tours.size() == 1);
  CHECK(solution_weight(sol, star(3, 1, 0)) == 2);
  CHECK(solution_weight(brute_force_ktc(star(1, 5, 0)), star(1, 5, 0)) == 10);

  // Unit-square corners (side 2) around a central depot, Manhattan distances.
  const int px[] = {1, 0, 2, 0, 2}, py[] = {1, 0, 0, 2, 2};
  std::vector<Weight> t(25);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) t[i * 5 + j] = std::abs(px[i] - px[j]) + std::abs(py[i] - py[j]);
  KtcInstance square(MetricInstance(5, t), 0, 3);
  CHECK(solution_weight(brute_force_ktc(square), square) == oracle::ktc_optimum(square));

  CHECK_THROWS_AS(brute_force_ktc(random_restricted_ktc(1, 11, 3, 10)), CapacityExceeded);
  CHECK_NOTHROW(brute_force_ktc(random_restricted_ktc(1, 10, 3, 10)));
}

TEST_CASE("exact solver ties are broken canonically") {
  KtcInstance flat = star(4, 1, 0);
  KtcSolution a = brute_force_ktc(flat);
  CHECK(a == canonical(a));
  CHECK(a == brute_force_ktc(flat));
}

TEST_CASE("heuristic solutions") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    KtcInstance inst = random_restricted_ktc(seed, 2 + seed % 9, 3 + seed % 2, 12);
    KtcSolution h = heuristic_ktc(inst, seed);
    CHECK(validate_ktc_solution(h, inst).empty());
    CHECK(solution_weight(h, inst) >= oracle::ktc_optimum(inst));
    CHECK(h == heuristic_ktc(inst, seed));
  }
  KtcInstance zero(MetricInstance::Colocated(7), 0, 3);
  CHECK(solution_weight(heuristic_ktc(zero, 3), zero) == 0);
}

TEST_CASE("weight bounds on restricted instances") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    const int n = 2 + seed % 25;
    KtcInstance inst = random_restricted_ktc(seed, n, 3 + seed % 3, 9);
    const Weight w = solution_weight(heuristic_ktc(inst, seed), inst);
    CHECK(w >= 2 * ((n - 1) / inst.k()) * inst.min_depot_distance());
    CHECK(w <= 2 * sum_depot(inst));
  }
}

TEST_CASE("saturation counts") {
  KtcInstance ten = random_restricted_ktc(3, 10, 3, 10);
  Saturation s10 = saturate(ten, heuristic_ktc(ten, 1));
  CHECK(s10.instance.m == 102);
  CHECK(s10.instance.pad == 93);
  CHECK(s10.packing.d() == 34);

  KtcInstance five = random_restricted_ktc(7, 5, 3, 10);
  KtcSolution sol = heuristic_ktc(five, 1);
  Saturation s5 = saturate(five, sol);
  CHECK(s5.instance.m == 54);
  CHECK(s5.packing.d() == 18);
  CHECK(s5.instance.m % 2 == 0);
  CHECK(packing_weight(s5.packing, s5.instance) == solution_weight(sol, five));
  for (const auto& p : s5.packing.paths) CHECK(p.size() == 3u);

  KtcSolution bad{{Tour{{1}}}};
  CHECK_THROWS_AS(saturate(five, bad), InvalidSolution);
}

TEST_CASE("saturation keeps the optimum") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    KtcInstance inst = random_restricted_ktc(seed, 2 + seed % 6, 3, 8);
    const Weight opt = oracle::ktc_optimum(inst);
    Saturation sat = saturate(inst, brute_force_ktc(inst));
    CHECK(packing_weight(sat.packing, sat.instance) == opt);
    // the worst cover (all singletons) still fits after padding
    KtcSolution singles;
    for (int v : inst.customers()) singles.tours.push_back(Tour{{v}});
    Saturation worst = saturate(inst, singles);
    CHECK(packing_weight(worst.packing, worst.instance) >= opt);
  }
}

TEST_CASE("packing weights") {
  KtcInstance line = line_instance(4);
  Saturation sat = pack_solution(line, KtcSolution{{Tour{{1, 2, 3}}}}, 6);
  CHECK(sat.packing.paths[0] == std::vector<int>{1, 2, 3});
  CHECK(packing_weight(sat.packing, sat.instance) == 6);

  KPathPacking pads{3, {{4, 5, 6}, {7, 8, 9}}};
  SaturatedInstance only_pads{line_instance(4), 6, 9};
  CHECK_THROWS_AS(packing_weight(pads, only_pads), InvalidSolution);  // misses 1..3
  KtcInstance lone(MetricInstance::Colocated(1), 0, 3);
  SaturatedInstance empty{lone, 6, 6};
  CHECK(packing_weight(KPathPacking{3, {{1, 2, 3}, {4, 5, 6}}}, empty) == 0);
}

TEST_CASE("solution file round trip") {
  KtcSolution sol{{Tour{{2, 0}}, Tour{{1}}}};
  std::stringstream ss;
  write_solution(ss, sol, 17);
  CHECK(ss.str() == "KTCSOL 1\n3 1\n2\nweight=17\n");
  Weight w = 0;
  CHECK(read_solution(ss, &w) == sol);
  CHECK(w == 17);
  std::istringstream missing("KTCSOL 1\n1 2\n");
  CHECK_THROWS_AS(read_solution(missing), FormatError);
}
