#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ttpk/metric.hpp"

namespace ttpk {

// Depot-rooted simple cycle; the depot is implicit at both ends.
struct Tour {
  std::vector<int> stops;
  bool operator==(const Tour&) const = default;
  auto operator<=>(const Tour&) const = default;
};

struct KtcSolution {
  std::vector<Tour> tours;
  bool operator==(const KtcSolution&) const = default;
};

// dist(o, s1) + sum dist(s_i, s_i+1) + dist(s_last, o). Throws
// std::out_of_range on a bad vertex and std::invalid_argument if the depot
// is listed as a stop.
Weight tour_weight(const Tour& t, const KtcInstance& inst);
Weight solution_weight(const KtcSolution& sol, const KtcInstance& inst);

struct SolutionViolation {
  enum class Kind {
    kEmptyTour,
    kCapacity,
    kBadVertex,
    kDepotListed,
    kUncovered,
    kDuplicate,
  };
  Kind kind;
  int tour = -1;
  int vertex = -1;
  std::string ToString() const;
};

// Exact-cover contract: every non-depot vertex in exactly one tour, every
// tour with 1..k distinct stops. Empty iff valid.
std::vector<SolutionViolation> validate_ktc_solution(const KtcSolution& sol,
                                                     const KtcInstance& inst);

// Sorted tours, each in the lexicographically smaller orientation.
KtcSolution canonical(KtcSolution sol);

inline constexpr int kBruteForceLimit = 9;

// Exhaustive optimum over set partitions of the customers (at most
// kBruteForceLimit of them). Ties go to the lexicographically smallest
// canonical solution. Throws CapacityExceeded above the limit.
KtcSolution brute_force_ktc(const KtcInstance& inst);

// Nearest neighbour from the depot, 2-opt to a local optimum, then the best
// split of the giant tour into consecutive segments of at most k stops.
// Deterministic per seed (the seed breaks nearest-neighbour ties).
KtcSolution heuristic_ktc(const KtcInstance& inst, std::uint64_t seed);

// The instance I' obtained by adding `pad` vertices on the depot. Vertices
// 0..base.size()-1 keep their meaning; vertex base.size()+i is pad i.
struct SaturatedInstance {
  KtcInstance base;
  int pad = 0;
  int m = 0;  // non-depot vertices of I'

  int vertex_count() const { return base.size() + pad; }
  // Location of an I' vertex in the base metric.
  int position(int v) const { return v < base.size() ? v : base.depot(); }
  bool is_pad(int v) const { return v >= base.size(); }
  Weight dist(int u, int v) const { return base.dist(position(u), position(v)); }
  int depot() const { return base.depot(); }
};

// d = paths.size() vertex-disjoint paths of exactly k vertices of I'.
struct KPathPacking {
  int k = 0;
  std::vector<std::vector<int>> paths;

  int d() const { return static_cast<int>(paths.size()); }
  bool operator==(const KPathPacking&) const = default;
};

struct Saturation {
  SaturatedInstance instance;
  KPathPacking packing;
};

// Closed-form pad count n*k^2 + k - (n-1) mod k, plus k more if the
// resulting m is odd. Each l-tour is filled with k-l pad vertices and the
// leftover pads form zero-weight k-paths. Throws InvalidSolution.
Saturation saturate(const KtcInstance& inst, const KtcSolution& sol);

// Same fill-and-pack step with an explicit target m (multiple of k, at
// least k * tours and n-1). Used for desk-scale layouts.
Saturation pack_solution(const KtcInstance& inst, const KtcSolution& sol, int m);

// Sum of depot-anchored cycle weights. Throws InvalidSolution if the
// packing does not partition the m non-depot vertices of I' into k-paths.
Weight packing_weight(const KPathPacking& p, const SaturatedInstance& inst);
void check_packing(const KPathPacking& p, const SaturatedInstance& inst);

// KTCSOL 1 text format (1-based vertices, trailing weight line).
KtcSolution read_solution(std::istream& in, Weight* weight = nullptr);
void write_solution(std::ostream& out, const KtcSolution& sol, Weight weight);
KtcSolution load_solution(const std::filesystem::path& path,
                          Weight* weight = nullptr);
void save_solution(const KtcSolution& sol, Weight weight,
                   const std::filesystem::path& path);

}  // namespace ttpk
