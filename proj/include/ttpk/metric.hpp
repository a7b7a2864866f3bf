#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ttpk/error.hpp"

namespace ttpk {

// Distances are exact integers in abstract units.
using Weight = std::int64_t;

// Square table of integer distances. Construction only checks the shape;
// check_metric() reports the metric axioms.
class MetricInstance {
 public:
  MetricInstance() = default;
  MetricInstance(int size, std::vector<Weight> table);

  // All-zero metric on `size` co-located points.
  static MetricInstance Colocated(int size);

  int size() const { return size_; }
  Weight dist(int u, int v) const {
    return table_[static_cast<std::size_t>(u) * size_ + v];
  }
  const std::vector<Weight>& table() const { return table_; }

  bool operator==(const MetricInstance&) const = default;

 private:
  int size_ = 0;
  std::vector<Weight> table_;
};

struct MetricViolation {
  enum class Kind { kNegative, kDiagonal, kAsymmetry, kTriangle };
  Kind kind;
  int a = -1;
  int b = -1;
  int c = -1;  // only for kTriangle: dist(a,b) + dist(b,c) < dist(a,c)

  bool operator==(const MetricViolation&) const = default;
  std::string ToString() const;
};

// Lists every violated axiom; empty iff the table is a (pseudo)metric.
std::vector<MetricViolation> check_metric(const MetricInstance& m);

// Depot-rooted unit-demand routing instance. Immutable; the constructor
// enforces every invariant and throws a distinct error type per failure.
class KtcInstance {
 public:
  KtcInstance(MetricInstance metric, int depot, int k, bool restricted = false,
              Weight wmax = 0);

  const MetricInstance& metric() const { return metric_; }
  int size() const { return metric_.size(); }
  int depot() const { return depot_; }
  int k() const { return k_; }
  bool restricted() const { return restricted_; }
  Weight wmax() const { return wmax_; }
  Weight dist(int u, int v) const { return metric_.dist(u, v); }

  // Non-depot vertices in increasing order.
  std::vector<int> customers() const;
  // Sum of dist(depot, v) over all vertices.
  Weight depot_sum() const;
  Weight min_depot_distance() const;

  bool operator==(const KtcInstance&) const = default;

 private:
  MetricInstance metric_;
  int depot_;
  int k_;
  bool restricted_;
  Weight wmax_;
};

// Integer grid points with rounded Euclidean distances, depot distances
// clamped into [1, wmax], then closed under shortest paths.
KtcInstance random_restricted_ktc(std::uint64_t seed, int n, int k,
                                  Weight wmax);

// KTC v1 text format (1-based depot index).
KtcInstance read_instance(std::istream& in);
void write_instance(std::ostream& out, const KtcInstance& inst);
KtcInstance load_instance(const std::filesystem::path& path);
void save_instance(const KtcInstance& inst, const std::filesystem::path& path);

}  // namespace ttpk
