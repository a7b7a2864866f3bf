#include "ttpk/metric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "text_io.hpp"

namespace ttpk {

MetricInstance::MetricInstance(int size, std::vector<Weight> table)
    : size_(size), table_(std::move(table)) {
  if (size < 0 ||
      table_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
    throw ShapeError("distance table is not " + std::to_string(size) + "x" +
                     std::to_string(size));
  }
}

MetricInstance MetricInstance::Colocated(int size) {
  return MetricInstance(size, std::vector<Weight>(
                                  static_cast<std::size_t>(size) * size, 0));
}

std::string MetricViolation::ToString() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kNegative:
      os << "negative distance (" << a + 1 << "," << b + 1 << ")";
      break;
    case Kind::kDiagonal:
      os << "nonzero self distance at " << a + 1;
      break;
    case Kind::kAsymmetry:
      os << "asymmetry (" << a + 1 << "," << b + 1 << ")";
      break;
    case Kind::kTriangle:
      os << "triangle (" << a + 1 << "," << b + 1 << "," << c + 1 << ")";
      break;
  }
  return os.str();
}

std::vector<MetricViolation> check_metric(const MetricInstance& m) {
  using Kind = MetricViolation::Kind;
  std::vector<MetricViolation> out;
  const int n = m.size();
  for (int u = 0; u < n; ++u) {
    if (m.dist(u, u) != 0) out.push_back({Kind::kDiagonal, u});
    for (int v = 0; v < n; ++v) {
      if (m.dist(u, v) < 0) out.push_back({Kind::kNegative, u, v});
      if (u < v && m.dist(u, v) != m.dist(v, u)) {
        out.push_back({Kind::kAsymmetry, u, v});
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      for (int c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        if (m.dist(a, b) + m.dist(b, c) < m.dist(a, c)) {
          out.push_back({Kind::kTriangle, a, b, c});
        }
      }
    }
  }
  return out;
}

KtcInstance::KtcInstance(MetricInstance metric, int depot, int k,
                         bool restricted, Weight wmax)
    : metric_(std::move(metric)),
      depot_(depot),
      k_(k),
      restricted_(restricted),
      wmax_(wmax) {
  if (metric_.size() < 1) throw ShapeError("instance needs at least one vertex");
  if (depot_ < 0 || depot_ >= metric_.size()) {
    throw std::invalid_argument("depot index out of range");
  }
  if (k_ < 3) throw std::invalid_argument("tour capacity k must be >= 3");
  if (auto v = check_metric(metric_); !v.empty()) {
    throw MetricError("metric violation: " + v.front().ToString() + " (" +
                      std::to_string(v.size()) + " total)");
  }
  if (restricted_) {
    if (wmax_ < 1) throw RestrictedError("restricted instance needs wmax >= 1");
    for (int v = 0; v < metric_.size(); ++v) {
      if (v == depot_) continue;
      Weight w = metric_.dist(depot_, v);
      if (w < 1 || w > wmax_) {
        throw RestrictedError("depot distance " + std::to_string(w) +
                              " of vertex " + std::to_string(v + 1) +
                              " outside [1, " + std::to_string(wmax_) + "]");
      }
    }
  }
}

std::vector<int> KtcInstance::customers() const {
  std::vector<int> out;
  out.reserve(size() - 1);
  for (int v = 0; v < size(); ++v) {
    if (v != depot_) out.push_back(v);
  }
  return out;
}

Weight KtcInstance::depot_sum() const {
  Weight s = 0;
  for (int v = 0; v < size(); ++v) s += dist(depot_, v);
  return s;
}

Weight KtcInstance::min_depot_distance() const {
  Weight best = 0;
  bool any = false;
  for (int v : customers()) {
    Weight w = dist(depot_, v);
    if (!any || w < best) best = w;
    any = true;
  }
  return best;
}

KtcInstance random_restricted_ktc(std::uint64_t seed, int n, int k,
                                  Weight wmax) {
  if (n < 2) throw std::invalid_argument("generator needs n >= 2");
  if (wmax < 1) throw std::invalid_argument("generator needs wmax >= 1");
  if (k < 3) throw std::invalid_argument("tour capacity k must be >= 3");

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> coord(0, wmax);
  std::vector<std::pair<Weight, Weight>> pts(n);
  for (auto& p : pts) p = {coord(rng), coord(rng)};

  const int depot = 0;
  std::vector<Weight> d(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int u, int v) -> Weight& {
    return d[static_cast<std::size_t>(u) * n + v];
  };
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      double dx = static_cast<double>(pts[u].first - pts[v].first);
      double dy = static_cast<double>(pts[u].second - pts[v].second);
      at(u, v) = static_cast<Weight>(std::llround(std::hypot(dx, dy)));
    }
  }
  for (int v = 0; v < n; ++v) {
    if (v == depot) continue;
    Weight w = std::clamp<Weight>(at(depot, v), 1, wmax);
    at(depot, v) = at(v, depot) = w;
  }
  // Floyd-Warshall. Depot distances only shrink, and every path out of the
  // depot starts on a clamped edge, so they stay inside [1, wmax].
  for (int via = 0; via < n; ++via) {
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        at(u, v) = std::min(at(u, v), at(u, via) + at(via, v));
      }
    }
  }
  return KtcInstance(MetricInstance(n, std::move(d)), depot, k, true, wmax);
}

KtcInstance read_instance(std::istream& in) {
  std::string line;
  if (!detail::next_line(in, line) || detail::trim(line) != "KTC 1") {
    throw FormatError("expected 'KTC 1' header");
  }
  if (!detail::next_line(in, line)) throw FormatError("missing parameter line");
  auto kv = detail::parse_key_values(line);
  for (const char* key : {"n", "k", "depot", "restricted", "wmax"}) {
    if (!kv.count(key)) {
      throw FormatError(std::string("parameter line lacks '") + key + "='");
    }
  }
  const auto n = kv.at("n");
  if (n < 1 || n > 100000) throw FormatError("bad vertex count");
  if (kv.at("restricted") != 0 && kv.at("restricted") != 1) {
    throw FormatError("restricted flag must be 0 or 1");
  }
  std::vector<Weight> table;
  table.reserve(static_cast<std::size_t>(n) * n);
  for (long long row = 0; row < n; ++row) {
    if (!detail::next_line(in, line)) {
      throw ShapeError("expected " + std::to_string(n) + " matrix rows, got " +
                       std::to_string(row));
    }
    auto values = detail::parse_ints(line);
    if (static_cast<long long>(values.size()) != n) {
      throw ShapeError("matrix row " + std::to_string(row + 1) + " has " +
                       std::to_string(values.size()) + " entries");
    }
    table.insert(table.end(), values.begin(), values.end());
  }
  if (detail::next_line(in, line)) throw ShapeError("trailing rows after matrix");
  return KtcInstance(MetricInstance(static_cast<int>(n), std::move(table)),
                     static_cast<int>(kv.at("depot") - 1),
                     static_cast<int>(kv.at("k")), kv.at("restricted") == 1,
                     kv.at("wmax"));
}

void write_instance(std::ostream& out, const KtcInstance& inst) {
  out << "KTC 1\n";
  out << "n=" << inst.size() << " k=" << inst.k() << " depot=" << inst.depot() + 1
      << " restricted=" << (inst.restricted() ? 1 : 0) << " wmax=" << inst.wmax()
      << "\n";
  for (int u = 0; u < inst.size(); ++u) {
    for (int v = 0; v < inst.size(); ++v) {
      if (v) out << ' ';
      out << inst.dist(u, v);
    }
    out << '\n';
  }
}

KtcInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_instance(in);
}

void save_instance(const KtcInstance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_instance(out, inst);
}

}  // namespace ttpk
