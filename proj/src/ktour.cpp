#include "ttpk/ktour.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "text_io.hpp"

namespace ttpk {

Weight tour_weight(const Tour& t, const KtcInstance& inst) {
  const int o = inst.depot();
  Weight w = 0;
  int prev = o;
  for (int v : t.stops) {
    if (v < 0 || v >= inst.size()) {
      throw std::out_of_range("tour vertex " + std::to_string(v + 1) +
                              " out of range");
    }
    if (v == o) throw std::invalid_argument("depot listed as a tour stop");
    w += inst.dist(prev, v);
    prev = v;
  }
  return w + inst.dist(prev, o);
}

Weight solution_weight(const KtcSolution& sol, const KtcInstance& inst) {
  Weight w = 0;
  for (const auto& t : sol.tours) w += tour_weight(t, inst);
  return w;
}

std::string SolutionViolation::ToString() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kEmptyTour: os << "tour " << tour + 1 << " is empty"; break;
    case Kind::kCapacity: os << "tour " << tour + 1 << " exceeds capacity"; break;
    case Kind::kBadVertex:
      os << "tour " << tour + 1 << " lists invalid vertex " << vertex + 1;
      break;
    case Kind::kDepotListed: os << "tour " << tour + 1 << " lists the depot"; break;
    case Kind::kUncovered: os << "vertex " << vertex + 1 << " uncovered"; break;
    case Kind::kDuplicate: os << "vertex " << vertex + 1 << " covered twice"; break;
  }
  return os.str();
}

std::vector<SolutionViolation> validate_ktc_solution(const KtcSolution& sol,
                                                     const KtcInstance& inst) {
  using Kind = SolutionViolation::Kind;
  std::vector<SolutionViolation> out;
  std::vector<int> seen(inst.size(), 0);
  for (int t = 0; t < static_cast<int>(sol.tours.size()); ++t) {
    const auto& stops = sol.tours[t].stops;
    if (stops.empty()) out.push_back({Kind::kEmptyTour, t});
    if (static_cast<int>(stops.size()) > inst.k()) out.push_back({Kind::kCapacity, t});
    for (int v : stops) {
      if (v < 0 || v >= inst.size()) {
        out.push_back({Kind::kBadVertex, t, v});
      } else if (v == inst.depot()) {
        out.push_back({Kind::kDepotListed, t, v});
      } else if (++seen[v] == 2) {
        out.push_back({Kind::kDuplicate, t, v});
      }
    }
  }
  for (int v : inst.customers()) {
    if (seen[v] == 0) out.push_back({Kind::kUncovered, -1, v});
  }
  return out;
}

namespace {

void require_valid(const KtcSolution& sol, const KtcInstance& inst) {
  auto v = validate_ktc_solution(sol, inst);
  if (!v.empty()) throw InvalidSolution("invalid k-TC solution: " + v.front().ToString());
}

Tour oriented(Tour t) {
  std::vector<int> rev(t.stops.rbegin(), t.stops.rend());
  if (rev < t.stops) t.stops = std::move(rev);
  return t;
}

}  // namespace

KtcSolution canonical(KtcSolution sol) {
  for (auto& t : sol.tours) t = oriented(std::move(t));
  std::sort(sol.tours.begin(), sol.tours.end());
  return sol;
}

KtcSolution brute_force_ktc(const KtcInstance& inst) {
  const std::vector<int> cust = inst.customers();
  const int q = static_cast<int>(cust.size());
  if (q > kBruteForceLimit) {
    throw CapacityExceeded("brute force supports at most " +
                           std::to_string(kBruteForceLimit) +
                           " non-depot vertices, got " + std::to_string(q));
  }
  const int k = inst.k();
  const unsigned full = (1u << q) - 1;

  // Best cycle through the depot for every block of at most k customers.
  // Permutations come in lexicographic order and only strict improvements
  // replace the incumbent, so ties keep the lexicographically smallest order,
  // which is also no larger than its own reverse.
  struct Block {
    Weight cost = -1;
    Tour tour;
  };
  std::vector<Block> blocks(full + 1);
  auto block = [&](unsigned mask) -> const Block& {
    Block& b = blocks[mask];
    if (b.cost >= 0) return b;
    std::vector<int> perm;
    for (int i = 0; i < q; ++i) {
      if (mask & (1u << i)) perm.push_back(cust[i]);
    }
    Weight best = std::numeric_limits<Weight>::max();
    do {
      Tour t{perm};
      Weight w = tour_weight(t, inst);
      if (w < best) {
        best = w;
        b.tour = std::move(t);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    b.cost = best;
    return b;
  };

  Weight best_weight = std::numeric_limits<Weight>::max();
  KtcSolution best;
  std::vector<unsigned> chosen;

  auto consider = [&](Weight w) {
    if (w > best_weight) return;
    KtcSolution sol;
    for (unsigned m : chosen) sol.tours.push_back(blocks[m].tour);
    std::sort(sol.tours.begin(), sol.tours.end());
    if (w < best_weight || sol.tours < best.tours) {
      best_weight = w;
      best = std::move(sol);
    }
  };

  // Each block is anchored at the lowest unassigned customer, so every set
  // partition is visited exactly once.
  auto recurse = [&](auto&& self, unsigned rest, Weight acc) -> void {
    if (rest == 0) {
      consider(acc);
      return;
    }
    const unsigned low = rest & (~rest + 1);
    const unsigned others = rest & ~low;
    for (unsigned sub = others;; sub = (sub - 1) & others) {
      if (std::popcount(sub) + 1 <= k) {
        const unsigned m = sub | low;
        const Weight c = block(m).cost;
        if (acc + c <= best_weight) {
          chosen.push_back(m);
          self(self, rest & ~m, acc + c);
          chosen.pop_back();
        }
      }
      if (sub == 0) break;
    }
  };
  recurse(recurse, full, 0);
  return best;
}

KtcSolution heuristic_ktc(const KtcInstance& inst, std::uint64_t seed) {
  const int o = inst.depot();
  const int k = inst.k();
  std::vector<int> cust = inst.customers();
  const int q = static_cast<int>(cust.size());
  if (q == 0) return {};

  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> rank(inst.size());
  for (auto& r : rank) r = rng();

  // Nearest neighbour giant tour.
  std::vector<int> cycle{o};
  std::vector<bool> used(inst.size(), false);
  int cur = o;
  for (int step = 0; step < q; ++step) {
    int pick = -1;
    for (int v : cust) {
      if (used[v]) continue;
      if (pick < 0 || inst.dist(cur, v) < inst.dist(cur, pick) ||
          (inst.dist(cur, v) == inst.dist(cur, pick) && rank[v] < rank[pick])) {
        pick = v;
      }
    }
    used[pick] = true;
    cycle.push_back(pick);
    cur = pick;
  }

  // 2-opt, first improvement, until no move helps. Position 0 (the depot)
  // never moves because reversals start at i+1 >= 1.
  const int len = static_cast<int>(cycle.size());
  for (bool improved = true; improved;) {
    improved = false;
    for (int i = 0; i + 2 < len && !improved; ++i) {
      for (int j = i + 2; j < len && !improved; ++j) {
        if (i == 0 && j == len - 1) continue;
        const int a = cycle[i], b = cycle[i + 1];
        const int c = cycle[j], d = cycle[(j + 1) % len];
        const Weight delta =
            inst.dist(a, c) + inst.dist(b, d) - inst.dist(a, b) - inst.dist(c, d);
        if (delta < 0) {
          std::reverse(cycle.begin() + i + 1, cycle.begin() + j + 1);
          improved = true;
        }
      }
    }
  }

  // Optimal split of the giant tour (both orientations) into consecutive
  // segments of at most k stops.
  auto split = [&](const std::vector<int>& seq, Weight& total) {
    const int n = static_cast<int>(seq.size());
    std::vector<Weight> f(n + 1, std::numeric_limits<Weight>::max());
    std::vector<int> from(n + 1, -1);
    f[0] = 0;
    for (int i = 1; i <= n; ++i) {
      for (int j = std::max(0, i - k); j < i; ++j) {
        Tour t{std::vector<int>(seq.begin() + j, seq.begin() + i)};
        Weight w = f[j] + tour_weight(t, inst);
        if (w < f[i]) {
          f[i] = w;
          from[i] = j;
        }
      }
    }
    KtcSolution sol;
    for (int i = n; i > 0; i = from[i]) {
      sol.tours.push_back(Tour{std::vector<int>(seq.begin() + from[i], seq.begin() + i)});
    }
    std::reverse(sol.tours.begin(), sol.tours.end());
    total = f[n];
    return sol;
  };
  std::vector<int> seq(cycle.begin() + 1, cycle.end());
  Weight forward_w = 0, backward_w = 0;
  KtcSolution forward = split(seq, forward_w);
  std::reverse(seq.begin(), seq.end());
  KtcSolution backward = split(seq, backward_w);
  return backward_w < forward_w ? backward : forward;
}

Saturation pack_solution(const KtcInstance& inst, const KtcSolution& sol, int m) {
  require_valid(sol, inst);
  const int k = inst.k();
  const int n = inst.size();
  const int tours = static_cast<int>(sol.tours.size());
  if (m % k != 0) throw std::invalid_argument("m must be a multiple of k");
  if (m < n - 1 || m < k * tours) {
    throw std::invalid_argument("m = " + std::to_string(m) +
                                " cannot hold the solution's tours");
  }
  Saturation out{SaturatedInstance{inst, m - (n - 1), m}, KPathPacking{k, {}}};
  int next_pad = n;
  for (const auto& t : sol.tours) {
    std::vector<int> path = t.stops;
    while (static_cast<int>(path.size()) < k) path.push_back(next_pad++);
    out.packing.paths.push_back(std::move(path));
  }
  const int end = n + out.instance.pad;
  while (next_pad < end) {
    std::vector<int> path(k);
    std::iota(path.begin(), path.end(), next_pad);
    next_pad += k;
    out.packing.paths.push_back(std::move(path));
  }
  check_packing(out.packing, out.instance);
  return out;
}

Saturation saturate(const KtcInstance& inst, const KtcSolution& sol) {
  const int n = inst.size();
  const int k = inst.k();
  int pad = n * k * k + k - (n - 1) % k;
  int m = (n - 1) + pad;
  if (m % 2 != 0) m += k;
  return pack_solution(inst, sol, m);
}

void check_packing(const KPathPacking& p, const SaturatedInstance& inst) {
  if (p.k <= 0 || p.d() * p.k != inst.m) {
    throw InvalidSolution("packing has " + std::to_string(p.d()) + " paths of k=" +
                          std::to_string(p.k) + " for m=" + std::to_string(inst.m));
  }
  std::vector<char> seen(inst.vertex_count(), 0);
  for (const auto& path : p.paths) {
    if (static_cast<int>(path.size()) != p.k) {
      throw InvalidSolution("packing path of length " + std::to_string(path.size()));
    }
    for (int v : path) {
      if (v < 0 || v >= inst.vertex_count() || v == inst.depot()) {
        throw InvalidSolution("packing uses invalid vertex " + std::to_string(v + 1));
      }
      if (seen[v]++) {
        throw InvalidSolution("packing repeats vertex " + std::to_string(v + 1));
      }
    }
  }
}

Weight packing_weight(const KPathPacking& p, const SaturatedInstance& inst) {
  check_packing(p, inst);
  const int o = inst.depot();
  Weight w = 0;
  for (const auto& path : p.paths) {
    int prev = o;
    for (int v : path) {
      w += inst.dist(prev, v);
      prev = v;
    }
    w += inst.dist(prev, o);
  }
  return w;
}

KtcSolution read_solution(std::istream& in, Weight* weight) {
  std::string line;
  if (!detail::next_line(in, line) || detail::trim(line) != "KTCSOL 1") {
    throw FormatError("expected 'KTCSOL 1' header");
  }
  KtcSolution sol;
  bool have_weight = false;
  while (detail::next_line(in, line)) {
    auto body = detail::trim(line);
    if (body.starts_with("weight=")) {
      Weight w = detail::parse_int(body.substr(7));
      if (weight) *weight = w;
      have_weight = true;
      if (detail::next_line(in, line)) throw FormatError("content after weight line");
      break;
    }
    Tour t;
    for (long long v : detail::parse_ints(body)) {
      t.stops.push_back(static_cast<int>(v - 1));
    }
    sol.tours.push_back(std::move(t));
  }
  if (!have_weight) throw FormatError("missing 'weight=' line");
  return sol;
}

void write_solution(std::ostream& out, const KtcSolution& sol, Weight weight) {
  out << "KTCSOL 1\n";
  for (const auto& t : sol.tours) {
    for (std::size_t i = 0; i < t.stops.size(); ++i) {
      if (i) out << ' ';
      out << t.stops[i] + 1;
    }
    out << '\n';
  }
  out << "weight=" << weight << '\n';
}

KtcSolution load_solution(const std::filesystem::path& path, Weight* weight) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_solution(in, weight);
}

void save_solution(const KtcSolution& sol, Weight weight,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_solution(out, sol, weight);
}

}  // namespace ttpk
