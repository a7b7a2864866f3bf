#pragma once

// Independent reference implementations used only by the tests. They share
// no code with the library beyond the plain data types.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <set>
#include <vector>

#include "ttpk/metric.hpp"
#include "ttpk/schedule.hpp"

namespace oracle {

using ttpk::Weight;

// k-TC optimum by subset DP: Held-Karp paths from the depot for every
// customer subset of size <= k, then a partition DP over subsets.
inline Weight ktc_optimum(const ttpk::KtcInstance& inst) {
  std::vector<int> c;
  for (int v = 0; v < inst.size(); ++v) {
    if (v != inst.depot()) c.push_back(v);
  }
  const int n = static_cast<int>(c.size());
  const int full = 1 << n;
  const Weight inf = std::numeric_limits<Weight>::max() / 4;
  const int o = inst.depot();
  std::vector<std::vector<Weight>> path(full, std::vector<Weight>(n, inf));
  for (int i = 0; i < n; ++i) path[1 << i][i] = inst.dist(o, c[i]);
  std::vector<Weight> tour(full, inf);
  for (int mask = 1; mask < full; ++mask) {
    if (std::popcount(static_cast<unsigned>(mask)) > inst.k()) continue;
    for (int last = 0; last < n; ++last) {
      if (!(mask >> last & 1) || path[mask][last] >= inf) continue;
      tour[mask] = std::min(tour[mask], path[mask][last] + inst.dist(c[last], o));
      for (int nxt = 0; nxt < n; ++nxt) {
        if (mask >> nxt & 1) continue;
        Weight& cell = path[mask | 1 << nxt][nxt];
        cell = std::min(cell, path[mask][last] + inst.dist(c[last], c[nxt]));
      }
    }
  }
  std::vector<Weight> best(full, inf);
  best[0] = 0;
  for (int mask = 1; mask < full; ++mask) {
    const int low = mask & -mask;
    for (int sub = mask; sub; sub = (sub - 1) & mask) {
      if (!(sub & low) || tour[sub] >= inf || best[mask ^ sub] >= inf) continue;
      best[mask] = std::min(best[mask], tour[sub] + best[mask ^ sub]);
    }
  }
  return best[full - 1];
}

// Signed rows (+j home vs j, -j away at j, 1-based).
using Signed = std::vector<std::vector<int>>;

inline Signed to_signed(const ttpk::ScheduleView& s) {
  Signed rows(s.teams(), std::vector<int>(s.days()));
  for (int t = 0; t < s.teams(); ++t) {
    for (int g = 0; g < s.days(); ++g) {
      auto game = s.at(t, g);
      rows[t][g] = game.home ? game.opponent + 1 : -(game.opponent + 1);
    }
  }
  return rows;
}

// Direct-traveling total from signed rows and a vertex per team.
inline Weight walk_cost(const Signed& rows, const std::vector<int>& vertex,
                        const std::function<Weight(int, int)>& dist) {
  Weight total = 0;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    int at = vertex[t];
    for (int cell : rows[t]) {
      int next = cell > 0 ? vertex[t] : vertex[-cell - 1];
      total += dist(at, next);
      at = next;
    }
    total += dist(at, vertex[t]);
  }
  return total;
}

// Longest run of equal venues in one signed row.
inline int longest_run(const std::vector<int>& row) {
  int best = 0, run = 0;
  for (std::size_t g = 0; g < row.size(); ++g) {
    run = (g > 0 && (row[g] > 0) == (row[g - 1] > 0)) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

// Every feasible 4-team schedule: each of the three perfect matchings of
// {0,1,2,3} is played on exactly two days (a multiset permutation), and the
// six pairs pick which member hosts first, the second meeting reversed.
inline std::set<Signed> four_team_schedules(int k) {
  const std::array<std::array<std::array<int, 2>, 2>, 3> matchings{{
      {{{0, 1}, {2, 3}}},
      {{{0, 2}, {1, 3}}},
      {{{0, 3}, {1, 2}}},
  }};
  auto pair_id = [](int a, int b) {
    static const int id[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return id[a][b];
  };
  std::set<Signed> out;
  std::array<int, 6> order{0, 0, 1, 1, 2, 2};
  do {
    bool repeat = false;
    for (int g = 1; g < 6; ++g) repeat |= order[g] == order[g - 1];
    if (repeat) continue;
    for (int orient = 0; orient < 64; ++orient) {
      Signed rows(4, std::vector<int>(6));
      std::array<bool, 6> seen{};
      for (int g = 0; g < 6; ++g) {
        for (auto [a, b] : matchings[order[g]]) {
          const int p = pair_id(a, b);
          bool a_hosts = (orient >> p & 1) != 0;
          if (seen[p]) a_hosts = !a_hosts;
          seen[p] = true;
          rows[a][g] = a_hosts ? b + 1 : -(b + 1);
          rows[b][g] = a_hosts ? -(a + 1) : a + 1;
        }
      }
      bool ok = true;
      for (const auto& row : rows) ok &= longest_run(row) <= k;
      if (ok) out.insert(rows);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

}  // namespace oracle
