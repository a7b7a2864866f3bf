#include <doctest.h>

#include <sstream>

#include "ttpk/metric.hpp"

using namespace ttpk;

namespace {

std::vector<Weight> line_metric(int n) {
  std::vector<Weight> t(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = std::abs(i - j);
  return t;
}

}  // namespace

TEST_CASE("check_metric accepts a single point") {
  CHECK(check_metric(MetricInstance(1, {0})).empty());
}

TEST_CASE("check_metric names each broken axiom") {
  auto v = check_metric(MetricInstance(2, {0, 1, 2, 0}));
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == MetricViolation::Kind::kAsymmetry);
  CHECK(v[0].a == 0);
  CHECK(v[0].b == 1);

  v = check_metric(MetricInstance(3, {0, 1, 5, 1, 0, 1, 5, 1, 0}));
  bool found = false;
  for (const auto& x : v) {
    found |= x.kind == MetricViolation::Kind::kTriangle && x.a == 0 && x.b == 1 && x.c == 2;
  }
  CHECK(found);

  v = check_metric(MetricInstance(2, {0, -1, -1, 0}));
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].kind == MetricViolation::Kind::kNegative);

  v = check_metric(MetricInstance(2, {3, 1, 1, 0}));
  REQUIRE_FALSE(v.empty());
  CHECK(v[0].kind == MetricViolation::Kind::kDiagonal);
}

TEST_CASE("constructor checks the table shape") {
  CHECK_THROWS_AS(MetricInstance(3, {0, 1, 1, 0}), ShapeError);
}

TEST_CASE("instance invariants raise distinct errors") {
  CHECK_THROWS_AS(KtcInstance(MetricInstance(2, {0, 1, 2, 0}), 0, 3), MetricError);
  CHECK_THROWS_AS(KtcInstance(MetricInstance(3, line_metric(3)), 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(KtcInstance(MetricInstance(3, line_metric(3)), 3, 3), std::invalid_argument);
  // w(o, v) must lie in [1, wmax]
  CHECK_THROWS_AS(KtcInstance(MetricInstance(3, line_metric(3)), 0, 3, true, 1), RestrictedError);
  CHECK_NOTHROW(KtcInstance(MetricInstance(3, line_metric(3)), 0, 3, true, 2));
  CHECK_THROWS_AS(KtcInstance(MetricInstance::Colocated(3), 0, 3, true, 5), RestrictedError);
}

TEST_CASE("generator is deterministic and restricted") {
  KtcInstance a = random_restricted_ktc(7, 5, 3, 10);
  KtcInstance b = random_restricted_ktc(7, 5, 3, 10);
  CHECK(a == b);
  CHECK_FALSE(a == random_restricted_ktc(8, 5, 3, 10));
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 2 + static_cast<int>(seed % 15);
    const Weight wmax = 1 + static_cast<Weight>(seed % 7);
    KtcInstance inst = random_restricted_ktc(seed, n, 3 + seed % 3, wmax);
    CHECK(check_metric(inst.metric()).empty());
    CHECK(inst.restricted());
    for (int v : inst.customers()) {
      CHECK(inst.dist(inst.depot(), v) >= 1);
      CHECK(inst.dist(inst.depot(), v) <= wmax);
    }
  }
  CHECK_THROWS_AS(random_restricted_ktc(1, 1, 3, 10), std::invalid_argument);
  CHECK_THROWS_AS(random_restricted_ktc(1, 5, 3, 0), std::invalid_argument);
}

TEST_CASE("instance file round trip") {
  KtcInstance inst = random_restricted_ktc(7, 5, 3, 10);
  std::stringstream ss;
  write_instance(ss, inst);
  CHECK(ss.str().rfind("KTC 1\nn=5 k=3 depot=1 restricted=1 wmax=10\n", 0) == 0);
  CHECK(read_instance(ss) == inst);

  KtcInstance plain(MetricInstance(4, line_metric(4)), 2, 4);
  std::stringstream ps;
  write_instance(ps, plain);
  CHECK(read_instance(ps) == plain);
}

TEST_CASE("malformed instance files") {
  std::istringstream short_rows("KTC 1\nn=3 k=3 depot=1 restricted=0 wmax=0\n0 1 2\n1 0 1\n");
  CHECK_THROWS_AS(read_instance(short_rows), ShapeError);
  std::istringstream ragged("KTC 1\nn=2 k=3 depot=1 restricted=0 wmax=0\n0 1\n1\n");
  CHECK_THROWS_AS(read_instance(ragged), ShapeError);
  std::istringstream magic("KTC 2\nn=2 k=3 depot=1 restricted=0 wmax=0\n0 1\n1 0\n");
  CHECK_THROWS_AS(read_instance(magic), FormatError);
  std::istringstream token("KTC 1\nn=2 k=3 depot=1 restricted=0 wmax=0\n0 x\n1 0\n");
  CHECK_THROWS_AS(read_instance(token), FormatError);
  std::istringstream zero_depot(
      "KTC 1\nn=3 k=3 depot=1 restricted=1 wmax=5\n0 0 1\n0 0 1\n1 1 0\n");
  CHECK_THROWS_AS(read_instance(zero_depot), RestrictedError);
  std::istringstream asym("KTC 1\nn=2 k=3 depot=1 restricted=0 wmax=0\n0 1\n2 0\n");
  CHECK_THROWS_AS(read_instance(asym), MetricError);
}
