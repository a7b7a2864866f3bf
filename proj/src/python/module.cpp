#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ttpk/ktour.hpp"
#include "ttpk/metric.hpp"
#include "ttpk/reduction.hpp"
#include "ttpk/roundrobin.hpp"
#include "ttpk/supergames.hpp"
#include "ttpk/ttp.hpp"

namespace py = pybind11;
using namespace ttpk;

namespace {

// Schedules cross the boundary as signed tables (+j home vs j, -j away at j,
// 1-based); tours as lists of 0-based vertices.
using Rows = std::vector<std::vector<int>>;

Rows to_rows(const ScheduleView& s) {
  Rows rows(s.teams(), std::vector<int>(s.days()));
  for (int t = 0; t < s.teams(); ++t) {
    for (int g = 0; g < s.days(); ++g) {
      Game game = s.at(t, g);
      rows[t][g] = game.home ? game.opponent + 1 : -(game.opponent + 1);
    }
  }
  return rows;
}

ScheduleTable from_rows(const Rows& rows) {
  if (rows.empty()) throw std::invalid_argument("empty schedule");
  return ScheduleTable::FromSigned(static_cast<int>(rows.size()),
                                   static_cast<int>(rows[0].size()), rows);
}

KtcSolution to_solution(const std::vector<std::vector<int>>& tours) {
  KtcSolution sol;
  for (const auto& t : tours) sol.tours.push_back(Tour{t});
  return sol;
}

std::vector<std::vector<int>> from_solution(const KtcSolution& sol) {
  std::vector<std::vector<int>> out;
  for (const auto& t : sol.tours) out.push_back(t.stops);
  return out;
}

std::vector<int> iota_vec(int from, int count) {
  std::vector<int> v(count);
  for (int i = 0; i < count; ++i) v[i] = from + i;
  return v;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Traveling tournament toolkit core";

  // Translators run newest first, so the subclass is registered last.
  auto& base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<CapacityExceeded>(m, "CapacityExceeded", base.ptr());

  py::class_<MetricInstance>(m, "MetricInstance")
      .def(py::init<int, std::vector<Weight>>(), py::arg("size"), py::arg("flat"))
      .def_property_readonly("size", &MetricInstance::size)
      .def("dist", &MetricInstance::dist)
      .def("violations", [](const MetricInstance& mi) {
        std::vector<std::string> out;
        for (const auto& v : check_metric(mi)) out.push_back(v.ToString());
        return out;
      });

  py::class_<KtcInstance>(m, "KtcInstance")
      .def(py::init<MetricInstance, int, int, bool, Weight>(), py::arg("metric"),
           py::arg("depot"), py::arg("k"), py::arg("restricted") = false, py::arg("wmax") = 0)
      .def_property_readonly("size", &KtcInstance::size)
      .def_property_readonly("depot", &KtcInstance::depot)
      .def_property_readonly("k", &KtcInstance::k)
      .def_property_readonly("restricted", &KtcInstance::restricted)
      .def_property_readonly("wmax", &KtcInstance::wmax)
      .def_property_readonly("metric", &KtcInstance::metric)
      .def("dist", &KtcInstance::dist)
      .def("depot_sum", &KtcInstance::depot_sum)
      .def("__eq__", [](const KtcInstance& a, const KtcInstance& b) { return a == b; });

  m.def("random_restricted_ktc", &random_restricted_ktc, py::arg("seed"), py::arg("n"),
        py::arg("k"), py::arg("wmax"));
  m.def("load_instance", [](const std::string& p) { return load_instance(p); });
  m.def("save_instance", [](const KtcInstance& i, const std::string& p) { save_instance(i, p); });

  m.def("solution_weight", [](const KtcInstance& inst, const std::vector<std::vector<int>>& t) {
    return solution_weight(to_solution(t), inst);
  });
  m.def("validate_ktc_solution",
        [](const KtcInstance& inst, const std::vector<std::vector<int>>& t) {
          std::vector<std::string> out;
          for (const auto& v : validate_ktc_solution(to_solution(t), inst)) {
            out.push_back(v.ToString());
          }
          return out;
        });
  m.def("brute_force_ktc",
        [](const KtcInstance& inst) { return from_solution(brute_force_ktc(inst)); });
  m.def("heuristic_ktc",
        [](const KtcInstance& inst, std::uint64_t seed) {
          return from_solution(heuristic_ktc(inst, seed));
        },
        py::arg("inst"), py::arg("seed") = 1);
  m.def("saturate", [](const KtcInstance& inst, const std::vector<std::vector<int>>& t) {
    Saturation sat = saturate(inst, to_solution(t));
    py::dict out;
    out["m"] = sat.instance.m;
    out["pad"] = sat.instance.pad;
    out["paths"] = sat.packing.paths;
    out["weight"] = packing_weight(sat.packing, sat.instance);
    return out;
  });

  m.def("special_ttp2", [](int teams) { return to_rows(special_ttp2(teams)); });
  m.def("normal_block", [](int k, int d) {
    return to_rows(extend_normal(k, d, iota_vec(0, k * d), iota_vec(k * d, k * d)).table);
  });
  m.def("left_block", [](int k, int d) {
    return to_rows(extend_left(k, d, iota_vec(0, k * d), iota_vec(k * d, k * d)).table);
  });
  m.def("assemble_schedule",
        [](int k, int d, int s, int threads) {
          return to_rows(assemble_schedule(SuperTeamLayout{k, d, s}, threads));
        },
        py::arg("k"), py::arg("d"), py::arg("s"), py::arg("threads") = 1);
  m.def("validate_schedule",
        [](const Rows& rows, int k) {
          std::vector<std::string> out;
          for (const auto& v : validate_schedule(from_rows(rows), k)) out.push_back(v.ToString());
          return out;
        });
  m.def("colocated_cost", [](const Rows& rows) {
    ScheduleTable t = from_rows(rows);
    return schedule_cost(t, TtpInstance::Colocated(t.teams()));
  });

  py::class_<ReductionBundle>(m, "Bundle")
      .def_property_readonly("m", &ReductionBundle::m)
      .def_property_readonly("d", &ReductionBundle::d)
      .def_property_readonly("s", &ReductionBundle::s)
      .def_property_readonly("teams", &ReductionBundle::teams)
      .def_property_readonly("dummies", &ReductionBundle::dummies)
      .def_readonly("packing_weight", &ReductionBundle::packing_weight)
      .def_readonly("depot_sum", &ReductionBundle::depot_sum)
      .def("vertex", [](const ReductionBundle& b, int team) { return b.ttp.vertex(team); })
      .def("game",
           [](const ReductionBundle& b, int team, int day) {
             Game g = b.schedule->at(team, day);
             return py::make_tuple(g.opponent, g.home);
           })
      .def("itinerary_weight",
           [](const ReductionBundle& b, int team) {
             return itinerary_weight(*b.schedule, b.ttp, team);
           })
      .def("streamed_cost",
           [](const ReductionBundle& b, int sample, bool full_scan, int threads) {
             CostReport r = streamed_cost(b, sample, full_scan, threads);
             py::dict out;
             out["total"] = r.total;
             out["packed_total"] = r.packed_total;
             out["dummy_weight"] = r.dummy_weight;
             out["dummy_count"] = r.dummy_count;
             return out;
           },
           py::arg("sample") = 8, py::arg("full_scan") = false, py::arg("threads") = 1)
      .def("extract",
           [](const ReductionBundle& b, int dummy) {
             return from_solution(extract_ktc(*b.schedule, b, dummy));
           })
      .def("verify_bounds",
           [](const ReductionBundle& b, int sample, int threads) {
             Weight cost = streamed_cost(b, sample, false, threads).total;
             std::vector<int> dummies = dummy_sample(b, sample);
             Extraction ex = best_extraction(*b.schedule, b, dummies, threads);
             BoundReport r = verify_bounds(cost, b, ex.weight);
             py::dict out;
             out["cost"] = cost;
             out["extracted"] = ex.weight;
             out["lower"] = py::make_tuple(r.lower_lhs, r.lower_rhs, r.lower_pass());
             out["upper"] = py::make_tuple(r.upper_lhs, r.upper_rhs, r.upper_pass());
             out["lred"] = py::make_tuple(r.lred_lhs, r.lred_rhs, r.lred_pass());
             return out;
           },
           py::arg("sample") = 8, py::arg("threads") = 1);

  m.def("build_bundle", [](const KtcInstance& inst, const std::vector<std::vector<int>>& t) {
    return build_bundle(inst, to_solution(t));
  });
  m.def("build_mini_bundle",
        [](const KtcInstance& inst, const std::vector<std::vector<int>>& t, int d, int s) {
          return build_mini_bundle(inst, to_solution(t), d, s);
        });
}
