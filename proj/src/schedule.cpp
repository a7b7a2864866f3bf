#include "ttpk/schedule.hpp"

#include <fstream>
#include <ostream>
#include <string>

#include "text_io.hpp"

namespace ttpk {

ScheduleTable::ScheduleTable(int teams, int days)
    : teams_(teams),
      days_(days),
      cells_(static_cast<std::size_t>(teams) * static_cast<std::size_t>(days)) {
  if (teams < 0 || days < 0) throw std::invalid_argument("negative schedule size");
}

int ScheduleTable::signed_cell(int team, int day) const {
  Game g = at(team, day);
  return g.home ? g.opponent + 1 : -(g.opponent + 1);
}

ScheduleTable ScheduleTable::FromSigned(int teams, int days,
                                        const std::vector<std::vector<int>>& rows) {
  if (static_cast<int>(rows.size()) != teams) {
    throw ShapeError("expected " + std::to_string(teams) + " schedule rows, got " +
                     std::to_string(rows.size()));
  }
  ScheduleTable t(teams, days);
  for (int team = 0; team < teams; ++team) {
    if (static_cast<int>(rows[team].size()) != days) {
      throw ShapeError("schedule row " + std::to_string(team + 1) + " has " +
                       std::to_string(rows[team].size()) + " entries");
    }
    for (int day = 0; day < days; ++day) {
      int v = rows[team][day];
      if (v == 0) throw FormatError("schedule entry 0 is not a team");
      t.set(team, day, {(v > 0 ? v : -v) - 1, v > 0});
    }
  }
  return t;
}

ScheduleTable materialize(const ScheduleView& view) {
  ScheduleTable t(view.teams(), view.days());
  for (int team = 0; team < view.teams(); ++team) {
    for (int day = 0; day < view.days(); ++day) t.set(team, day, view.at(team, day));
  }
  return t;
}

ScheduleTable read_schedule(std::istream& in, int* k) {
  std::string line;
  if (!detail::next_line(in, line) || detail::trim(line) != "TTPSCHED 1") {
    throw FormatError("expected 'TTPSCHED 1' header");
  }
  if (!detail::next_line(in, line)) throw FormatError("missing parameter line");
  auto kv = detail::parse_key_values(line);
  for (const char* key : {"n", "days", "k"}) {
    if (!kv.count(key)) {
      throw FormatError(std::string("parameter line lacks '") + key + "='");
    }
  }
  const long long n = kv.at("n"), days = kv.at("days");
  if (n < 0 || days < 0 || n > 10000000 || days > 10000000) {
    throw FormatError("bad schedule dimensions");
  }
  if (k) *k = static_cast<int>(kv.at("k"));
  std::vector<std::vector<int>> rows;
  while (detail::next_line(in, line)) {
    std::vector<int> row;
    for (long long v : detail::parse_ints(line)) {
      if (v < -n || v > n) throw FormatError("team index out of range: " + std::to_string(v));
      row.push_back(static_cast<int>(v));
    }
    rows.push_back(std::move(row));
  }
  return ScheduleTable::FromSigned(static_cast<int>(n), static_cast<int>(days), rows);
}

void write_schedule(std::ostream& out, const ScheduleView& s, int k) {
  out << "TTPSCHED 1\n";
  out << "n=" << s.teams() << " days=" << s.days() << " k=" << k << "\n";
  for (int team = 0; team < s.teams(); ++team) {
    for (int day = 0; day < s.days(); ++day) {
      if (day) out << ' ';
      Game g = s.at(team, day);
      out << (g.home ? g.opponent + 1 : -(g.opponent + 1));
    }
    out << '\n';
  }
}

ScheduleTable load_schedule(const std::filesystem::path& path, int* k) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  return read_schedule(in, k);
}

void save_schedule(const ScheduleView& s, int k, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_schedule(out, s, k);
}

}  // namespace ttpk
