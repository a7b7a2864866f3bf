#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "ttpk/error.hpp"

namespace ttpk {

// One team's game on one day. Teams and days are 0-based in memory and
// 1-based in files.
struct Game {
  int opponent = -1;
  bool home = false;
  bool operator==(const Game&) const = default;
};

// Read-only opponent/venue table. Implementations may compute cells on
// demand, so callers should stream per team rather than copy.
class ScheduleView {
 public:
  virtual ~ScheduleView() = default;
  virtual int teams() const = 0;
  virtual int days() const = 0;
  virtual Game at(int team, int day) const = 0;
};

class ScheduleTable final : public ScheduleView {
 public:
  ScheduleTable() = default;
  ScheduleTable(int teams, int days);

  int teams() const override { return teams_; }
  int days() const override { return days_; }
  Game at(int team, int day) const override {
    return cells_[static_cast<std::size_t>(team) * days_ + day];
  }
  void set(int team, int day, Game g) {
    cells_[static_cast<std::size_t>(team) * days_ + day] = g;
  }
  // Sets both sides of a game: `away` travels to `host`.
  void set_game(int day, int host, int away) {
    set(host, day, {away, true});
    set(away, day, {host, false});
  }

  // +j = home vs team j, -j = away at team j (1-based j).
  int signed_cell(int team, int day) const;
  static ScheduleTable FromSigned(int teams, int days,
                                  const std::vector<std::vector<int>>& rows);

  bool operator==(const ScheduleTable& o) const {
    return teams_ == o.teams_ && days_ == o.days_ && cells_ == o.cells_;
  }

 private:
  int teams_ = 0;
  int days_ = 0;
  std::vector<Game> cells_;
};

// Copies every cell of a view into a table.
ScheduleTable materialize(const ScheduleView& view);

// TTPSCHED 1 text format. `k` is carried in the header.
ScheduleTable read_schedule(std::istream& in, int* k = nullptr);
void write_schedule(std::ostream& out, const ScheduleView& s, int k);
ScheduleTable load_schedule(const std::filesystem::path& path, int* k = nullptr);
void save_schedule(const ScheduleView& s, int k, const std::filesystem::path& path);

}  // namespace ttpk
