#include "torus/partitions.hpp"

#include <algorithm>
#include <functional>

#include "torus/errors.hpp"

namespace torus {

Partition::Partition(std::initializer_list<int> rows) : Partition(std::vector<int>(rows)) {}

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw UsageError("partition rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw UsageError("partition rows must be weakly decreasing");
    size_ += rows_[i];
  }
  if (!rows_.empty()) {
    columns_.assign(static_cast<std::size_t>(rows_.front()), 0);
    for (int r : rows_) {
      for (int j = 0; j < r; ++j) ++columns_[static_cast<std::size_t>(j)];
    }
  }
}

int Partition::row(int i) const {
  return i >= 1 && i <= length() ? rows_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::transpose() const { return Partition(columns_); }

std::vector<Cell> Partition::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 1; i <= length(); ++i) {
    for (int j = 1; j <= row(i); ++j) out.push_back({i, j});
  }
  return out;
}

namespace {

void check_cell(const Partition& y, Cell c) {
  if (c.row < 1 || c.col < 1 || c.col > y.row(c.row)) throw UsageError("cell is not in the diagram");
}

}  // namespace

int Partition::arm(Cell c) const {
  check_cell(*this, c);
  return row(c.row) - c.col;
}

int Partition::leg(Cell c) const {
  check_cell(*this, c);
  return columns_[static_cast<std::size_t>(c.col - 1)] - c.row;
}

bool Partition::dominates(const Partition& other) const {
  if (size_ != other.size_) return false;
  int mine = 0;
  int theirs = 0;
  for (int i = 1; i <= std::max(length(), other.length()); ++i) {
    mine += row(i);
    theirs += other.row(i);
    if (mine < theirs) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(rows_[i]);
  }
  return out + "]";
}

CellStats cell_stats(const Partition& y, Cell c) {
  if (c.row < 1 || c.col < 1 || c.col > y.row(c.row)) throw UsageError("cell outside the diagram");
  return {y.arm(c), y.leg(c)};
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw UsageError("cannot enumerate partitions of a negative number");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

}  // namespace torus
