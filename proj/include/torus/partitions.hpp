#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace torus {

/// A cell (i, j) of a Young diagram: row i, column j, both 1-based.
struct Cell {
  int row;
  int col;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Young diagram Y = (Y_1 >= Y_2 >= ... > 0).
class Partition {
 public:
  Partition() = default;
  /// Throws UsageError unless rows are positive and weakly decreasing.
  Partition(std::initializer_list<int> rows);
  explicit Partition(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(rows_.size()); }
  bool empty() const { return rows_.empty(); }

  /// Y_i with 1-based i; 0 past the last row.
  int row(int i) const;
  /// Conjugate diagram: transpose_j = #{i : Y_i >= j}.
  Partition transpose() const;

  /// Cells in row-major order.
  std::vector<Cell> cells() const;
  /// Y_i - j. Throws UsageError for a cell outside the diagram.
  int arm(Cell c) const;
  /// Ytilde_j - i. Uses the cached transpose column lengths.
  int leg(Cell c) const;

  /// Dominance order: partial sums of *this are >= those of other.
  bool dominates(const Partition& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.rows_ <=> b.rows_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<int> rows_;
  std::vector<int> columns_;
  int size_ = 0;
};

/// Arm, leg and hook of one cell.
struct CellStats {
  int arm;
  int leg;
  int hook() const { return arm + leg + 1; }
};

CellStats cell_stats(const Partition& y, Cell c);

/// All partitions of n in reverse-lexicographic order ([n] first, [1^n]
/// last). n = 0 yields only the empty partition.
std::vector<Partition> enumerate_partitions(int n);

}  // namespace torus
