#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clsum/expr.hpp"
#include "clsum/report.hpp"

namespace clsum {

/// One swept parameter. Parameter 0 omits the summand entirely.
struct Axis {
  Family family = Family::Adual;
  int first = 0;
  int last = 0;
  std::string label;
};

struct TableSpec {
  std::string title;
  Axis rows;
  std::optional<Axis> cols;
  /// Summands placed before the swept ones, e.g. Adual(1) (+) Adual(1).
  std::optional<Expr> prefix;
  /// Orders a cell as prefix (+) column (+) row instead of prefix (+) row (+) column.
  bool column_first = false;
  long max_cells = 10000;
  long max_degree = kDefaultMaxDegree;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned jobs = 0;
};

/// Adual(m) (+) Adual(n), rows m, columns n, both 0..20.
TableSpec table1_spec();
/// A(m) (+) A(n), rows n, columns m, both 0..20.
TableSpec table2_spec();

struct TableCell {
  int row = 0;
  int col = 0;
  std::string expr;  // "point" when every summand is omitted
  bool cl = false;
};

struct TableResult {
  TableSpec spec;
  std::vector<int> row_params;
  std::vector<int> col_params;  // {0} for a one-axis sweep
  std::vector<TableCell> cells;  // row-major

  const TableCell& at(int row_param, int col_param = 0) const;
};

/// The expression for one cell, or nullopt when every summand is omitted.
std::optional<Expr> cell_expr(const TableSpec& spec, int row_param, int col_param);

/// Throws GuardExceeded when the cell count or a cell dimension is over its guard,
/// std::invalid_argument for a Peq axis or an empty range.
TableResult compute_table(const TableSpec& spec);

enum class Format { Markdown, Csv, Json };

/// Markdown cells are "C" (CL) and "n" (not CL).
std::string render(const TableResult& t, Format f);

}  // namespace clsum
