#include "clsum/table.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "clsum/errors.hpp"

namespace clsum {

namespace {

void validate(const Axis& a) {
  if (a.family == Family::Peq) throw std::invalid_argument("Peq cannot be a table axis");
  if (a.first < 0 || a.last < a.first) throw std::invalid_argument("bad range on axis " + a.label);
}

std::vector<int> params_of(const Axis& a) {
  std::vector<int> out;
  for (int i = a.first; i <= a.last; ++i) out.push_back(i);
  return out;
}

}  // namespace

TableSpec table1_spec() {
  TableSpec s;
  s.title = "CL-ness of Adual(m) (+) Adual(n)";
  s.rows = Axis{Family::Adual, 0, 20, "m"};
  s.cols = Axis{Family::Adual, 0, 20, "n"};
  return s;
}

TableSpec table2_spec() {
  TableSpec s;
  s.title = "CL-ness of A(m) (+) A(n)";
  s.rows = Axis{Family::A, 0, 20, "n"};
  s.cols = Axis{Family::A, 0, 20, "m"};
  s.column_first = true;
  return s;
}

const TableCell& TableResult::at(int row_param, int col_param) const {
  for (std::size_t r = 0; r < row_params.size(); ++r) {
    if (row_params[r] != row_param) continue;
    for (std::size_t c = 0; c < col_params.size(); ++c) {
      if (col_params[c] == col_param) return cells[r * col_params.size() + c];
    }
  }
  throw std::out_of_range("no such table cell");
}

std::optional<Expr> cell_expr(const TableSpec& spec, int row_param, int col_param) {
  std::vector<Expr> terms;
  if (spec.prefix) terms.push_back(*spec.prefix);
  auto add = [&](const std::optional<Axis>& axis, int p) {
    if (axis && p > 0) terms.push_back(Expr::atom(axis->family, {p}));
  };
  if (spec.column_first) {
    add(spec.cols, col_param);
    add(spec.rows, row_param);
  } else {
    add(spec.rows, row_param);
    add(spec.cols, col_param);
  }
  if (terms.empty()) return std::nullopt;
  if (terms.size() == 1) return terms.front();
  return Expr::sum(std::move(terms));
}

TableResult compute_table(const TableSpec& spec) {
  validate(spec.rows);
  if (spec.cols) validate(*spec.cols);

  TableResult t;
  t.spec = spec;
  t.row_params = params_of(spec.rows);
  t.col_params = spec.cols ? params_of(*spec.cols) : std::vector<int>{0};
  const std::size_t n = t.row_params.size() * t.col_params.size();
  if (static_cast<long>(n) > spec.max_cells) {
    throw GuardExceeded("table has " + std::to_string(n) + " cells, guard is " +
                        std::to_string(spec.max_cells));
  }

  t.cells.resize(n);
  std::vector<std::optional<Expr>> exprs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int r = t.row_params[i / t.col_params.size()];
    const int c = t.col_params[i % t.col_params.size()];
    t.cells[i].row = r;
    t.cells[i].col = c;
    exprs[i] = cell_expr(spec, r, c);
    t.cells[i].expr = exprs[i] ? to_string(*exprs[i]) : "point";
    if (exprs[i] && dimension(*exprs[i]) > spec.max_degree) {
      throw GuardExceeded("cell " + t.cells[i].expr + " exceeds the degree guard");
    }
  }

  unsigned jobs = spec.jobs ? spec.jobs : std::thread::hardware_concurrency();
  if (jobs == 0) jobs = 1;
  if (jobs > n) jobs = static_cast<unsigned>(n);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        t.cells[i].cl = exprs[i] ? evaluate_cl(*exprs[i], spec.max_degree) : true;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return t;
}

namespace {

std::string render_markdown(const TableResult& t) {
  std::ostringstream os;
  const bool two_axes = t.spec.cols.has_value();
  if (!t.spec.title.empty()) os << "**" << t.spec.title << "**\n\n";
  if (two_axes) {
    os << "| " << t.spec.rows.label << " \\ " << t.spec.cols->label << " |";
    for (int c : t.col_params) os << ' ' << c << " |";
    os << "\n|---|";
    for (std::size_t c = 0; c < t.col_params.size(); ++c) os << "---|";
    os << '\n';
    for (std::size_t r = 0; r < t.row_params.size(); ++r) {
      os << "| " << t.row_params[r] << " |";
      for (std::size_t c = 0; c < t.col_params.size(); ++c) {
        os << ' ' << (t.cells[r * t.col_params.size() + c].cl ? 'C' : 'n') << " |";
      }
      os << '\n';
    }
  } else {
    os << "| " << t.spec.rows.label << " | expr | CL |\n|---|---|---|\n";
    for (const auto& cell : t.cells) {
      os << "| " << cell.row << " | " << cell.expr << " | " << (cell.cl ? 'C' : 'n') << " |\n";
    }
  }
  return os.str();
}

std::string render_csv(const TableResult& t) {
  std::ostringstream os;
  os << t.spec.rows.label;
  if (t.spec.cols) os << ',' << t.spec.cols->label;
  os << ",expr,cl\n";
  for (const auto& cell : t.cells) {
    os << cell.row;
    if (t.spec.cols) os << ',' << cell.col;
    os << ",\"" << cell.expr << "\"," << (cell.cl ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string render_json(const TableResult& t) {
  using Json = nlohmann::ordered_json;
  Json j;
  j["title"] = t.spec.title;
  j["rows"] = Json{{"label", t.spec.rows.label}, {"params", t.row_params}};
  if (t.spec.cols) {
    j["cols"] = Json{{"label", t.spec.cols->label}, {"params", t.col_params}};
  } else {
    j["cols"] = nullptr;
  }
  Json cells = Json::array();
  for (const auto& cell : t.cells) {
    Json c{{"row", cell.row}};
    if (t.spec.cols) c["col"] = cell.col;
    c["expr"] = cell.expr;
    c["cl"] = cell.cl;
    cells.push_back(c);
  }
  j["cells"] = cells;
  return j.dump(2) + "\n";
}

}  // namespace

std::string render(const TableResult& t, Format f) {
  switch (f) {
    case Format::Markdown:
      return render_markdown(t);
    case Format::Csv:
      return render_csv(t);
    case Format::Json:
      return render_json(t);
  }
  return {};
}

}  // namespace clsum
