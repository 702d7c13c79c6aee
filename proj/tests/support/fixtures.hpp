#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "clsum/exact.hpp"

#ifndef CLSUM_FIXTURE_DIR
#error "CLSUM_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace fixtures {

inline std::vector<std::string> data_lines(const std::string& name) {
  std::ifstream in(std::string(CLSUM_FIXTURE_DIR) + "/" + name);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.front() != '#') out.push_back(line);
  }
  return out;
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    const auto a = cur.find_first_not_of(' ');
    const auto b = cur.find_last_not_of(' ');
    out.push_back(a == std::string::npos ? "" : cur.substr(a, b - a + 1));
  }
  return out;
}

/// rows[n][m] for A(m) (+) A(n), true = CL.
inline std::vector<std::vector<bool>> table2() {
  std::vector<std::vector<bool>> rows;
  for (const auto& line : data_lines("table2.txt")) {
    const auto parts = split(line, ' ');
    std::vector<bool> row;
    for (char c : parts.at(1)) row.push_back(c == 'C');
    rows.push_back(row);
  }
  return rows;
}

struct Table3Row {
  int m = 0;
  int n = 0;
  std::vector<clsum::Integer> delta;
  std::vector<clsum::Rational> ehrhart;  // ascending powers
  bool cl = false;
};

inline std::vector<Table3Row> table3() {
  std::vector<Table3Row> rows;
  for (const auto& line : data_lines("table3.txt")) {
    const auto parts = split(line, '|');
    Table3Row r;
    std::istringstream mn(parts.at(0));
    mn >> r.m >> r.n;
    for (const auto& d : split(parts.at(1), ',')) r.delta.emplace_back(d);
    std::istringstream cs(parts.at(2));
    for (std::string c; cs >> c;) {
      clsum::Rational q(c);
      q.canonicalize();
      r.ehrhart.push_back(q);
    }
    r.cl = parts.at(3) == "C";
    rows.push_back(std::move(r));
  }
  return rows;
}

struct AppendixList {
  std::vector<int> fixed;
  int first = 0;
  std::string verdicts;  // one char per n = first..20
};

inline std::vector<AppendixList> appendix_lists() {
  std::vector<AppendixList> out;
  for (const auto& line : data_lines("appendix_lists.txt")) {
    const auto parts = split(line, '|');
    AppendixList a;
    for (const auto& f : split(parts.at(0), ',')) a.fixed.push_back(std::stoi(f));
    a.first = std::stoi(parts.at(1));
    a.verdicts = parts.at(2);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace fixtures
