// Copyright 2026 The Skipless Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "skipless/zigzag.hpp"

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>

#include "skipless/error.hpp"

namespace skipless {
namespace {

void check_m(unsigned m) {
  if (m < 2 || m > 6) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "m must lie in [2,6], got " + std::to_string(m));
  }
}

ZigzagCode blank_code(Construction c, unsigned m, unsigned k, const FieldSpec& field,
                      std::vector<ParityPattern> patterns) {
  ZigzagCode code;
  code.construction = c;
  code.m = m;
  code.k = k;
  code.field = field;
  code.patterns = std::move(patterns);
  code.coefficients.assign(static_cast<std::size_t>(code.rows()) * k * code.parity_count(),
                           FieldElement(1));
  return code;
}

unsigned half_up(unsigned n) { return (n + 1) / 2; }

// Row set read by helper columns other than the parities.
struct Layout {
  std::vector<std::pair<unsigned, RowSet>> info;     // (column, rows)
  std::vector<std::pair<unsigned, RowSet>> parities; // (parity index, rows)
};

Layout layout_a(const ZigzagCode& code, unsigned s) {
  const unsigned m = code.m;
  Layout out;
  if (s == 0) {
    for (unsigned i = 1; i < code.k; ++i) out.info.emplace_back(i, RowSet::kUpper);
    out.parities = {{0, RowSet::kUpper}, {m, RowSet::kLower}};
    return out;
  }
  for (unsigned i = 0; i < code.k; ++i) {
    if (i == s) continue;
    out.info.emplace_back(i, i < s ? RowSet::kUpper : RowSet::kLower);
  }
  out.parities = {{m - s, RowSet::kUpper}, {m - s + 1, RowSet::kUpper}};
  return out;
}

// Constructions B and C share their repair lists.
Layout layout_bc(const ZigzagCode& code, unsigned s) {
  const unsigned k = code.k;
  const unsigned last = code.parity_count() - 1;
  Layout out;
  RowSet rows = RowSet::kUpper;
  if (s == 0) {
    out.parities = {{0, RowSet::kUpper}, {last, RowSet::kLower}};
  } else if (s == k - 1) {
    rows = RowSet::kMiddle;
    out.parities = {{0, rows}, {last, rows}};
  } else if (s % 2 == 1) {
    out.parities = {{0, rows}, {(s + 1) / 2, rows}};
  } else {
    rows = RowSet::kMiddle;
    out.parities = {{0, rows}, {s / 2, rows}};
  }
  for (unsigned i = 0; i < k; ++i) {
    if (i != s) out.info.emplace_back(i, rows);
  }
  return out;
}

}  // namespace

std::string_view to_string(Construction c) {
  switch (c) {
    case Construction::kA: return "a";
    case Construction::kB: return "b";
    case Construction::kC: return "c";
    case Construction::kBaseline: return "baseline";
  }
  return "unknown";
}

Construction construction_from_string(std::string_view s) {
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (lower == "a") return Construction::kA;
  if (lower == "b") return Construction::kB;
  if (lower == "c") return Construction::kC;
  if (lower == "baseline") return Construction::kBaseline;
  throw Error(ErrorCode::kMalformedInput, "unknown zigzag construction '" + lower + "'");
}

std::uint32_t unit_vector(unsigned i, unsigned m) { return std::uint32_t{1} << (m - i); }

std::uint32_t prefix_vector(unsigned i, unsigned m) {
  std::uint32_t v = 0;
  for (unsigned t = 1; t <= i; ++t) v |= unit_vector(t, m);
  return v;
}

bool row_in(RowSet set, std::uint32_t row, unsigned m) {
  const std::uint32_t top = row >> (m - 1);
  const std::uint32_t top2 = row >> (m - 2);
  switch (set) {
    case RowSet::kUpper: return top == 0;
    case RowSet::kLower: return top == 1;
    case RowSet::kOuter: return top2 == 0 || top2 == 3;
    case RowSet::kMiddle: return top2 == 1 || top2 == 2;
  }
  return false;
}

std::vector<std::uint32_t> rows_in(RowSet set, unsigned m) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << m); ++x) {
    if (row_in(set, x, m)) out.push_back(x);
  }
  return out;
}

ZigzagCode build_construction_a(unsigned m, const FieldSpec& field) {
  check_m(m);
  std::vector<ParityPattern> patterns{ParityPattern(m + 1, 0)};
  for (unsigned j = 1; j <= m; ++j) {
    ParityPattern p{0};
    for (unsigned t = j + 1; t <= m; ++t) p.push_back(unit_vector(t, m));
    for (unsigned t = 1; t <= j; ++t) p.push_back(prefix_vector(t, m));
    patterns.push_back(std::move(p));
  }
  return blank_code(Construction::kA, m, m + 1, field, std::move(patterns));
}

ZigzagCode build_construction_b(unsigned m, const FieldSpec& field) {
  check_m(m);
  const unsigned parities = half_up(m + 1);
  std::vector<ParityPattern> patterns{ParityPattern(m + 1, 0)};
  for (unsigned j = 1; j < parities; ++j) {
    ParityPattern p{0};
    for (unsigned t = m - 2 * j + 3; t <= m; ++t) p.push_back(unit_vector(t, m));
    p.push_back(prefix_vector(m, m));
    for (unsigned t = 2; t <= m - 2 * j + 2; ++t) p.push_back(unit_vector(t, m));
    patterns.push_back(std::move(p));
  }
  ParityPattern last{0};
  for (unsigned t = 2; t <= m; ++t) last.push_back(prefix_vector(t, m));
  last.push_back(prefix_vector(1, m));
  patterns.push_back(std::move(last));
  return blank_code(Construction::kB, m, m + 1, field, std::move(patterns));
}

ZigzagCode build_construction_c(unsigned m, unsigned k, const FieldSpec& field) {
  check_m(m);
  if (k < 2 || k > 10) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "k must lie in [2,10], got " + std::to_string(k));
  }
  const unsigned parities = half_up(k);
  std::vector<ParityPattern> patterns{ParityPattern(k, 0)};
  for (unsigned j = 1; j < parities; ++j) {
    ParityPattern p(k, 0);
    p[2 * j - 1] = prefix_vector(m, m);
    p[2 * j] = unit_vector(2, m);
    patterns.push_back(std::move(p));
  }
  ParityPattern last(k, prefix_vector(2, m));
  last.front() = 0;
  last.back() = prefix_vector(1, m);
  patterns.push_back(std::move(last));
  return blank_code(Construction::kC, m, k, field, std::move(patterns));
}

ZigzagCode build_baseline(unsigned m, const FieldSpec& field) {
  check_m(m);
  ParityPattern shifted{0};
  for (unsigned t = 1; t <= m; ++t) shifted.push_back(unit_vector(t, m));
  return blank_code(Construction::kBaseline, m, m + 1, field,
                    {ParityPattern(m + 1, 0), std::move(shifted)});
}

ZigzagCode build_zigzag(Construction c, unsigned m, unsigned k, const FieldSpec& field) {
  switch (c) {
    case Construction::kA: return build_construction_a(m, field);
    case Construction::kB: return build_construction_b(m, field);
    case Construction::kC: return build_construction_c(m, k, field);
    case Construction::kBaseline: return build_baseline(m, field);
  }
  throw Error(ErrorCode::kMalformedInput, "unknown construction");
}

ArrayCodeword encode(const ZigzagCode& code, const Message& info, const GaloisField& field) {
  const std::uint32_t rows = code.rows();
  if (info.size() != code.k) {
    throw Error(ErrorCode::kShapeMismatch, "expected " + std::to_string(code.k) +
                                               " columns, got " + std::to_string(info.size()));
  }
  for (const auto& col : info) {
    if (col.size() != rows) {
      throw Error(ErrorCode::kShapeMismatch, "expected " + std::to_string(rows) +
                                                 " rows, got " + std::to_string(col.size()));
    }
  }
  ArrayCodeword cw;
  cw.columns = info;
  for (unsigned j = 0; j < code.parity_count(); ++j) {
    std::vector<FieldElement> parity(rows);
    for (std::uint32_t x = 0; x < rows; ++x) {
      FieldElement acc;
      for (unsigned i = 0; i < code.k; ++i) {
        acc = acc + field.mul(code.coefficient(x, i, j), info[i][x ^ code.patterns[j][i]]);
      }
      parity[x] = acc;
    }
    cw.columns.push_back(std::move(parity));
  }
  return cw;
}

std::uint64_t RepairPlan::bandwidth() const {
  std::uint64_t total = 0;
  for (const auto& h : helpers) total += h.rows.size();
  return total;
}

std::uint64_t RepairPlan::skip_cost() const {
  std::uint64_t total = 0;
  for (const auto& h : helpers) {
    for (std::size_t t = 1; t < h.rows.size(); ++t) total += h.rows[t] - h.rows[t - 1] - 1;
  }
  return total;
}

RepairPlan plan_repair(const ZigzagCode& code, unsigned s) {
  if (s >= code.k) {
    throw Error(ErrorCode::kUnsupportedFailure,
                "only systematic columns 0.." + std::to_string(code.k - 1) +
                    " can be repaired, got " + std::to_string(s));
  }
  const unsigned m = code.m;
  RepairPlan plan;
  plan.failed = s;

  if (code.construction == Construction::kBaseline) {
    if (s == 0) {
      throw Error(ErrorCode::kUnsupportedFailure, "baseline repair of node 0 is not defined");
    }
    const std::uint32_t bit = unit_vector(s, m);
    std::vector<std::uint32_t> rows;
    for (std::uint32_t x = 0; x < code.rows(); ++x) {
      if ((x & bit) == 0) rows.push_back(x);
    }
    for (unsigned c = 0; c < code.node_count(); ++c) {
      if (c != s) plan.helpers.push_back({c, rows});
    }
    for (unsigned j = 0; j < 2; ++j) {
      for (std::uint32_t x : rows) plan.recipe.push_back({j, x, x ^ code.patterns[j][s]});
    }
    return plan;
  }

  const Layout layout =
      code.construction == Construction::kA ? layout_a(code, s) : layout_bc(code, s);
  for (const auto& [column, set] : layout.info) plan.helpers.push_back({column, rows_in(set, m)});
  for (const auto& [j, set] : layout.parities) {
    const auto rows = rows_in(set, m);
    plan.helpers.push_back({code.k + j, rows});
    for (std::uint32_t x : rows) plan.recipe.push_back({j, x, x ^ code.patterns[j][s]});
  }
  std::sort(plan.helpers.begin(), plan.helpers.end(),
            [](const HelperRead& a, const HelperRead& b) { return a.column < b.column; });
  return plan;
}

std::vector<FieldElement> execute_repair(const ArrayCodeword& cw, const RepairPlan& plan,
                                         const ZigzagCode& code, const GaloisField& field) {
  const std::uint32_t rows = code.rows();
  const unsigned s = plan.failed;
  // read[c][x] marks symbols the plan downloads.
  std::vector<std::vector<char>> read(code.node_count(), std::vector<char>(rows, 0));
  for (const auto& h : plan.helpers) {
    if (h.column == s || h.column >= code.node_count()) {
      throw Error(ErrorCode::kEliminationFailed, "plan names an invalid helper column");
    }
    for (std::uint32_t x : h.rows) read[h.column][x] = 1;
  }

  std::vector<FieldElement> out(rows);
  std::vector<char> done(rows, 0);
  for (const auto& step : plan.recipe) {
    const unsigned pc = code.k + step.parity;
    const auto& pattern = code.patterns[step.parity];
    const std::uint32_t x = step.parity_row;
    if (!read[pc][x]) {
      throw Error(ErrorCode::kEliminationFailed,
                  "parity " + std::to_string(step.parity) + " row " + std::to_string(x) +
                      " was not read");
    }
    if ((x ^ pattern[s]) != step.target_row) {
      throw Error(ErrorCode::kEliminationFailed, "recovery step targets the wrong row");
    }
    FieldElement acc = cw.columns[pc][x];
    for (unsigned i = 0; i < code.k; ++i) {
      if (i == s) continue;
      const std::uint32_t row = x ^ pattern[i];
      if (!read[i][row]) {
        throw Error(ErrorCode::kEliminationFailed,
                    "symbol of column " + std::to_string(i) + " row " + std::to_string(row) +
                        " is needed but was not read");
      }
      acc = acc + field.mul(code.coefficient(x, i, step.parity), cw.columns[i][row]);
    }
    out[step.target_row] = field.div(acc, code.coefficient(x, s, step.parity));
    done[step.target_row] = 1;
  }
  for (std::uint32_t x = 0; x < rows; ++x) {
    if (!done[x]) {
      throw Error(ErrorCode::kEliminationFailed, "row " + std::to_string(x) + " not recovered");
    }
  }
  return out;
}

}  // namespace skipless
