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

#include "skipless/sweep.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "parallel.hpp"
#include "skipless/error.hpp"

namespace skipless {
namespace {

std::uint64_t zigzag_skip(const ZigzagCode& code, unsigned s) {
  return measure(trace_of(plan_repair(code, s), code)).skip_cost;
}

}  // namespace

ReadTrace trace_of(const RepairPlan& plan, const ZigzagCode& code) {
  ReadTrace trace;
  for (const auto& h : plan.helpers) trace.helpers.push_back({h.column, code.rows(), h.rows});
  return trace;
}

SweepSummary summarize(const std::vector<SweepRow>& rows) {
  SweepSummary s;
  s.rows = rows.size();
  s.all_recovered = !rows.empty();
  s.metrics_agree = true;
  std::uint64_t total = 0;
  std::uint64_t measured = 0;
  for (const auto& r : rows) {
    if (!r.error.empty()) {
      ++s.failures;
      s.all_recovered = false;
      continue;
    }
    ++measured;
    s.all_recovered = s.all_recovered && r.recovered;
    s.metrics_agree = s.metrics_agree && r.planner_skip == r.metrics.skip_cost;
    s.max_skip = std::max(s.max_skip, r.metrics.skip_cost);
    s.max_locality = std::max(s.max_locality, r.metrics.locality);
    s.max_bandwidth = std::max(s.max_bandwidth, r.metrics.bandwidth);
    s.max_helper_fraction = std::max(s.max_helper_fraction, r.metrics.max_helper_fraction());
    total += r.metrics.skip_cost;
  }
  s.mean_skip = measured == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(measured);
  return s;
}

SweepReport sweep_zigzag(const ZigzagCode& code, const GaloisField& field, std::uint64_t seed,
                         unsigned jobs) {
  std::mt19937_64 rng(seed);
  Message msg(code.k, std::vector<FieldElement>(code.rows()));
  for (auto& col : msg) {
    for (auto& a : col) a = FieldElement(static_cast<std::uint32_t>(rng() & (field.order() - 1)));
  }
  const ArrayCodeword cw = encode(code, msg, field);

  const unsigned first = code.construction == Construction::kBaseline ? 1 : 0;
  SweepReport report;
  report.construction = std::string(to_string(code.construction));
  report.m = code.m;
  report.k = code.k;
  report.rows.resize(code.k - first);
  detail::parallel_for(report.rows.size(), jobs, [&](std::size_t idx) {
    SweepRow& row = report.rows[idx];
    row.failed = static_cast<std::uint32_t>(first + idx);
    try {
      const RepairPlan plan = plan_repair(code, row.failed);
      row.metrics = measure(trace_of(plan, code));
      row.planner_skip = plan.skip_cost();
      row.recovered = execute_repair(cw, plan, code, field) == msg[row.failed];
    } catch (const Error& e) {
      row.error = e.what();
    }
  });
  report.summary = summarize(report.rows);
  return report;
}

SweepReport sweep_fr(const FRCode& code, std::uint64_t seed, unsigned jobs, RepairPolicy policy) {
  std::mt19937_64 rng(seed);
  PacketStore store;
  for (std::uint32_t p = 0; p < code.n; ++p) {
    std::vector<std::uint8_t> packet(2);
    for (auto& byte : packet) byte = static_cast<std::uint8_t>(rng());
    store.packets.push_back(std::move(packet));
  }
  const BlockRepairPlanner planner(code.design);

  SweepReport report;
  report.construction = "sqs";
  report.v = code.n;
  report.rows.resize(code.node_count);
  detail::parallel_for(report.rows.size(), jobs, [&](std::size_t idx) {
    SweepRow& row = report.rows[idx];
    row.failed = static_cast<std::uint32_t>(idx);
    try {
      const NodeRepair r = repair_node(code, planner, store, row.failed, policy);
      row.metrics = r.metrics;
      row.planner_skip = r.plan.skip_cost();
      row.recovered = r.packets == node_contents(code, store, row.failed);
    } catch (const Error& e) {
      row.error = e.what();
    }
  });
  report.summary = summarize(report.rows);
  return report;
}

std::uint64_t baseline_skip_closed_form(std::uint32_t m) {
  std::uint64_t sum = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    sum += (std::uint64_t{1} << i) * ((std::uint64_t{1} << (m - 1 - i)) - 1);
  }
  return (m + 2) * sum;
}

BaselineComparison compare_baseline(std::uint32_t m) {
  if (m < 2 || m > 6) {
    throw Error(ErrorCode::kParameterOutOfRange, "m must lie in [2,6], got " + std::to_string(m));
  }
  const ZigzagCode baseline = build_baseline(m);
  const ZigzagCode a = build_construction_a(m);
  const ZigzagCode b = build_construction_b(m);
  BaselineComparison out;
  out.m = m;
  for (std::uint32_t s = 1; s <= m; ++s) {
    ComparisonRow row;
    row.failed = s;
    const RepairMetrics metrics = measure(trace_of(plan_repair(baseline, s), baseline));
    row.baseline_skip = metrics.skip_cost;
    row.baseline_helper_skip = metrics.per_helper.front().skip;
    row.construction_a_skip = zigzag_skip(a, s);
    row.construction_b_skip = zigzag_skip(b, s);
    out.baseline_total += row.baseline_skip;
    out.construction_a_total += row.construction_a_skip;
    out.construction_b_total += row.construction_b_skip;
    out.rows.push_back(row);
  }
  out.closed_form_total = baseline_skip_closed_form(m);
  out.baseline_nodes = baseline.node_count();
  out.construction_a_nodes = a.node_count();
  out.construction_b_nodes = b.node_count();
  out.baseline_rate = static_cast<double>(baseline.k) / baseline.node_count();
  out.construction_a_rate = static_cast<double>(a.k) / a.node_count();
  out.construction_b_rate = static_cast<double>(b.k) / b.node_count();
  return out;
}

}  // namespace skipless
