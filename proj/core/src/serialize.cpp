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

#include "skipless/serialize.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "skipless/error.hpp"

namespace skipless {
namespace {

using Json = nlohmann::ordered_json;

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json metrics_json(const RepairMetrics& m) {
  Json helpers = Json::array();
  for (const auto& h : m.per_helper) {
    helpers.push_back({{"helper", h.helper}, {"symbols_read", h.symbols}, {"skip", h.skip}});
  }
  return {{"bandwidth", m.bandwidth},
          {"locality", m.locality},
          {"skip_cost", m.skip_cost},
          {"per_helper", helpers}};
}

Json design_json(const Design& d) {
  Json points = Json::array();
  for (const auto& p : d.points) points.push_back(p.encode());
  Json blocks = Json::array();
  for (const auto& b : d.blocks) {
    Json row = Json::array();
    for (PointId p : b) row.push_back(d.points.at(p).encode());
    blocks.push_back(row);
  }
  return {{"kind", "design"},
          {"v", d.order()},
          {"point_tag", d.point_tag()},
          {"scheme", std::string(to_string(d.scheme))},
          {"points", points},
          {"blocks", blocks},
          {"groups", d.groups},
          {"trace", d.trace},
          {"certificate",
           {{"verified", d.certificate.verified},
            {"checker_version", d.certificate.checker_version}}}};
}

Point::Kind plain_kind(const std::string& tag) {
  if (tag == "finite") return Point::Kind::kFinite;
  if (tag == "residue") return Point::Kind::kResidue;
  if (tag == "pair") return Point::Kind::kPair;
  throw Error(ErrorCode::kMalformedInput, "unknown point_tag '" + tag + "'");
}

Design design_from(const Json& j) {
  Design d;
  const Point::Kind plain = plain_kind(j.at("point_tag").get<std::string>());
  std::map<std::string, PointId> ids;
  for (const auto& p : j.at("points")) {
    const auto text = p.get<std::string>();
    if (!ids.emplace(text, static_cast<PointId>(d.points.size())).second) {
      throw Error(ErrorCode::kMalformedInput, "point '" + text + "' listed twice");
    }
    d.points.push_back(Point::decode(text, plain));
  }
  if (j.contains("v") && j["v"].get<std::uint32_t>() != d.order()) {
    throw Error(ErrorCode::kMalformedInput, "v disagrees with the point list");
  }
  for (const auto& b : j.at("blocks")) {
    if (!b.is_array() || b.size() != 4) {
      throw Error(ErrorCode::kBlockSizeMismatch, "blocks must hold exactly 4 points");
    }
    Block block{};
    for (std::size_t t = 0; t < 4; ++t) {
      const auto it = ids.find(b[t].get<std::string>());
      if (it == ids.end()) {
        throw Error(ErrorCode::kMalformedInput, "unknown point '" + b[t].get<std::string>() + "'");
      }
      block[t] = it->second;
    }
    d.blocks.push_back(block);
  }
  d.groups = j.value("groups", std::vector<std::string>{});
  if (!d.groups.empty() && d.groups.size() != d.blocks.size()) {
    throw Error(ErrorCode::kMalformedInput, "groups must label every block");
  }
  d.trace = j.value("trace", std::vector<std::string>{});
  d.scheme = design_scheme_from_string(j.value("scheme", std::string("generic")));
  if (j.contains("certificate")) {
    d.certificate.verified = j["certificate"].value("verified", false);
    d.certificate.checker_version = j["certificate"].value("checker_version", 1);
  }
  return d;
}

template <typename Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedInput, e.what());
  }
}

std::string csv_label(const SweepReport& r) {
  return r.v ? r.construction + "-v" + std::to_string(*r.v) : r.construction;
}

std::string opt(const std::optional<std::uint32_t>& x) {
  return x ? std::to_string(*x) : std::string();
}

}  // namespace

std::string zigzag_to_json(const ZigzagCode& code) {
  Json patterns = Json::array();
  for (const auto& p : code.patterns) patterns.push_back(p);
  Json coefficients = Json::array();
  for (const auto& a : code.coefficients) coefficients.push_back(a.value);
  const Json j = {{"kind", "zigzag"},
                  {"construction", std::string(to_string(code.construction))},
                  {"m", code.m},
                  {"k", code.k},
                  {"N", code.node_count()},
                  {"M", code.rows()},
                  {"field_w", code.field.w},
                  {"reduction_poly", code.field.reduction_polynomial},
                  {"seed", code.seed},
                  {"patterns", patterns},
                  {"coefficients", coefficients}};
  return dump(j);
}

ZigzagCode zigzag_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] {
    ZigzagCode code;
    code.construction = construction_from_string(j.at("construction").get<std::string>());
    code.m = j.at("m").get<unsigned>();
    code.k = j.at("k").get<unsigned>();
    code.field.w = j.at("field_w").get<unsigned>();
    code.field.reduction_polynomial = j.at("reduction_poly").get<std::uint32_t>();
    code.seed = j.at("seed").get<std::uint64_t>();
    code.patterns = j.at("patterns").get<std::vector<ParityPattern>>();
    if (code.m < 1 || code.m > 16) throw Error(ErrorCode::kMalformedInput, "m out of range");
    for (const auto& p : code.patterns) {
      if (p.size() != code.k) throw Error(ErrorCode::kMalformedInput, "pattern length differs from k");
      for (auto v : p) {
        if (v >= code.rows()) throw Error(ErrorCode::kMalformedInput, "pattern offset exceeds m bits");
      }
    }
    for (auto v : j.at("coefficients").get<std::vector<std::uint32_t>>()) {
      if (v >= code.field.order() || v == 0) {
        throw Error(ErrorCode::kMalformedInput, "coefficients must be nonzero field elements");
      }
      code.coefficients.push_back(FieldElement(v));
    }
    if (code.coefficients.size() != std::size_t{code.rows()} * code.k * code.parity_count()) {
      throw Error(ErrorCode::kMalformedInput, "coefficient table has the wrong size");
    }
    return code;
  });
}

std::string repair_plan_to_json(const RepairPlan& plan) {
  Json helpers = Json::array();
  for (const auto& h : plan.helpers) helpers.push_back({{"column", h.column}, {"rows", h.rows}});
  return dump({{"failed", plan.failed},
               {"helpers", helpers},
               {"skip_cost", plan.skip_cost()},
               {"bandwidth", plan.bandwidth()}});
}

std::string block_repair_plan_to_json(const BlockRepairPlan& plan) {
  Json reads = Json::array();
  for (const auto& r : plan.reads) reads.push_back({{"helper", r.helper}, {"positions", r.positions}});
  return dump({{"failed", plan.failed},
               {"scheme", std::string(to_string(plan.scheme))},
               {"reads", reads},
               {"skip_cost", plan.skip_cost()},
               {"bandwidth", plan.bandwidth()}});
}

std::string design_to_json(const Design& d) { return dump(design_json(d)); }

Design design_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] { return design_from(j); });
}

std::string fr_code_to_json(const FRCode& code) {
  Json placement = Json::array();
  for (const auto& b : code.placement()) placement.push_back(b);
  return dump({{"kind", "fr"},
               {"n", code.n},
               {"N", code.node_count},
               {"M", code.packets_per_node},
               {"design", design_json(code.design)},
               {"placement", placement}});
}

FRCode fr_code_from_json(std::string_view text) {
  const Json j = parse(text);
  return guarded([&] {
    FRCode code = to_array_code(design_from(j.at("design")));
    if (j.contains("placement")) {
      for (const auto& b : j["placement"]) {
        if (!b.is_array() || b.size() != 4) {
          throw Error(ErrorCode::kBlockSizeMismatch, "placement rows must hold 4 packets");
        }
      }
      if (j["placement"].size() != code.node_count) {
        throw Error(ErrorCode::kMalformedInput, "placement disagrees with the design");
      }
    }
    return code;
  });
}

DescriptorKind descriptor_kind(std::string_view text) {
  const Json j = parse(text);
  const std::string kind = j.is_object() ? j.value("kind", std::string()) : std::string();
  if (kind == "zigzag") return DescriptorKind::kZigzag;
  if (kind == "design") return DescriptorKind::kDesign;
  if (kind == "fr") return DescriptorKind::kFr;
  throw Error(ErrorCode::kMalformedInput, "unknown descriptor kind '" + kind + "'");
}

namespace {

Json sweeps_json(const std::vector<SweepReport>& reports) {
  Json all = Json::array();
  for (const auto& r : reports) {
    Json rows = Json::array();
    for (const auto& row : r.rows) {
      Json jr = {{"failed", row.failed}};
      if (row.error.empty()) {
        jr["recovered"] = row.recovered;
        jr["metrics"] = metrics_json(row.metrics);
      } else {
        jr["error"] = row.error;
      }
      rows.push_back(jr);
    }
    const auto& s = r.summary;
    Json jr = {{"construction", r.construction}};
    if (r.m) jr["m"] = *r.m;
    if (r.k) jr["k"] = *r.k;
    if (r.v) jr["v"] = *r.v;
    jr["rows"] = rows;
    jr["summary"] = {{"rows", s.rows},
                     {"failures", s.failures},
                     {"max_skip", s.max_skip},
                     {"mean_skip", s.mean_skip},
                     {"max_locality", s.max_locality},
                     {"max_bandwidth", s.max_bandwidth},
                     {"max_helper_fraction", s.max_helper_fraction},
                     {"all_recovered", s.all_recovered},
                     {"metrics_agree", s.metrics_agree}};
    all.push_back(jr);
  }
  return {{"reports", all}};
}

}  // namespace

std::string sweeps_to_csv(const std::vector<SweepReport>& reports) {
  std::ostringstream out;
  out << "construction,m,k,failed,helper,symbols_read,skip,locality,bandwidth_total,skip_total\n";
  for (const auto& r : reports) {
    const std::string prefix = csv_label(r) + "," + opt(r.m) + "," + opt(r.k) + ",";
    for (const auto& row : r.rows) {
      if (!row.error.empty()) {
        out << prefix << row.failed << ",,,,,,\n";
        continue;
      }
      for (const auto& h : row.metrics.per_helper) {
        out << prefix << row.failed << "," << h.helper << "," << h.symbols << "," << h.skip << ","
            << row.metrics.locality << "," << row.metrics.bandwidth << ","
            << row.metrics.skip_cost << "\n";
      }
    }
  }
  return out.str();
}

namespace {

Json comparison_json(const BaselineComparison& cmp) {
  Json rows = Json::array();
  for (const auto& r : cmp.rows) {
    rows.push_back({{"failed", r.failed},
                    {"baseline_skip", r.baseline_skip},
                    {"baseline_helper_skip", r.baseline_helper_skip},
                    {"construction_a_skip", r.construction_a_skip},
                    {"construction_b_skip", r.construction_b_skip}});
  }
  return {{"m", cmp.m},
               {"rows", rows},
               {"baseline_total", cmp.baseline_total},
               {"closed_form_total", cmp.closed_form_total},
               {"construction_a_total", cmp.construction_a_total},
               {"construction_b_total", cmp.construction_b_total},
               {"nodes", {{"baseline", cmp.baseline_nodes},
                          {"a", cmp.construction_a_nodes},
                          {"b", cmp.construction_b_nodes}}},
               {"rate", {{"baseline", cmp.baseline_rate},
                         {"a", cmp.construction_a_rate},
                         {"b", cmp.construction_b_rate}}}};
}

}  // namespace

std::string sweeps_to_json(const std::vector<SweepReport>& reports) {
  return dump(sweeps_json(reports));
}

std::string sweeps_to_json(const std::vector<SweepReport>& reports,
                           const BaselineComparison& cmp) {
  Json j = sweeps_json(reports);
  j["comparison"] = comparison_json(cmp);
  return dump(j);
}

std::string comparison_to_json(const BaselineComparison& cmp) { return dump(comparison_json(cmp)); }

std::string comparison_to_csv(const BaselineComparison& cmp) {
  std::ostringstream out;
  out << "m,failed,baseline_skip,baseline_helper_skip,a_skip,b_skip\n";
  for (const auto& r : cmp.rows) {
    out << cmp.m << "," << r.failed << "," << r.baseline_skip << "," << r.baseline_helper_skip
        << "," << r.construction_a_skip << "," << r.construction_b_skip << "\n";
  }
  out << cmp.m << ",total," << cmp.baseline_total << ",," << cmp.construction_a_total << ","
      << cmp.construction_b_total << "\n";
  return out.str();
}

std::string sqs_verdict_to_json(const SqsVerdict& verdict, std::uint32_t v) {
  Json j = {{"v", v}, {"sqs", verdict.ok}};
  if (!verdict.ok) {
    j["witness"] = verdict.witness;
    j["witness_count"] = verdict.witness_count;
    j["reason"] = verdict.reason;
  }
  return dump(j);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kDataUnavailable, "cannot write " + tmp.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error(ErrorCode::kDataUnavailable, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kDataUnavailable, "cannot rename into " + path.string());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kDataUnavailable, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace skipless
