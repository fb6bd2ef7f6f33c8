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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "skipless/error.hpp"
#include "skipless/fr_code.hpp"
#include "skipless/mds.hpp"
#include "skipless/serialize.hpp"
#include "skipless/sqs.hpp"
#include "skipless/sweep.hpp"
#include "skipless/zigzag.hpp"

namespace skipless::cli {
namespace {

struct Options {
  std::string construction;
  std::optional<unsigned> m;
  std::optional<unsigned> k;
  std::optional<std::uint32_t> v;
  std::uint32_t max_v = kDefaultMaxOrder;
  std::uint64_t seed = 0;
  unsigned field_w = 16;
  unsigned max_attempts = 20;
  std::optional<std::uint32_t> fail_node;
  std::string check;
  bool compare = false;
  unsigned jobs = 1;
  std::string out;
  std::string format = "json";
  std::string descriptor;
};

// Bad input that is the caller's fault rather than a failed verification.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_zigzag(const std::string& c) {
  return c == "a" || c == "b" || c == "c" || c == "baseline";
}

void emit(const Options& opt, const std::string& text, std::ostream& out) {
  if (opt.out.empty()) {
    out << text;
  } else {
    write_file_atomic(opt.out, text);
  }
}

std::string render(const Options& opt, const std::vector<SweepReport>& reports) {
  return opt.format == "csv" ? sweeps_to_csv(reports) : sweeps_to_json(reports);
}

ZigzagCode build_code(const Options& opt, bool verified, std::ostream& err) {
  if (!opt.m) throw UsageError("--m is required for zigzag constructions");
  const Construction c = construction_from_string(opt.construction);
  if (c == Construction::kC && !opt.k) throw UsageError("--k is required for construction c");
  const GaloisField field(default_field_spec(opt.field_w));
  ZigzagCode code = build_zigzag(c, *opt.m, opt.k.value_or(*opt.m + 1), field.spec());
  if (!verified) return random_coefficients(std::move(code), opt.seed, field);
  if (!field_meets_bound(code, field.spec())) {
    err << "warning: GF(2^" << opt.field_w << ") is below the coefficient bound "
        << coefficient_field_bound(code) << "; the search may fail\n";
  }
  return assign_coefficients(std::move(code), opt.seed, opt.max_attempts, field, opt.jobs);
}

Design build_design(const Options& opt) {
  if (!opt.v) throw UsageError("--v is required for sqs and fr");
  return build_sqs(*opt.v, opt.max_v);
}

std::string load_descriptor(const Options& opt) {
  if (opt.descriptor.empty()) throw UsageError("a descriptor file is required");
  if (!std::filesystem::is_regular_file(opt.descriptor)) {
    throw UsageError("cannot open descriptor " + opt.descriptor);
  }
  return read_file(opt.descriptor);
}

Design design_of(const std::string& text, DescriptorKind kind) {
  return kind == DescriptorKind::kFr ? fr_code_from_json(text).design : design_from_json(text);
}

int cmd_build(const Options& opt, std::ostream& out, std::ostream& err) {
  if (is_zigzag(opt.construction)) {
    emit(opt, zigzag_to_json(build_code(opt, true, err)), out);
  } else if (opt.construction == "sqs") {
    emit(opt, design_to_json(build_design(opt)), out);
  } else {
    emit(opt, fr_code_to_json(to_array_code(build_design(opt))), out);
  }
  return kExitPass;
}

int report_sweep(const Options& opt, const SweepReport& report, std::ostream& out,
                 std::ostream& err) {
  emit(opt, render(opt, {report}), out);
  for (const auto& row : report.rows) {
    if (!row.error.empty()) {
      err << "fail: node " << row.failed << ": " << row.error << "\n";
      return kExitFailure;
    }
    if (row.metrics.skip_cost != 0 || !row.recovered) {
      err << "fail: s=" << row.failed << " skip " << row.metrics.skip_cost
          << (row.recovered ? "" : " (not recovered)") << "\n";
      return kExitFailure;
    }
  }
  return kExitPass;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string text = load_descriptor(opt);
  const DescriptorKind kind = descriptor_kind(text);
  const std::string check =
      !opt.check.empty() ? opt.check : kind == DescriptorKind::kZigzag ? "mds" : "sqs";

  if (check == "mds") {
    if (kind != DescriptorKind::kZigzag) throw UsageError("--check mds needs a zigzag descriptor");
    const ZigzagCode code = zigzag_from_json(text);
    const MdsVerdict verdict = verify_mds(code, GaloisField(code.field), opt.jobs);
    std::ostringstream s;
    s << "{\n  \"mds\": " << (verdict.mds ? "true" : "false")
      << ",\n  \"subsets_checked\": " << verdict.subsets_checked;
    if (!verdict.mds) {
      s << ",\n  \"witness\": [";
      for (std::size_t i = 0; i < verdict.witness.size(); ++i) {
        s << (i ? ", " : "") << verdict.witness[i];
      }
      s << "]";
    }
    s << "\n}\n";
    emit(opt, s.str(), out);
    if (!verdict.mds) {
      err << "fail: columns {";
      for (std::size_t i = 0; i < verdict.witness.size(); ++i) {
        err << (i ? "," : "") << verdict.witness[i];
      }
      err << "} do not determine the codeword\n";
      return kExitFailure;
    }
    return kExitPass;
  }
  if (check == "sqs") {
    if (kind == DescriptorKind::kZigzag) throw UsageError("--check sqs needs a design descriptor");
    const Design d = design_of(text, kind);
    const SqsVerdict verdict = verify_sqs(d);
    emit(opt, sqs_verdict_to_json(verdict, d.order()), out);
    if (!verdict.ok) {
      err << "fail: " << verdict.reason << "\n";
      return kExitFailure;
    }
    return kExitPass;
  }
  if (kind == DescriptorKind::kZigzag) {
    const ZigzagCode code = zigzag_from_json(text);
    return report_sweep(opt, sweep_zigzag(code, GaloisField(code.field), opt.seed, opt.jobs),
                        out, err);
  }
  return report_sweep(opt, sweep_fr(to_array_code(design_of(text, kind)), opt.seed, opt.jobs),
                      out, err);
}

int cmd_simulate(const Options& opt, std::ostream& out, std::ostream& err) {
  const std::string text = load_descriptor(opt);
  const DescriptorKind kind = descriptor_kind(text);
  if (!opt.fail_node) throw UsageError("--fail-node is required");
  const std::uint32_t node = *opt.fail_node;

  SweepReport report;
  SweepRow row;
  row.failed = node;
  if (kind == DescriptorKind::kZigzag) {
    const ZigzagCode code = zigzag_from_json(text);
    if (node >= code.k) {
      throw UsageError("--fail-node must name a systematic node below " + std::to_string(code.k));
    }
    const GaloisField field(code.field);
    std::mt19937_64 rng(opt.seed);
    Message msg(code.k, std::vector<FieldElement>(code.rows()));
    for (auto& col : msg) {
      for (auto& a : col) a = FieldElement(static_cast<std::uint32_t>(rng() & (field.order() - 1)));
    }
    const ArrayCodeword cw = encode(code, msg, field);
    const RepairPlan plan = plan_repair(code, node);
    row.metrics = measure(trace_of(plan, code));
    row.planner_skip = plan.skip_cost();
    row.recovered = execute_repair(cw, plan, code, field) == msg[node];
    report.construction = std::string(to_string(code.construction));
    report.m = code.m;
    report.k = code.k;
  } else {
    const FRCode code = to_array_code(design_of(text, kind));
    if (node >= code.node_count) {
      throw UsageError("--fail-node must be below " + std::to_string(code.node_count));
    }
    std::mt19937_64 rng(opt.seed);
    PacketStore store;
    for (std::uint32_t p = 0; p < code.n; ++p) {
      store.packets.push_back({static_cast<std::uint8_t>(rng()), static_cast<std::uint8_t>(rng())});
    }
    const NodeRepair r = repair_node(code, store, node);
    row.metrics = r.metrics;
    row.planner_skip = r.plan.skip_cost();
    row.recovered = r.packets == node_contents(code, store, node);
    report.construction = "sqs";
    report.v = code.n;
  }
  report.rows.push_back(row);
  report.summary = summarize(report.rows);
  emit(opt, render(opt, {report}), out);
  if (!row.recovered) {
    err << "fail: node " << node << " was not recovered\n";
    return kExitFailure;
  }
  return kExitPass;
}

int cmd_sweep(const Options& opt, std::ostream& out, std::ostream& err) {
  std::vector<SweepReport> reports;
  if (!opt.descriptor.empty()) {
    const std::string text = load_descriptor(opt);
    const DescriptorKind kind = descriptor_kind(text);
    if (kind == DescriptorKind::kZigzag) {
      const ZigzagCode code = zigzag_from_json(text);
      reports.push_back(sweep_zigzag(code, GaloisField(code.field), opt.seed, opt.jobs));
    } else {
      reports.push_back(sweep_fr(to_array_code(design_of(text, kind)), opt.seed, opt.jobs));
    }
  } else if (is_zigzag(opt.construction)) {
    const ZigzagCode code = build_code(opt, false, err);
    reports.push_back(sweep_zigzag(code, GaloisField(code.field), opt.seed, opt.jobs));
  } else if (opt.construction == "sqs" || opt.construction == "fr") {
    if (opt.v) {
      reports.push_back(sweep_fr(to_array_code(build_design(opt)), opt.seed, opt.jobs));
    } else {
      // SQS(4) is a single node with nothing to repair from, so sweeps start at 8.
      for (std::uint32_t v = 8; v <= opt.max_v; ++v) {
        if (!sqs_reachable(v)) continue;
        reports.push_back(sweep_fr(to_array_code(build_sqs(v, opt.max_v)), opt.seed, opt.jobs));
      }
    }
  } else if (!opt.compare) {
    throw UsageError("sweep needs a descriptor, --construction, or --compare");
  }

  std::optional<BaselineComparison> cmp;
  if (opt.compare) {
    if (!opt.m) throw UsageError("--compare needs --m");
    cmp = compare_baseline(*opt.m);
    if (reports.empty()) {
      const GaloisField field(default_field_spec(opt.field_w));
      for (Construction c : {Construction::kBaseline, Construction::kA, Construction::kB}) {
        const ZigzagCode code =
            random_coefficients(build_zigzag(c, *opt.m, *opt.m + 1, field.spec()), opt.seed, field);
        reports.push_back(sweep_zigzag(code, field, opt.seed, opt.jobs));
      }
    }
  }

  std::string text;
  if (opt.format == "csv") {
    text = sweeps_to_csv(reports);
    if (cmp) text += "\n" + comparison_to_csv(*cmp);
  } else if (cmp) {
    text = sweeps_to_json(reports, *cmp);
  } else {
    text = sweeps_to_json(reports);
  }
  emit(opt, text, out);

  bool zero_skip = true;
  for (const auto& r : reports) {
    const bool baseline = r.construction == "baseline";
    if (r.summary.failures > 0 || !r.summary.all_recovered) {
      err << "fail: " << r.construction << " sweep has unrecovered nodes\n";
      return kExitFailure;
    }
    if (!baseline && r.summary.max_skip != 0) zero_skip = false;
  }
  if (!zero_skip) {
    err << "fail: a zero-skip construction reported nonzero skip\n";
    return kExitFailure;
  }
  return kExitPass;
}

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kParameterOutOfRange:
    case ErrorCode::kMalformedInput:
    case ErrorCode::kDataUnavailable:
    case ErrorCode::kBlockSizeMismatch:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-skip repair codes: build, verify, simulate and sweep", "skipless"};
  app.require_subcommand(1);
  Options opt;

  const std::vector<std::string> constructions = {"a", "b", "c", "baseline", "sqs", "fr"};
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", opt.seed, "Seed for coefficients and random messages");
    sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    sub->add_option("--out", opt.out, "Output file (default: standard output)");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--construction", opt.construction, "a, b, c, baseline, sqs or fr")
        ->check(CLI::IsMember(constructions));
    sub->add_option("--m", opt.m, "Row exponent: 2^m rows per column")->check(CLI::Range(2u, 6u));
    sub->add_option("--k", opt.k, "Systematic columns (construction c)")->check(CLI::Range(2u, 10u));
    sub->add_option("--v", opt.v, "SQS order")->check(CLI::Range(4u, 100000u));
    sub->add_option("--max-v", opt.max_v, "Largest SQS order to build")->check(CLI::Range(4u, 100000u));
    sub->add_option("--field-w", opt.field_w, "Field width w of GF(2^w)")->check(CLI::Range(2u, 16u));
  };

  CLI::App* build = app.add_subcommand("build", "Write a code or design descriptor");
  add_common(build);
  add_params(build);
  build->get_option("--construction")->required();
  build->add_option("--max-attempts", opt.max_attempts, "Coefficient search attempts");

  CLI::App* verify = app.add_subcommand("verify", "Check a descriptor");
  add_common(verify);
  verify->add_option("descriptor", opt.descriptor, "Descriptor file")->required();
  verify->add_option("--check", opt.check, "mds, sqs or zero-skip")
      ->check(CLI::IsMember({"mds", "sqs", "zero-skip"}));

  CLI::App* simulate = app.add_subcommand("simulate", "Fail one node and repair it");
  add_common(simulate);
  simulate->add_option("descriptor", opt.descriptor, "Descriptor file")->required();
  simulate->add_option("--fail-node", opt.fail_node, "Node to fail")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "Repair every node and report the costs");
  add_common(sweep);
  add_params(sweep);
  sweep->add_option("descriptor", opt.descriptor, "Descriptor file");
  sweep->add_flag("--compare", opt.compare, "Add the baseline comparison table (needs --m)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*build) return cmd_build(opt, out, err);
    if (*verify) return cmd_verify(opt, out, err);
    if (*simulate) return cmd_simulate(opt, out, err);
    return cmd_sweep(opt, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace skipless::cli
