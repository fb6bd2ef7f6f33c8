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

#ifndef SKIPLESS_SERIALIZE_HPP_
#define SKIPLESS_SERIALIZE_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "skipless/design.hpp"
#include "skipless/fr_code.hpp"
#include "skipless/sqs.hpp"
#include "skipless/sweep.hpp"
#include "skipless/zigzag.hpp"

namespace skipless {

// All writers emit keys in a fixed order so equal inputs give equal bytes.
// All readers throw kMalformedInput on anything they cannot interpret.

std::string zigzag_to_json(const ZigzagCode& code);
ZigzagCode zigzag_from_json(std::string_view text);

std::string repair_plan_to_json(const RepairPlan& plan);
std::string block_repair_plan_to_json(const BlockRepairPlan& plan);

std::string design_to_json(const Design& d);
Design design_from_json(std::string_view text);

std::string fr_code_to_json(const FRCode& code);
// Throws kBlockSizeMismatch for blocks that do not hold four points.
FRCode fr_code_from_json(std::string_view text);

enum class DescriptorKind { kZigzag, kDesign, kFr };
DescriptorKind descriptor_kind(std::string_view text);

std::string sweeps_to_json(const std::vector<SweepReport>& reports);
// The same document with a "comparison" member appended.
std::string sweeps_to_json(const std::vector<SweepReport>& reports,
                           const BaselineComparison& cmp);
// construction,m,k,failed,helper,symbols_read,skip,locality,bandwidth_total,skip_total
// with one line per (failed node, helper).
std::string sweeps_to_csv(const std::vector<SweepReport>& reports);

std::string comparison_to_json(const BaselineComparison& cmp);
std::string comparison_to_csv(const BaselineComparison& cmp);

std::string sqs_verdict_to_json(const SqsVerdict& verdict, std::uint32_t v);

// Writes through a temporary file in the same directory and renames it into
// place. Throws kDataUnavailable when the file cannot be written.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);
// Throws kDataUnavailable when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

}  // namespace skipless

#endif  // SKIPLESS_SERIALIZE_HPP_
