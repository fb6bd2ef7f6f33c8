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

#include "skipless/mds.hpp"

#include <random>
#include <string>

#include "parallel.hpp"
#include "skipless/error.hpp"

namespace skipless {
namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Uniform over [1, 2^w) by rejection, independent of the standard library's
// distribution implementations.
FieldElement draw_nonzero(std::mt19937_64& rng, unsigned w) {
  const std::uint64_t mask = (std::uint64_t{1} << w) - 1;
  for (;;) {
    const std::uint64_t r = rng() & mask;
    if (r != 0) return FieldElement(static_cast<std::uint32_t>(r));
  }
}

std::vector<std::size_t> subset_rows(const std::vector<unsigned>& columns, std::uint32_t rows) {
  std::vector<std::size_t> out;
  for (unsigned c : columns) {
    for (std::uint32_t x = 0; x < rows; ++x) out.push_back(std::size_t{c} * rows + x);
  }
  return out;
}

}  // namespace

std::uint64_t coefficient_field_bound(const ZigzagCode& code) {
  const std::uint64_t t = (code.k + 1) / 2;
  const std::uint64_t c = binomial(code.k - 1, t - 1);
  return (std::uint64_t{1} << code.m) * c * c;
}

bool field_meets_bound(const ZigzagCode& code, const FieldSpec& field) {
  return field.order() > coefficient_field_bound(code);
}

std::vector<std::vector<unsigned>> column_subsets(unsigned n, unsigned k) {
  const std::uint64_t count = binomial(n, k);
  if (count > kMaxMdsSubsets) {
    throw Error(ErrorCode::kTooManySubsets,
                std::to_string(count) + " subsets exceed the limit of " +
                    std::to_string(kMaxMdsSubsets));
  }
  std::vector<std::vector<unsigned>> out;
  out.reserve(count);
  std::vector<unsigned> cur(k);
  for (unsigned i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && cur[i] == n - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (unsigned t = static_cast<unsigned>(i) + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
  }
  return out;
}

Matrix generator_matrix(const ZigzagCode& code) {
  const std::uint32_t rows = code.rows();
  Matrix g(std::size_t{code.node_count()} * rows, std::size_t{code.k} * rows);
  for (unsigned i = 0; i < code.k; ++i) {
    for (std::uint32_t x = 0; x < rows; ++x) g.at(std::size_t{i} * rows + x, std::size_t{i} * rows + x) = FieldElement(1);
  }
  for (unsigned j = 0; j < code.parity_count(); ++j) {
    const std::size_t base = std::size_t{code.k + j} * rows;
    for (std::uint32_t x = 0; x < rows; ++x) {
      for (unsigned i = 0; i < code.k; ++i) {
        const std::uint32_t src = x ^ code.patterns[j][i];
        g.at(base + x, std::size_t{i} * rows + src) = code.coefficient(x, i, j);
      }
    }
  }
  return g;
}

std::vector<bool> mds_rank_verdicts(const ZigzagCode& code, const GaloisField& field,
                                    unsigned jobs) {
  const auto subsets = column_subsets(code.node_count(), code.k);
  const Matrix g = generator_matrix(code);
  const std::size_t full = std::size_t{code.k} * code.rows();
  std::vector<char> ok(subsets.size(), 0);
  detail::parallel_for(subsets.size(), jobs, [&](std::size_t s) {
    ok[s] = mat_rank(g.select_rows(subset_rows(subsets[s], code.rows())), field) == full;
  });
  return {ok.begin(), ok.end()};
}

MdsVerdict verify_mds(const ZigzagCode& code, const GaloisField& field, unsigned jobs) {
  const auto subsets = column_subsets(code.node_count(), code.k);
  const auto ok = mds_rank_verdicts(code, field, jobs);
  MdsVerdict verdict;
  verdict.subsets_checked = subsets.size();
  verdict.mds = true;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    if (!ok[s]) {
      verdict.mds = false;
      verdict.witness = subsets[s];
      break;
    }
  }
  return verdict;
}

std::vector<bool> mds_decode_verdicts(const ZigzagCode& code, const GaloisField& field,
                                      std::uint64_t seed, unsigned jobs) {
  const auto subsets = column_subsets(code.node_count(), code.k);
  const std::uint32_t rows = code.rows();
  const std::size_t info = std::size_t{code.k} * rows;

  // Column t of the generator is the codeword of the t-th unit message.
  Matrix g(std::size_t{code.node_count()} * rows, info);
  for (std::size_t t = 0; t < info; ++t) {
    Message unit(code.k, std::vector<FieldElement>(rows));
    unit[t / rows][t % rows] = FieldElement(1);
    const ArrayCodeword cw = encode(code, unit, field);
    for (unsigned c = 0; c < code.node_count(); ++c) {
      for (std::uint32_t x = 0; x < rows; ++x) g.at(std::size_t{c} * rows + x, t) = cw.columns[c][x];
    }
  }

  std::mt19937_64 rng(seed);
  Message msg(code.k, std::vector<FieldElement>(rows));
  for (auto& col : msg) {
    for (auto& a : col) a = FieldElement(static_cast<std::uint32_t>(rng() & (field.order() - 1)));
  }
  const ArrayCodeword cw = encode(code, msg, field);

  std::vector<char> ok(subsets.size(), 0);
  detail::parallel_for(subsets.size(), jobs, [&](std::size_t s) {
    Matrix received(info, 1);
    std::size_t r = 0;
    for (unsigned c : subsets[s]) {
      for (std::uint32_t x = 0; x < rows; ++x) received.at(r++, 0) = cw.columns[c][x];
    }
    try {
      const Matrix solved =
          mat_solve(g.select_rows(subset_rows(subsets[s], rows)), received, field);
      bool same = true;
      for (std::size_t t = 0; t < info && same; ++t) same = solved.at(t, 0) == msg[t / rows][t % rows];
      ok[s] = same;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kSingularMatrix) throw;
    }
  });
  return {ok.begin(), ok.end()};
}

ZigzagCode random_coefficients(ZigzagCode code, std::uint64_t seed, const GaloisField& field) {
  std::mt19937_64 rng(seed);
  for (auto& a : code.coefficients) a = draw_nonzero(rng, field.spec().w);
  code.field = field.spec();
  code.seed = seed;
  return code;
}

ZigzagCode assign_coefficients(ZigzagCode code, std::uint64_t seed, unsigned max_attempts,
                               const GaloisField& field, unsigned jobs) {
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    ZigzagCode candidate = random_coefficients(code, seed + attempt, field);
    if (verify_mds(candidate, field, jobs).mds) return candidate;
  }
  throw Error(ErrorCode::kCoefficientSearchExhausted,
              "no MDS coefficient assignment found in " + std::to_string(max_attempts) +
                  " attempts starting at seed " + std::to_string(seed));
}

}  // namespace skipless
