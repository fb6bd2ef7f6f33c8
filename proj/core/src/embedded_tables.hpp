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

#ifndef SKIPLESS_SRC_EMBEDDED_TABLES_HPP_
#define SKIPLESS_SRC_EMBEDDED_TABLES_HPP_

#include <vector>

namespace skipless::detail {

struct EmbeddedTable {
  const char* name;
  const char* json;
};

const std::vector<EmbeddedTable>& embedded_tables();

}  // namespace skipless::detail

#endif  // SKIPLESS_SRC_EMBEDDED_TABLES_HPP_
