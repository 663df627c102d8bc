// Copyright 2026 The lmax-sched Authors
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

#pragma once

#include <cstdint>
#include <vector>

namespace lmax {

/// Items to pack into bins of a common capacity. Valid instances have every
/// size in [1, bin_capacity].
struct BinPackInstance {
  std::vector<std::int64_t> item_sizes;
  std::int64_t bin_capacity = 1;

  std::int32_t num_items() const {
    return static_cast<std::int32_t>(item_sizes.size());
  }
};

}  // namespace lmax
