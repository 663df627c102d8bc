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

#include <string>
#include <string_view>

#include "binpack_types.hpp"
#include "instance.hpp"

namespace lmax {

// Instance text format (UTF-8, line oriented, '#' comments, blank lines
// ignored):
//   line 1: m lambda_1 ... lambda_m
//   line 2: n
//   next n lines: t_i d_i
//
// Bin-packing text format:
//   line 1: b       (bin capacity)
//   line 2: n       (item count)
//   next n lines: one item size each

/// Parses and validates an instance. Throws ParseError with a 1-based
/// line/column location on malformed or out-of-range input.
Instance parse_instance(std::string_view text);

/// Canonical text form of an instance; parse_instance(format_instance(i))
/// reproduces i exactly.
std::string format_instance(const Instance& instance);

/// Parses and validates a bin-packing instance. Item sizes larger than the
/// bin capacity are rejected here (no packing could exist).
BinPackInstance parse_binpack(std::string_view text);

}  // namespace lmax
