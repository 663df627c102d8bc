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

#include "text_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "errors.hpp"

namespace lmax {
namespace {

struct Token {
  std::int64_t value;
  int line;
  int column;
};

// Feeds non-blank content lines (comments stripped) one at a time, each as a
// list of integer tokens with 1-based locations.
class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Returns false at end of input.
  bool next_line(std::vector<Token>& tokens) {
    tokens.clear();
    while (pos_ < text_.size()) {
      ++line_;
      std::size_t eol = text_.find('\n', pos_);
      if (eol == std::string_view::npos) eol = text_.size();
      std::string_view line = text_.substr(pos_, eol - pos_);
      pos_ = eol + 1;

      const std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) line = line.substr(0, hash);

      std::size_t i = 0;
      while (i < line.size()) {
        if (is_space(line[i])) {
          ++i;
          continue;
        }
        std::size_t end = i;
        while (end < line.size() && !is_space(line[end])) ++end;
        tokens.push_back(parse_token(line.substr(i, end - i), line_,
                                     static_cast<int>(i) + 1));
        i = end;
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int current_line() const { return line_; }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
  }

  static Token parse_token(std::string_view word, int line, int column) {
    std::int64_t value = 0;
    const char* first = word.data();
    const char* last = word.data() + word.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range)
      throw ParseError(line, column, "integer out of 64-bit range");
    if (ec != std::errc{} || ptr != last)
      throw ParseError(line, column,
                       "expected a base-10 integer, got '" +
                           std::string(word) + "'");
    return Token{value, line, column};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 0;
};

[[noreturn]] void fail(const Token& tok, const std::string& msg) {
  throw ParseError(tok.line, tok.column, msg);
}

std::int64_t require_count(const Token& tok, std::int64_t lo,
                           const char* what) {
  if (tok.value < lo)
    fail(tok, std::string(what) + " must be >= " + std::to_string(lo));
  return tok.value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  LineReader reader(text);
  std::vector<Token> tokens;

  if (!reader.next_line(tokens))
    throw ParseError(1, 1, "missing machine line 'm lambda_1 ... lambda_m'");
  const std::int64_t m = require_count(tokens[0], 1, "machine count");
  if (static_cast<std::int64_t>(tokens.size()) != m + 1)
    fail(tokens[0], "machine line has " + std::to_string(tokens.size() - 1) +
                        " rate(s), expected " + std::to_string(m));

  Instance instance;
  instance.machines.rates.reserve(static_cast<std::size_t>(m));
  for (std::int64_t j = 1; j <= m; ++j) {
    if (tokens[j].value < 1) fail(tokens[j], "machine rates must be >= 1");
    instance.machines.rates.push_back(tokens[j].value);
  }

  if (!reader.next_line(tokens))
    throw ParseError(reader.current_line() + 1, 1, "missing job count line");
  if (tokens.size() != 1) fail(tokens[1], "job count line must hold exactly one integer");
  const std::int64_t n = require_count(tokens[0], 0, "job count");

  instance.jobs.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    if (!reader.next_line(tokens))
      throw ParseError(reader.current_line() + 1, 1,
                       "expected " + std::to_string(n) + " job lines, found " +
                           std::to_string(i));
    if (tokens.size() != 2)
      fail(tokens[0], "job line must hold exactly two integers 't d'");
    if (tokens[0].value < 0) fail(tokens[0], "job work must be >= 0");
    if (tokens[1].value < 0) fail(tokens[1], "job deadlines must be >= 0");
    Job job;
    job.work = tokens[0].value;
    job.deadline = tokens[1].value;
    job.id = static_cast<std::int32_t>(i);
    instance.jobs.push_back(job);
  }

  if (reader.next_line(tokens)) fail(tokens[0], "unexpected trailing input");

  try {
    validate_input_instance(instance);
  } catch (const RangeError& e) {
    throw ParseError(0, 0, e.what());
  }
  return instance;
}

std::string format_instance(const Instance& instance) {
  std::ostringstream out;
  out << instance.num_machines();
  for (std::int64_t rate : instance.machines.rates) out << ' ' << rate;
  out << '\n' << instance.num_jobs() << '\n';
  for (const Job& job : instance.jobs)
    out << job.work << ' ' << job.deadline << '\n';
  return out.str();
}

BinPackInstance parse_binpack(std::string_view text) {
  LineReader reader(text);
  std::vector<Token> tokens;

  if (!reader.next_line(tokens))
    throw ParseError(1, 1, "missing bin capacity line");
  if (tokens.size() != 1)
    fail(tokens[1], "bin capacity line must hold exactly one integer");
  BinPackInstance bp;
  bp.bin_capacity = require_count(tokens[0], 1, "bin capacity");

  if (!reader.next_line(tokens))
    throw ParseError(reader.current_line() + 1, 1, "missing item count line");
  if (tokens.size() != 1)
    fail(tokens[1], "item count line must hold exactly one integer");
  const std::int64_t n = require_count(tokens[0], 0, "item count");

  bp.item_sizes.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    if (!reader.next_line(tokens))
      throw ParseError(reader.current_line() + 1, 1,
                       "expected " + std::to_string(n) + " item lines, found " +
                           std::to_string(i));
    if (tokens.size() != 1) fail(tokens[1], "item line must hold exactly one integer");
    if (tokens[0].value < 1) fail(tokens[0], "item sizes must be >= 1");
    if (tokens[0].value > bp.bin_capacity)
      fail(tokens[0], "item size " + std::to_string(tokens[0].value) +
                          " exceeds bin capacity " +
                          std::to_string(bp.bin_capacity));
    bp.item_sizes.push_back(tokens[0].value);
  }

  if (reader.next_line(tokens)) fail(tokens[0], "unexpected trailing input");

  // The scheduling reduction multiplies nothing beyond sizes and capacity,
  // but keep totals inside the solver range up front.
  std::int64_t total = 0;
  for (std::int64_t s : bp.item_sizes) {
    if (__builtin_add_overflow(total, s, &total))
      throw ParseError(0, 0, "total item size overflows 64 bits");
  }
  return bp;
}

}  // namespace lmax
