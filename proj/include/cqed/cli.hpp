// Copyright 2026 The cqed-grover Authors
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

// Command-line front end. Kept in the library so tests can drive it with
// in-memory streams.

#include <map>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace cqed::cli {

enum ExitCode : int { kOk = 0, kUsageError = 2, kNumericalError = 3 };

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Keys accepted in config files and as --key flags.
bool is_known_key(std::string_view key);

/// Parses `key = value` lines. '#' starts a comment; blank lines are skipped.
/// Unknown keys, duplicates and lines without '=' raise ConfigError.
std::map<std::string, std::string> parse_key_values(std::string_view text);

/// 12 significant digits, lowercase scientific notation.
std::string format_number(double x);

/// Compact single-line JSON with floating-point values in format_number form.
std::string dump_json(const nlohmann::ordered_json& j);

/// args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace cqed::cli
