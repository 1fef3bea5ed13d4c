// Copyright 2026 The zdlab Authors
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

#include <map>
#include <string>
#include <string_view>
#include <vector>

// Small string helpers shared by the element parsers and the DSL.
namespace zdlab::text {

std::string strip_spaces(std::string_view s);
std::string_view trim(std::string_view s);

/// Splits on `sep` at parenthesis/bracket depth zero.
std::vector<std::string_view> split_top(std::string_view s, char sep);

/// True when s is "(...)" with the outer parentheses matching each other.
bool wrapped_in_parens(std::string_view s);

/// Parses a signed decimal integer; throws zdlab::Error otherwise.
long long parse_int(std::string_view s);

/// Parses a univariate polynomial with integer coefficients in variable
/// `var`, e.g. "2*x^2 - x + 1". Returns degree -> coefficient.
std::map<unsigned, long long> parse_int_poly(std::string_view s, char var);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace zdlab::text
