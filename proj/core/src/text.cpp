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

#include "zdlab/text.hpp"

#include <cctype>
#include <charconv>

#include "zdlab/element_set.hpp"

namespace zdlab::text {

std::string strip_spaces(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_top(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{' || c == '<') ++depth;
    if (c == ')' || c == ']' || c == '}' || c == '>') --depth;
    if (c == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

bool wrapped_in_parens(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 < s.size()) return false;
  }
  return true;
}

long long parse_int(std::string_view s) {
  s = trim(s);
  long long v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error("expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

std::map<unsigned, long long> parse_int_poly(std::string_view input, char var) {
  const std::string s = strip_spaces(input);
  if (s.empty()) throw Error("empty polynomial");
  std::map<unsigned, long long> out;
  std::size_t i = 0;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw Error("malformed polynomial '" + s + "'");
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string_view term(s.data() + i, j - i);
    if (term.empty()) throw Error("malformed polynomial '" + s + "'");
    long long coeff = 1;
    unsigned degree = 0;
    auto pos = term.find(var);
    if (pos == std::string_view::npos) {
      coeff = parse_int(term);
    } else {
      std::string_view head = term.substr(0, pos);
      std::string_view tail = term.substr(pos + 1);
      if (!head.empty()) {
        if (head.back() != '*') throw Error("malformed term '" + std::string(term) + "'");
        coeff = parse_int(head.substr(0, head.size() - 1));
      }
      degree = 1;
      if (!tail.empty()) {
        if (tail.front() != '^') throw Error("malformed term '" + std::string(term) + "'");
        long long d = parse_int(tail.substr(1));
        if (d < 0) throw Error("negative exponent in '" + std::string(term) + "'");
        degree = static_cast<unsigned>(d);
      }
    }
    out[degree] += sign * coeff;
    i = j;
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace zdlab::text
