// Copyright 2026 The zpkit Authors
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

#ifndef ZPKIT_TEXT_HPP_
#define ZPKIT_TEXT_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace zpkit {

// True if s is well-formed UTF-8 (no overlongs, surrogates, or > U+10FFFF).
bool utf8_valid(std::string_view s);

// Byte length of the UTF-8 sequence starting with this lead byte; 0 if the
// byte cannot start a sequence.
std::size_t utf8_seq_len(unsigned char lead);

// Splits on runs of spaces and tabs; never returns empty fields.
std::vector<std::string> split_ws(std::string_view line);

std::vector<std::string> split_char(std::string_view s, char sep);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string lower_ascii(std::string_view s);

std::string trim(std::string_view s);

bool is_blank(std::string_view s);

// Locale-independent numeric formatting. All floating-point output in the
// toolkit goes through these so runs are byte-reproducible.
std::string format_g12(double v);                 // 12 significant digits
std::string format_fixed(double v, int digits);   // fixed decimals

// Parses with full precision; throws ValidationError on garbage.
double parse_double(std::string_view s, std::string_view what);
std::int64_t parse_int(std::string_view s, std::string_view what);

// Whole-file line reader. Strips trailing '\r'. Throws IoError if the file
// cannot be opened. A trailing newline does not produce a final empty line.
std::vector<std::string> read_lines(const std::string& path);

void write_file(const std::string& path, std::string_view content);

std::string read_file(const std::string& path);

}  // namespace zpkit

#endif  // ZPKIT_TEXT_HPP_
