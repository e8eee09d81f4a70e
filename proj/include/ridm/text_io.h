// Copyright 2026 The RIDM Authors
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

// Text formats: demonstration files, gains files and CSV exports.
//
// Demonstration file (UTF-8, one record per line):
//
//   #ridm-demo v1 env=<env_id> dt=<float> joints=<int> source=<token>
//   <angle_0> <angle_1> ... <angle_{joints-1}>
//   ...
//
// Gains file:
//
//   #ridm-gains v1 scheme=<local|global> terms=<p|pd|pid> joints=<int>
//   <log_gain_0> <log_gain_1> ...
//
// Numbers are written in the shortest decimal form that round-trips.

#ifndef RIDM_TEXT_IO_H_
#define RIDM_TEXT_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "ridm/types.h"

namespace ridm {

std::string FormatDouble(double value);
// strict: the whole token must be consumed; throws Error otherwise
double ParseDouble(std::string_view token);
long long ParseInt(std::string_view token);

std::string EncodeDemonstration(const Demonstration& demo);
// errors name the offending 1-based line
Demonstration DecodeDemonstration(std::string_view text);

std::string EncodeGains(const GainParams& gains);
GainParams DecodeGains(std::string_view text);

// columns t, s_0..s_{J-1}, a_0..a_{J-1}, r; the final row has empty
// action and reward cells
std::string RolloutToCsv(const RolloutRecord& record);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace ridm

#endif  // RIDM_TEXT_IO_H_
