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

#include "ridm/text_io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

namespace ridm {

namespace {

constexpr std::string_view kDemoMagic = "#ridm-demo";
constexpr std::string_view kGainsMagic = "#ridm-gains";
constexpr std::string_view kVersion = "v1";

std::vector<std::string_view> SplitWhitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void LineError(size_t line, const std::string& what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

// parses "#magic v1 key=value ..." into a key map
std::map<std::string, std::string, std::less<>> ParseHeader(
    std::string_view line, std::string_view magic) {
  std::vector<std::string_view> tokens = SplitWhitespace(line);
  if (tokens.size() < 2 || tokens[0] != magic) {
    LineError(1, "expected header starting with '" + std::string(magic) + "'");
  }
  if (tokens[1] != kVersion) {
    LineError(1, "unsupported version '" + std::string(tokens[1]) + "'");
  }
  std::map<std::string, std::string, std::less<>> fields;
  for (size_t i = 2; i < tokens.size(); ++i) {
    size_t eq = tokens[i].find('=');
    if (eq == std::string_view::npos || eq == 0) {
      LineError(1, "malformed header field '" + std::string(tokens[i]) + "'");
    }
    fields.emplace(std::string(tokens[i].substr(0, eq)),
                   std::string(tokens[i].substr(eq + 1)));
  }
  return fields;
}

const std::string& RequireField(
    const std::map<std::string, std::string, std::less<>>& fields,
    std::string_view key) {
  auto it = fields.find(key);
  if (it == fields.end()) {
    LineError(1, "header is missing '" + std::string(key) + "'");
  }
  return it->second;
}

std::vector<double> ParseRow(std::string_view line, size_t line_number) {
  std::vector<double> row;
  for (std::string_view token : SplitWhitespace(line)) {
    try {
      row.push_back(ParseDouble(token));
    } catch (const Error& e) {
      LineError(line_number, e.what());
    }
  }
  return row;
}

}  // namespace

std::string FormatDouble(double value) {
  char buffer[64];
  auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

double ParseDouble(std::string_view token) {
  double value = 0.0;
  auto result = std::from_chars(token.data(), token.data() + token.size(),
                                value);
  if (result.ec != std::errc() || result.ptr != token.data() + token.size()) {
    throw Error("not a number: '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw Error("non-finite value '" + std::string(token) + "'");
  }
  return value;
}

long long ParseInt(std::string_view token) {
  long long value = 0;
  auto result = std::from_chars(token.data(), token.data() + token.size(),
                                value);
  if (result.ec != std::errc() || result.ptr != token.data() + token.size()) {
    throw Error("not an integer: '" + std::string(token) + "'");
  }
  return value;
}

std::string EncodeDemonstration(const Demonstration& demo) {
  demo.Validate();
  std::string out;
  out += kDemoMagic;
  out += ' ';
  out += kVersion;
  out += " env=" + demo.env_id + " dt=" + FormatDouble(demo.dt) +
         " joints=" + std::to_string(demo.JointCount()) +
         " source=" + demo.source + "\n";
  for (const JointVector& state : demo.states) {
    for (size_t j = 0; j < state.size(); ++j) {
      if (j > 0) out += ' ';
      out += FormatDouble(state[j]);
    }
    out += '\n';
  }
  return out;
}

Demonstration DecodeDemonstration(std::string_view text) {
  std::vector<std::string_view> lines = SplitLines(text);
  if (lines.empty()) LineError(1, "empty demonstration file");
  auto fields = ParseHeader(lines[0], kDemoMagic);

  Demonstration demo;
  demo.env_id = RequireField(fields, "env");
  demo.source = RequireField(fields, "source");
  long long joints = 0;
  try {
    demo.dt = ParseDouble(RequireField(fields, "dt"));
    joints = ParseInt(RequireField(fields, "joints"));
  } catch (const Error& e) {
    LineError(1, e.what());
  }
  if (!(demo.dt > 0.0)) LineError(1, "dt must be positive");
  if (joints < 1) LineError(1, "joints must be positive");
  if (demo.env_id.empty()) LineError(1, "empty env");
  if (demo.source.empty()) LineError(1, "empty source");

  for (size_t i = 1; i < lines.size(); ++i) {
    // a trailing blank line is tolerated, blank lines elsewhere are not
    if (lines[i].find_first_not_of(" \t") == std::string_view::npos) {
      if (i + 1 == lines.size()) break;
      LineError(i + 1, "blank line");
    }
    std::vector<double> row = ParseRow(lines[i], i + 1);
    if (static_cast<long long>(row.size()) != joints) {
      LineError(i + 1, "expected " + std::to_string(joints) + " columns, got " +
                           std::to_string(row.size()));
    }
    demo.states.push_back(std::move(row));
  }
  if (demo.states.size() < 2) {
    LineError(lines.size(), "demonstration needs at least 2 states, got " +
                                std::to_string(demo.states.size()));
  }
  return demo;
}

std::string EncodeGains(const GainParams& gains) {
  gains.Validate();
  std::string out;
  out += kGainsMagic;
  out += ' ';
  out += kVersion;
  out += " scheme=" + std::string(SchemeName(gains.scheme)) +
         " terms=" + std::string(TermsName(gains.terms)) +
         " joints=" + std::to_string(gains.joint_count) + "\n";
  for (size_t i = 0; i < gains.log_gains.size(); ++i) {
    if (i > 0) out += ' ';
    out += FormatDouble(gains.log_gains[i]);
  }
  out += '\n';
  return out;
}

GainParams DecodeGains(std::string_view text) {
  std::vector<std::string_view> lines = SplitLines(text);
  if (lines.empty()) LineError(1, "empty gains file");
  auto fields = ParseHeader(lines[0], kGainsMagic);
  GainParams gains;
  try {
    gains.scheme = ParseScheme(RequireField(fields, "scheme"));
    gains.terms = ParseTerms(RequireField(fields, "terms"));
    gains.joint_count =
        static_cast<int>(ParseInt(RequireField(fields, "joints")));
  } catch (const Error& e) {
    LineError(1, e.what());
  }
  if (lines.size() < 2) LineError(2, "missing log-gain row");
  gains.log_gains = ParseRow(lines[1], 2);
  try {
    gains.Validate();
  } catch (const Error& e) {
    LineError(2, e.what());
  }
  return gains;
}

std::string RolloutToCsv(const RolloutRecord& record) {
  const size_t joints = record.states.empty() ? 0 : record.states[0].size();
  const size_t action_dim =
      record.actions.empty() ? joints : record.actions[0].size();
  std::ostringstream out;
  out << "t";
  for (size_t j = 0; j < joints; ++j) out << ",s_" << j;
  for (size_t j = 0; j < action_dim; ++j) out << ",a_" << j;
  out << ",r\n";
  for (size_t t = 0; t < record.states.size(); ++t) {
    out << t;
    for (double s : record.states[t]) out << ',' << FormatDouble(s);
    if (t < record.actions.size()) {
      for (double a : record.actions[t]) out << ',' << FormatDouble(a);
      out << ',' << FormatDouble(record.rewards[t]);
    } else {
      for (size_t j = 0; j < action_dim; ++j) out << ',';
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("write failed for '" + path.string() + "'");
}

}  // namespace ridm
