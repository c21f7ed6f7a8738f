/* Copyright 2026 The Alethe Checker Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace alethe::testing {

struct CorpusEntry {
  std::string problem_path;
  std::string proof_path;
  std::optional<std::string> goal;
  std::string expected;
};

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string corpus_path(const std::string& name) {
  return std::string(ALETHE_CORPUS_DIR) + "/" + name;
}

inline std::vector<CorpusEntry> load_manifest() {
  std::istringstream in(read_text(corpus_path("manifest.txt")));
  std::vector<CorpusEntry> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string problem, proof, goal, expected;
    fields >> problem >> proof >> goal >> expected;
    out.push_back({corpus_path(problem), corpus_path(proof),
                   goal == "-" ? std::nullopt : std::optional(goal),
                   expected});
  }
  return out;
}

}  // namespace alethe::testing
