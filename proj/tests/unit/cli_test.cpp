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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "alethe/cli.hpp"
#include "doctest.h"
#include "support/corpus.hpp"

namespace alethe {
namespace {

using testing::corpus_path;
using testing::read_text;

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "alethe-check");
  std::vector<char*> argv;
  for (std::string& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  auto* old_out = std::cout.rdbuf(out.rdbuf());
  auto* old_err = std::cerr.rdbuf(err.rdbuf());
  int code = run(static_cast<int>(argv.size()), argv.data());
  std::cout.rdbuf(old_out);
  std::cerr.rdbuf(old_err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("alethe_cli_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

TEST_CASE("check exit codes") {
  std::string problem = corpus_path("fragment.smt2");
  CHECK(run_cli({"check", problem, corpus_path("fragment.alethe")}).code == 0);
  CHECK(run_cli({"check", problem, corpus_path("fragment_verbatim.alethe")})
            .code == 1);
  Output empty =
      run_cli({"check", problem, temp_file("empty.alethe", ""), "--goal", "t6"});
  CHECK(empty.code == 2);
  CHECK(empty.err.rfind("error: NoGoal", 0) == 0);
  Output missing = run_cli({"check", problem, "/nonexistent/proof.alethe"});
  CHECK(missing.code == 2);
  CHECK(missing.err.rfind("error: IoError", 0) == 0);
  CHECK(run_cli({"check", problem}).code == 2);
  CHECK(run_cli({"check", problem, corpus_path("fragment.alethe"),
                 "--trans-level", "4"})
            .code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
}

TEST_CASE("error lines are single-line") {
  Output bad = run_cli({"check", corpus_path("fragment.smt2"),
                        temp_file("bad.alethe", "(step t1 (cl\n (f")});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("error: ParseError at 2:", 0) == 0);
  CHECK(std::count(bad.err.begin(), bad.err.end(), '\n') == 1);
}

TEST_CASE("report formats") {
  Output text = run_cli({"check", corpus_path("fragment.smt2"),
                         corpus_path("fragment_verbatim.alethe")});
  CHECK(text.out ==
        "t3: resolution: no resolution chain found\nverdict: invalid\n");
  Output jsonl = run_cli({"check", corpus_path("fragment.smt2"),
                          corpus_path("fragment.alethe"), "--goal", "t6",
                          "--format", "jsonl"});
  CHECK(jsonl.code == 0);
  CHECK(jsonl.out.rfind("{\"id\":\"a0\",\"rule\":\"assume\",\"verdict\":\"ok\"}\n",
                        0) == 0);
  CHECK(jsonl.out.find("{\"verdict\":\"valid\",\"steps\":9,\"failures\":0}\n") !=
        std::string::npos);
}

TEST_CASE("elaborate pipeline") {
  std::string problem = corpus_path("trans.smt2");
  std::string proof = corpus_path("trans.alethe");
  CHECK(run_cli({"check", problem, proof, "--trans-level", "1"}).code == 1);
  CHECK(run_cli({"elaborate", problem, proof}).code == 2);
  auto out = (std::filesystem::temp_directory_path() / "alethe_cli_elab.alethe")
                 .string();
  Output elab = run_cli({"elaborate", problem, proof, "--trans-level", "1",
                         "--output", out});
  CHECK(elab.code == 0);
  CHECK(elab.out.empty());
  CHECK(run_cli({"check", problem, out, "--trans-level", "1"}).code == 0);
  Output to_stdout =
      run_cli({"elaborate", problem, proof, "--trans-level", "1", "--stdout"});
  CHECK(to_stdout.out == read_text(out));
}

TEST_CASE("prune writes the pruned proof") {
  std::string extended =
      read_text(corpus_path("fragment.alethe")) +
      "(step x1 (cl (= X X)) :rule refl)\n";
  Output r = run_cli({"prune", corpus_path("fragment.smt2"),
                      temp_file("ext.alethe", extended), "--goal", "t6",
                      "--stdout"});
  CHECK(r.code == 0);
  CHECK(r.out == read_text(corpus_path("fragment.alethe")));
}

TEST_CASE("exit codes stay within 0, 1, 2 on fuzzed inputs") {
  std::mt19937 rng(2024);
  const std::string alphabet = "()abtx01 :=-\n";
  for (const auto& entry : testing::load_manifest()) {
    std::string text = read_text(entry.proof_path);
    for (int i = 0; i < 25; ++i) {
      std::string mutated = text;
      int edits = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < edits; ++k) {
        std::size_t at = rng() % mutated.size();
        switch (rng() % 3) {
          case 0: mutated[at] = alphabet[rng() % alphabet.size()]; break;
          case 1: mutated.erase(at, 1 + rng() % 8); break;
          default: mutated.insert(at, 1, alphabet[rng() % alphabet.size()]);
        }
      }
      std::string path = temp_file("fuzz.alethe", mutated);
      for (const char* mode : {"check", "prune"}) {
        std::vector<std::string> args = {mode, entry.problem_path, path};
        if (std::string(mode) == "prune") args.push_back("--stdout");
        int code = run_cli(args).code;
        CHECK((code == 0 || code == 1 || code == 2));
      }
    }
  }
}

}  // namespace
}  // namespace alethe
