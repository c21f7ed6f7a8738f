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
#include "alethe/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "alethe/checker.hpp"
#include "alethe/elaborator.hpp"
#include "alethe/error.hpp"
#include "alethe/parser.hpp"
#include "alethe/printer.hpp"
#include "alethe/report.hpp"

namespace alethe {

namespace {

struct RunConfig {
  std::string mode;
  std::string problem_path;
  std::string proof_path;
  int trans_level = 3;
  bool skip_unknown = false;
  std::optional<std::string> goal;
  std::optional<std::string> output_path;
  bool to_stdout = false;
  std::string format = "text";
  unsigned jobs = 0;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin),
            std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_proof(const RunConfig& config, const std::string& text) {
  if (config.to_stdout) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(*config.output_path, std::ios::binary);
  out << text;
  out.close();
  if (!out) {
    throw Error(ErrorKind::IoError,
                "cannot write '" + *config.output_path + "'");
  }
}

int exit_code(Verdict verdict) {
  switch (verdict) {
    case Verdict::Valid:
    case Verdict::ValidModuloAssumptions:
    case Verdict::Incomplete:
      return 0;
    case Verdict::Invalid:
      return 1;
    case Verdict::Error:
      return 2;
  }
  return 2;
}

int execute(const RunConfig& config) {
  Problem problem = parse_problem(read_file(config.problem_path));
  std::vector<ProofCommand> proof =
      parse_proof(read_file(config.proof_path), problem);

  CheckOptions options;
  options.strictness.levels["trans"] = config.trans_level;
  options.skip_unknown = config.skip_unknown;
  options.goal = config.goal;
  options.jobs = config.jobs;

  if (config.mode == "elaborate") {
    ElaborationResult result =
        elaborate_proof(problem, proof, options.strictness);
    write_proof(config, print_proof(result.commands));
    for (const std::string& id : result.unelaborable) {
      std::cerr << id << ": trans: unelaborable\n";
    }
    proof = std::move(result.commands);
  } else if (config.mode == "prune") {
    proof = prune(proof, config.goal);
    write_proof(config, print_proof(proof));
  }

  CheckReport report = check_proof(problem, proof, options);
  std::ostream& out = config.mode == "check" ? std::cout : std::cerr;
  out << (config.format == "jsonl" ? format_jsonl(report)
                                   : format_text(report));
  out.flush();
  if (report.verdict == Verdict::Error) {
    std::cerr << "error: " << report.message << '\n';
  }
  return exit_code(report.verdict);
}

}  // namespace

int run(int argc, char** argv) {
  RunConfig config;
  CLI::App app{"Checks, elaborates and prunes Alethe proofs.", "alethe-check"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("problem", config.problem_path, "SMT-LIB problem")
        ->required();
    sub->add_option("proof", config.proof_path, "Alethe proof, '-' for stdin")
        ->required();
    sub->add_option("--trans-level", config.trans_level,
                    "Strictness of the trans rule")
        ->check(CLI::IsMember({1, 2, 3}));
    sub->add_flag("--skip-unknown", config.skip_unknown,
                  "Assume steps with unknown rules");
    sub->add_option("--goal", config.goal, "Step id of the conclusion");
    sub->add_option("--format", config.format, "Report format")
        ->check(CLI::IsMember({"text", "jsonl"}));
    sub->add_option("--jobs", config.jobs,
                    "Worker threads, 0 for one per core");
  };
  CLI::App* check = app.add_subcommand("check", "Check a proof");
  add_common(check);
  for (const char* name : {"elaborate", "prune"}) {
    CLI::App* sub = app.add_subcommand(
        name, std::string(name) == "prune" ? "Remove unused steps"
                                           : "Elaborate coarse steps");
    add_common(sub);
    auto* output = sub->add_option("--output", config.output_path,
                                   "Where to write the proof");
    auto* to_stdout = sub->add_flag("--stdout", config.to_stdout,
                                    "Write the proof to stdout");
    output->excludes(to_stdout);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: UsageError: " << e.what() << '\n';
    return 2;
  }
  config.mode = app.get_subcommands().front()->get_name();
  if (config.mode != "check" && !config.output_path && !config.to_stdout) {
    std::cerr << "error: UsageError: " << config.mode
              << " requires --output or --stdout\n";
    return 2;
  }

  try {
    return execute(config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << '\n';
  } catch (...) {
    std::cerr << "error: Internal: unknown failure\n";
  }
  return 2;
}

}  // namespace alethe
