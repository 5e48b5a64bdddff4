#pragma once

// Runs the golden command corpus in-process from the repository root and
// renders each case the same way tests/golden/regen.sh does.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace cyclo::testing {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
};

struct CliResult {
  int code = 0;
  std::string out, err;
};

inline std::filesystem::path source_dir() { return CYCLO_SOURCE_DIR; }

inline CliResult run_cli(const std::vector<std::string>& args) {
  std::filesystem::current_path(source_dir());
  std::ostringstream out, err;
  CliResult r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline std::vector<std::string> split_words(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline CliResult run_cli(const std::string& line) { return run_cli(split_words(line)); }

inline std::string render(const CliResult& r) {
  return "exit " + std::to_string(r.code) + "\n--- stdout\n" + r.out + "--- stderr\n" + r.err;
}

inline std::vector<GoldenCase> golden_corpus() {
  std::ifstream in(source_dir() / "tests/golden/commands.txt");
  std::vector<GoldenCase> out;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    auto words = split_words(line);
    if (words.empty()) continue;
    GoldenCase c{words.front(), {words.begin() + 1, words.end()}};
    out.push_back(std::move(c));
  }
  return out;
}

inline std::string golden_expected(const std::string& name) {
  std::ifstream in(source_dir() / "tests/golden" / (name + ".txt"), std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace cyclo::testing
